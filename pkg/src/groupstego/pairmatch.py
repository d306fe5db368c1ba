"""Two-bit pair-and-match codec (the baseline the group-match codec improves on).

Secret bits are consumed two at a time, one payload component per pair.
A pair is compared with the component's bit pairs at positions 3-4 and 5-6:

    index (1, 0)  code 2   pair equals bits 3-4, component left untouched
    index (1, 1)  code 3   pair equals bits 5-6, component left untouched
    index (0, 0)  code 0   no match, the pair is written into the two LSBs

The index codes go to a separate region at the tail of the image, one code
per component, laid backward from the last component.
"""

from __future__ import annotations

import numpy as np

from .bitplane import PAIRS, BitSeq, bits_from_chunks, pairs_of_byte
from .errors import CapacityExhausted, CorruptPayload, UnsupportedAlgorithm
from .groupmatch import EmbedResult, EmbedStats, _check_secret
from .raster import (ALGO_PAIR2, ALGORITHM_NAMES, HEADER_COMPONENTS,
                     RgbRaster, StegoHeader, payload_region, read_header,
                     require_header_room, write_header_into)

ALGORITHM_ID = ALGO_PAIR2
NAME = "pair2"

NO_MATCH = 0
FIRST_PAIR = 2
SECOND_PAIR = 3


def match_pairs(b: int, pair: int) -> int:
    if not 0 <= pair <= 3:
        raise ValueError(f"pair must be in 0..3, got {pair}")
    p1, p2 = pairs_of_byte(b)
    if pair == p1:
        return FIRST_PAIR
    if pair == p2:
        return SECOND_PAIR
    return NO_MATCH


def max_pairs(raster: RgbRaster) -> int:
    """Largest pair count whose payload and index regions both fit."""
    require_header_room(raster)
    return (len(raster) - HEADER_COMPONENTS) // 2


def embed(cover: RgbRaster, secret: BitSeq) -> EmbedResult:
    require_header_room(cover)
    _check_secret(secret)
    pairs = secret.pairs()
    n_pairs = pairs.size
    try:
        region = payload_region(cover, 2 * n_pairs)
    except CapacityExhausted as exc:
        raise CapacityExhausted(
            f"pair2: {n_pairs} index codes do not fit ({exc})",
            placed=0, required=len(secret)) from None
    if n_pairs > len(region):
        raise CapacityExhausted(
            f"pair2: {n_pairs} pairs need {2 * n_pairs} components after the "
            f"header, only {len(cover) - HEADER_COMPONENTS} available",
            placed=0, required=len(secret))

    comps = cover.components.copy()
    write_header_into(comps, StegoHeader(ALGORITHM_ID, len(secret)))
    n = len(comps)
    seg = comps[HEADER_COMPONENTS:HEADER_COMPONENTS + n_pairs]
    first, second = PAIRS[seg, 0], PAIRS[seg, 1]
    codes = np.where(pairs == first, FIRST_PAIR,
                     np.where(pairs == second, SECOND_PAIR, NO_MATCH)).astype(np.uint8)
    miss = codes == NO_MATCH
    seg[miss] = (seg[miss] & 0xFC) | pairs[miss]
    # code k lives in component n - 1 - k
    tail = comps[n - n_pairs:]
    tail[:] = (tail & 0xFC) | codes[::-1]

    stats = EmbedStats(
        components_visited=n_pairs,
        matches=(int((codes == FIRST_PAIR).sum()), int((codes == SECOND_PAIR).sum()), 0),
        skips=int(miss.sum()),
        payload_bits_embedded=2 * n_pairs,
        index_components=n_pairs,
        secret_bits=len(secret),
    )
    return EmbedResult(cover.replace_components(comps), stats)


def extract(stego: RgbRaster) -> BitSeq:
    header = read_header(stego)
    if header.algorithm_id != ALGORITHM_ID:
        raise UnsupportedAlgorithm(
            f"image was embedded with {ALGORITHM_NAMES[header.algorithm_id]}, not {NAME}")
    length = header.payload_bit_length
    n_pairs = -(-length // 2)
    comps = stego.components
    n = len(comps)
    if HEADER_COMPONENTS + 2 * n_pairs > n:
        raise CorruptPayload(
            f"header declares {length} bits but the image holds at most "
            f"{2 * ((n - HEADER_COMPONENTS) // 2)}")
    codes = (comps[n - n_pairs:] & 3)[::-1]
    if (codes == 1).any():
        raise CorruptPayload("index region contains the invalid code 01")
    seg = comps[HEADER_COMPONENTS:HEADER_COMPONENTS + n_pairs]
    values = np.where(codes == FIRST_PAIR, PAIRS[seg, 0],
                      np.where(codes == SECOND_PAIR, PAIRS[seg, 1], seg & 3))
    return bits_from_chunks(values, 2, length)
