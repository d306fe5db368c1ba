"""Three-bit group-match codec.

Each secret group of three bits is compared against the three overlapping
windows (bit positions 2-4, 3-5, 4-6) of successive components. The index
of the first matching window is written into the component's two LSBs
(01, 10 or 11). A component with no matching window gets 00 and is
skipped; the same secret group is retried on the next component.

Only the two LSBs ever change, so each component moves by at most 3 and
the windows themselves are preserved for extraction.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .bitplane import WINDOWS, BitSeq, bits_from_chunks, windows_of_byte
from .errors import CapacityExhausted, CorruptPayload, InvalidPayloadLength, \
    UnsupportedAlgorithm
from .raster import (ALGO_GROUP3, ALGORITHM_NAMES, HEADER_COMPONENTS,
                     RgbRaster, StegoHeader, require_header_room, read_header,
                     write_header_into)

ALGORITHM_ID = ALGO_GROUP3
NAME = "group3"
MAX_PAYLOAD_BITS = 2**32 - 1


@dataclass
class EmbedStats:
    """Counters describing one embedding run.

    ``matches`` holds per-position match counts: windows 1..3 for group3,
    pairs 1..2 (third slot unused) for pair2. ``index_components`` counts
    the extra tail components written by pair2.
    """

    components_visited: int = 0
    matches: tuple[int, int, int] = (0, 0, 0)
    skips: int = 0
    payload_bits_embedded: int = 0
    index_components: int = 0
    secret_bits: int = 0

    @property
    def bits_per_component(self) -> float:
        if self.components_visited == 0:
            return 0.0
        return self.payload_bits_embedded / self.components_visited

    def as_dict(self) -> dict:
        return {
            "components_visited": self.components_visited,
            "matches": list(self.matches),
            "skips": self.skips,
            "payload_bits_embedded": self.payload_bits_embedded,
            "bits_per_component": self.bits_per_component,
            "index_components": self.index_components,
        }


class EmbedResult(NamedTuple):
    stego: RgbRaster
    stats: EmbedStats


def try_match_byte(b: int, group: int) -> int:
    """Code 1/2/3 for the first window of ``b`` equal to ``group``, else 0."""
    if not 0 <= group <= 7:
        raise ValueError(f"group must be in 0..7, got {group}")
    for code, window in enumerate(windows_of_byte(b), start=1):
        if window == group:
            return code
    return 0


# MATCH_CODE[b * 8 + g] == try_match_byte(b, g); flat list for the serial loop.
MATCH_CODE = [try_match_byte(b, g) for b in range(256) for g in range(8)]


def _scan(payload: list[int], groups: list[int]) -> tuple[list[int], list[int]]:
    """Greedy serial matching.

    Returns the LSB codes for every visited component and the per-window
    match counts. Stops as soon as all groups are placed or components run
    out.
    """
    codes: list[int] = []
    counts = [0, 0, 0, 0]
    n_groups = len(groups)
    if n_groups == 0:
        return codes, counts
    table = MATCH_CODE
    cursor = 0
    group = groups[0]
    for b in payload:
        code = table[b * 8 + group]
        codes.append(code)
        counts[code] += 1
        if code:
            cursor += 1
            if cursor == n_groups:
                break
            group = groups[cursor]
    return codes, counts


def _check_secret(secret: BitSeq) -> None:
    if len(secret) > MAX_PAYLOAD_BITS:
        raise InvalidPayloadLength(
            f"secret has {len(secret)} bits; the header holds at most {MAX_PAYLOAD_BITS}")


def embed(cover: RgbRaster, secret: BitSeq) -> EmbedResult:
    require_header_room(cover)
    _check_secret(secret)
    groups = secret.groups().tolist()
    comps = cover.components.copy()
    write_header_into(comps, StegoHeader(ALGORITHM_ID, len(secret)))

    codes, counts = _scan(comps[HEADER_COMPONENTS:].tolist(), groups)
    placed = counts[1] + counts[2] + counts[3]
    stats = EmbedStats(
        components_visited=len(codes),
        matches=(counts[1], counts[2], counts[3]),
        skips=counts[0],
        payload_bits_embedded=3 * placed,
        secret_bits=len(secret),
    )
    if placed < len(groups):
        exc = CapacityExhausted(
            f"group3: placed {placed} of {len(groups)} groups "
            f"({min(3 * placed, len(secret))} of {len(secret)} bits) before the "
            f"image ran out of components",
            placed=min(3 * placed, len(secret)), required=len(secret))
        exc.stats = stats
        raise exc

    end = HEADER_COMPONENTS + len(codes)
    comps[HEADER_COMPONENTS:end] = (comps[HEADER_COMPONENTS:end] & 0xFC) | \
        np.asarray(codes, dtype=np.uint8)
    return EmbedResult(cover.replace_components(comps), stats)


def extract(stego: RgbRaster) -> BitSeq:
    header = read_header(stego)
    if header.algorithm_id != ALGORITHM_ID:
        raise UnsupportedAlgorithm(
            f"image was embedded with {ALGORITHM_NAMES[header.algorithm_id]}, not {NAME}")
    length = header.payload_bit_length
    n_groups = -(-length // 3)
    payload = stego.components[HEADER_COMPONENTS:]
    codes = payload & 3
    carriers = np.flatnonzero(codes)[:n_groups]
    if carriers.size < n_groups:
        raise CorruptPayload(
            f"header declares {length} bits ({n_groups} groups) but only "
            f"{carriers.size} groups are present")
    values = WINDOWS[payload[carriers], codes[carriers] - 1]
    return bits_from_chunks(values, 3, length)


def capacity(cover: RgbRaster, secret: BitSeq) -> int:
    """Number of leading bits of ``secret`` this cover can carry.

    Capacity is data dependent: it depends on which groups the secret
    contains. Any prefix of the returned length embeds successfully.
    """
    require_header_room(cover)
    groups = secret.groups().tolist()
    _, counts = _scan(cover.components[HEADER_COMPONENTS:].tolist(), groups)
    placed = counts[1] + counts[2] + counts[3]
    return min(3 * placed, len(secret))


def capacity_best_case(raster: RgbRaster) -> int:
    """Upper bound in bits: every payload component matches (3 bits each)."""
    require_header_room(raster)
    return 3 * (len(raster) - HEADER_COMPONENTS)
