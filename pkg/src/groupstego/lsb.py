"""Plain one-bit LSB insertion, the capacity yardstick (1 bit per component)."""

from __future__ import annotations

from .bitplane import BitSeq
from .errors import CapacityExhausted, CorruptPayload, UnsupportedAlgorithm
from .groupmatch import EmbedResult, EmbedStats, _check_secret
from .raster import (ALGO_LSB1, ALGORITHM_NAMES, HEADER_COMPONENTS, RgbRaster,
                     StegoHeader, read_header, require_header_room,
                     write_header_into)

ALGORITHM_ID = ALGO_LSB1
NAME = "lsb1"


def capacity(raster: RgbRaster) -> int:
    require_header_room(raster)
    return len(raster) - HEADER_COMPONENTS


def embed(cover: RgbRaster, secret: BitSeq) -> EmbedResult:
    _check_secret(secret)
    room = capacity(cover)
    if len(secret) > room:
        raise CapacityExhausted(
            f"lsb1: secret has {len(secret)} bits, image holds {room}",
            placed=0, required=len(secret))
    comps = cover.components.copy()
    write_header_into(comps, StegoHeader(ALGORITHM_ID, len(secret)))
    end = HEADER_COMPONENTS + len(secret)
    comps[HEADER_COMPONENTS:end] = (comps[HEADER_COMPONENTS:end] & 0xFE) | secret.bits
    stats = EmbedStats(components_visited=len(secret),
                       payload_bits_embedded=len(secret),
                       secret_bits=len(secret))
    return EmbedResult(cover.replace_components(comps), stats)


def extract(stego: RgbRaster) -> BitSeq:
    header = read_header(stego)
    if header.algorithm_id != ALGORITHM_ID:
        raise UnsupportedAlgorithm(
            f"image was embedded with {ALGORITHM_NAMES[header.algorithm_id]}, not {NAME}")
    length = header.payload_bit_length
    if length > len(stego) - HEADER_COMPONENTS:
        raise CorruptPayload(
            f"header declares {length} bits, image holds {len(stego) - HEADER_COMPONENTS}")
    return BitSeq(stego.components[HEADER_COMPONENTS:HEADER_COMPONENTS + length] & 1)
