"""Image steganography by 3-bit group matching, 2-bit pair matching and plain LSB.

Typical use::

    from groupstego import load_png, embed_message, extract_message

    cover = load_png("cover.png")
    stego, stats = embed_message(cover, b"attack at dawn", algo="group3")
    assert extract_message(stego) == b"attack at dawn"
"""

from __future__ import annotations

from . import groupmatch, lsb, pairmatch
from .bitplane import BitSeq, bits_from_octets, octets_from_bits
from .errors import (CapacityExhausted, CorruptPayload, DimensionMismatch,
                     ImageTooSmall, IndexOutOfRange, InvalidPayloadLength,
                     NotAStegoImage, StegoError, UnsupportedAlgorithm,
                     UnsupportedImageFormat)
from .groupmatch import EmbedResult, EmbedStats
from .metrics import QualityReport, mse, psnr, quality_report
from .raster import (ALGORITHM_IDS, ALGORITHM_NAMES, RgbRaster, StegoHeader,
                     load_png, read_header, save_png)

CODECS = {
    groupmatch.NAME: groupmatch,
    pairmatch.NAME: pairmatch,
    lsb.NAME: lsb,
}


def codec_for(algo):
    """Codec module for a name ("group3") or header id (3)."""
    name = ALGORITHM_NAMES.get(algo, algo)
    try:
        return CODECS[name]
    except KeyError:
        raise UnsupportedAlgorithm(f"unknown algorithm {algo!r}") from None


def embed(cover: RgbRaster, secret: BitSeq, algo: str = "group3") -> EmbedResult:
    return codec_for(algo).embed(cover, secret)


def extract(stego: RgbRaster) -> BitSeq:
    """Extract with the codec named in the stego header."""
    return codec_for(read_header(stego).algorithm_id).extract(stego)


def embed_message(cover: RgbRaster, data: bytes, algo: str = "group3") -> EmbedResult:
    return embed(cover, bits_from_octets(data), algo)


def extract_message(stego: RgbRaster) -> bytes:
    return octets_from_bits(extract(stego))


__all__ = [
    "BitSeq", "CODECS", "CapacityExhausted", "CorruptPayload", "DimensionMismatch",
    "EmbedResult", "EmbedStats", "ImageTooSmall", "IndexOutOfRange",
    "InvalidPayloadLength", "NotAStegoImage", "QualityReport", "RgbRaster",
    "StegoError", "StegoHeader", "UnsupportedAlgorithm", "UnsupportedImageFormat",
    "bits_from_octets", "codec_for", "embed", "embed_message", "extract",
    "extract_message", "groupmatch", "load_png", "lsb", "mse", "octets_from_bits",
    "pairmatch", "psnr", "quality_report", "read_header", "save_png",
]
