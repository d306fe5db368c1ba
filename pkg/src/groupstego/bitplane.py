"""Bit-level primitives shared by all codecs.

Bit positions inside a component byte are numbered 1..8 starting at the
most significant bit::

    value(byte, p) = (byte >> (8 - p)) & 1

The group-match codec reads three overlapping 3-bit windows at positions
{2,3,4}, {3,4,5} and {4,5,6}. The pair-match codec reads the pairs {3,4}
and {5,6}. Both codecs write their position code into positions 7..8, so
neither the windows nor the pairs are ever disturbed by embedding.
"""

from __future__ import annotations

from typing import Iterable

import numpy as np

from .errors import IndexOutOfRange, InvalidPayloadLength


def bit_at(b: int, position: int) -> int:
    """Return bit ``position`` (1 = MSB, 8 = LSB) of byte ``b``."""
    if not 1 <= position <= 8:
        raise ValueError(f"bit position must be in 1..8, got {position}")
    return (b >> (8 - position)) & 1


class BitSeq:
    """Immutable ordered sequence of bits.

    Backed by a read-only ``uint8`` array holding only 0s and 1s. No
    padding is ever stored: ``len(seq)`` is the exact bit count.
    """

    __slots__ = ("_bits",)

    def __init__(self, bits: Iterable[int] | np.ndarray = ()):
        arr = np.array(list(bits) if not isinstance(bits, np.ndarray) else bits,
                       dtype=np.int64).ravel()
        if arr.size and ((arr < 0) | (arr > 1)).any():
            raise ValueError("BitSeq elements must be 0 or 1")
        arr = arr.astype(np.uint8)
        arr.setflags(write=False)
        self._bits = arr

    @property
    def bits(self) -> np.ndarray:
        return self._bits

    @property
    def length(self) -> int:
        return int(self._bits.size)

    def __len__(self) -> int:
        return int(self._bits.size)

    def __iter__(self):
        return iter(self._bits.tolist())

    def __getitem__(self, item):
        if isinstance(item, slice):
            return BitSeq(self._bits[item])
        return int(self._bits[item])

    def __eq__(self, other) -> bool:
        if not isinstance(other, BitSeq):
            return NotImplemented
        return np.array_equal(self._bits, other._bits)

    def __hash__(self):
        return hash((len(self), self._bits.tobytes()))

    def __repr__(self) -> str:
        shown = "".join(map(str, self._bits[:48].tolist()))
        more = "..." if len(self) > 48 else ""
        return f"BitSeq({len(self)} bits: {shown}{more})"

    @classmethod
    def from_octets(cls, data: bytes) -> "BitSeq":
        return bits_from_octets(data)

    def to_octets(self) -> bytes:
        return octets_from_bits(self)

    def groups(self) -> np.ndarray:
        """All 3-bit groups as integers, final group zero-padded."""
        return _chunk_values(self._bits, 3)

    def pairs(self) -> np.ndarray:
        """All 2-bit pairs as integers, final pair zero-padded."""
        return _chunk_values(self._bits, 2)


def _chunk_values(bits: np.ndarray, width: int) -> np.ndarray:
    n = -(-bits.size // width)
    padded = np.zeros(n * width, dtype=np.uint8)
    padded[: bits.size] = bits
    weights = 1 << np.arange(width - 1, -1, -1)
    return (padded.reshape(n, width) * weights).sum(axis=1).astype(np.uint8)


def bits_from_chunks(values: np.ndarray, width: int, length: int) -> BitSeq:
    """Expand ``width``-bit integers MSB-first and truncate to ``length`` bits."""
    values = np.asarray(values, dtype=np.uint8)
    shifts = np.arange(width - 1, -1, -1, dtype=np.uint8)
    bits = ((values[:, None] >> shifts) & 1).ravel()
    if bits.size < length:
        raise ValueError(f"only {bits.size} bits available, {length} requested")
    return BitSeq(bits[:length])


def bits_from_octets(data: bytes) -> BitSeq:
    arr = np.frombuffer(bytes(data), dtype=np.uint8)
    return BitSeq(np.unpackbits(arr))


def octets_from_bits(seq: BitSeq) -> bytes:
    if len(seq) % 8:
        raise InvalidPayloadLength(
            f"bit length {len(seq)} is not a multiple of 8")
    return np.packbits(seq.bits).tobytes()


def group_at(seq: BitSeq, group_index: int) -> int:
    n = -(-len(seq) // 3)
    if not 0 <= group_index < n:
        raise IndexOutOfRange(f"group {group_index} out of range for {n} groups")
    value = 0
    for k in range(3 * group_index, 3 * group_index + 3):
        value = (value << 1) | (seq[k] if k < len(seq) else 0)
    return value


def pair_at(seq: BitSeq, pair_index: int) -> int:
    n = -(-len(seq) // 2)
    if not 0 <= pair_index < n:
        raise IndexOutOfRange(f"pair {pair_index} out of range for {n} pairs")
    value = 0
    for k in range(2 * pair_index, 2 * pair_index + 2):
        value = (value << 1) | (seq[k] if k < len(seq) else 0)
    return value


def windows_of_byte(b: int) -> tuple[int, int, int]:
    """3-bit windows at positions 2-4, 3-5 and 4-6."""
    return (b >> 4) & 7, (b >> 3) & 7, (b >> 2) & 7


def pairs_of_byte(b: int) -> tuple[int, int]:
    """2-bit pairs at positions 3-4 and 5-6."""
    return (b >> 4) & 3, (b >> 2) & 3


def write_lsb2(b: int, code: int) -> int:
    if not 0 <= code <= 3:
        raise ValueError(f"code must be in 0..3, got {code}")
    return (b & 0xFC) | code


def read_lsb2(b: int) -> int:
    return b & 3


def write_lsb1(b: int, bit: int) -> int:
    if bit not in (0, 1):
        raise ValueError(f"bit must be 0 or 1, got {bit}")
    return (b & 0xFE) | bit


def read_lsb1(b: int) -> int:
    return b & 1


# Lookup tables indexed by byte value, for vectorised codec paths.
WINDOWS = np.array([windows_of_byte(b) for b in range(256)], dtype=np.uint8)
PAIRS = np.array([pairs_of_byte(b) for b in range(256)], dtype=np.uint8)
WINDOWS.setflags(write=False)
PAIRS.setflags(write=False)
