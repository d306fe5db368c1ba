"""RGB raster model, stego header and PNG I/O.

Components are traversed in a single fixed order: component ``c`` belongs
to pixel ``c // 3`` (row-major) and channel ``c % 3`` (0=R, 1=G, 2=B).

The first 28 components carry a 56-bit header in their two LSBs::

    bits  0..15  magic 0x5347 ("SG")
    bits 16..23  algorithm id (1 = lsb1, 2 = pair2, 3 = group3)
    bits 24..55  payload bit length, big-endian
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np
from PIL import Image

from .bitplane import BitSeq
from .errors import (CapacityExhausted, ImageTooSmall, NotAStegoImage,
                     UnsupportedAlgorithm, UnsupportedImageFormat)

MAGIC = 0x5347
HEADER_BITS = 56
HEADER_COMPONENTS = 28

ALGO_LSB1 = 1
ALGO_PAIR2 = 2
ALGO_GROUP3 = 3
ALGORITHM_IDS = {"lsb1": ALGO_LSB1, "pair2": ALGO_PAIR2, "group3": ALGO_GROUP3}
ALGORITHM_NAMES = {v: k for k, v in ALGORITHM_IDS.items()}


class RgbRaster:
    """Immutable width x height x 3 array of 8-bit components.

    An optional alpha plane is carried along untouched; it never holds
    payload and is ignored by the metrics.
    """

    __slots__ = ("_rgb", "_alpha")

    def __init__(self, rgb: np.ndarray, alpha: np.ndarray | None = None):
        rgb = np.asarray(rgb)
        if rgb.ndim != 3 or rgb.shape[2] != 3:
            raise ValueError(f"expected an (H, W, 3) array, got shape {rgb.shape}")
        if rgb.dtype != np.uint8:
            if rgb.size and (rgb.min() < 0 or rgb.max() > 255):
                raise ValueError("components must lie in 0..255")
        self._rgb = np.array(rgb, dtype=np.uint8, copy=True)
        self._rgb.setflags(write=False)
        if alpha is not None:
            alpha = np.array(alpha, dtype=np.uint8, copy=True)
            if alpha.shape != rgb.shape[:2]:
                raise ValueError("alpha plane must match the raster's height x width")
            alpha.setflags(write=False)
        self._alpha = alpha

    @classmethod
    def from_components(cls, width: int, height: int, components,
                        alpha: np.ndarray | None = None) -> "RgbRaster":
        flat = np.asarray(components)
        if flat.size != 3 * width * height:
            raise ValueError(
                f"need {3 * width * height} components, got {flat.size}")
        return cls(flat.reshape(height, width, 3), alpha)

    @property
    def width(self) -> int:
        return self._rgb.shape[1]

    @property
    def height(self) -> int:
        return self._rgb.shape[0]

    @property
    def rgb(self) -> np.ndarray:
        return self._rgb

    @property
    def alpha(self) -> np.ndarray | None:
        return self._alpha

    @property
    def components(self) -> np.ndarray:
        """Read-only flat view in traversal order."""
        return self._rgb.reshape(-1)

    def __len__(self) -> int:
        return self._rgb.size

    def replace_components(self, components: np.ndarray) -> "RgbRaster":
        """New raster with the same geometry and alpha but new components."""
        return RgbRaster(np.asarray(components, dtype=np.uint8)
                         .reshape(self._rgb.shape), self._alpha)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RgbRaster):
            return NotImplemented
        if (self._alpha is None) != (other._alpha is None):
            return False
        same_alpha = self._alpha is None or np.array_equal(self._alpha, other._alpha)
        return np.array_equal(self._rgb, other._rgb) and same_alpha

    def __repr__(self) -> str:
        extra = "+alpha" if self._alpha is not None else ""
        return f"RgbRaster({self.width}x{self.height}{extra})"


def component_location(index: int, width: int) -> tuple[int, int, int]:
    """Map a component index to (row, column, channel)."""
    pixel, channel = divmod(index, 3)
    row, col = divmod(pixel, width)
    return row, col, channel


@dataclass(frozen=True)
class StegoHeader:
    algorithm_id: int
    payload_bit_length: int
    magic: int = MAGIC

    def to_bits(self) -> BitSeq:
        if not 0 <= self.payload_bit_length < 2**32:
            raise ValueError("payload_bit_length must fit in 32 bits")
        word = (self.magic << 40) | (self.algorithm_id << 32) | self.payload_bit_length
        return BitSeq((word >> (HEADER_BITS - 1 - i)) & 1 for i in range(HEADER_BITS))

    def to_codes(self) -> np.ndarray:
        """The 28 two-bit codes stored in components 0..27."""
        return self.to_bits().pairs()


class Region(NamedTuple):
    """Half-open component range ``[start, end)``."""

    start: int
    end: int

    def __len__(self) -> int:
        return self.end - self.start


def require_header_room(raster: RgbRaster) -> None:
    if len(raster) < HEADER_COMPONENTS:
        raise ImageTooSmall(
            f"image has {len(raster)} components; the header alone needs "
            f"{HEADER_COMPONENTS}")


def write_header_into(components: np.ndarray, header: StegoHeader) -> None:
    """In-place variant used by the codecs on their working copy."""
    components[:HEADER_COMPONENTS] = (
        (components[:HEADER_COMPONENTS] & 0xFC) | header.to_codes())


def write_header(raster: RgbRaster, header: StegoHeader) -> RgbRaster:
    require_header_room(raster)
    out = raster.components.copy()
    write_header_into(out, header)
    return raster.replace_components(out)


def read_header(raster: RgbRaster) -> StegoHeader:
    require_header_room(raster)
    codes = raster.components[:HEADER_COMPONENTS] & 3
    word = 0
    for code in codes.tolist():
        word = (word << 2) | code
    magic = word >> 40
    algorithm_id = (word >> 32) & 0xFF
    length = word & 0xFFFFFFFF
    if magic != MAGIC:
        raise NotAStegoImage(f"header magic is {magic:#06x}, expected {MAGIC:#06x}")
    if algorithm_id not in ALGORITHM_NAMES:
        raise UnsupportedAlgorithm(f"unknown algorithm id {algorithm_id}")
    return StegoHeader(algorithm_id, length, magic)


def index_region(raster: RgbRaster, index_bit_count: int) -> Region:
    """Tail region holding the pair-match index codes, two bits per component.

    Codes are laid backward: code ``k`` lives in component ``N - 1 - k``.
    """
    if index_bit_count < 0 or index_bit_count % 2:
        raise ValueError("index_bit_count must be a non-negative even number")
    require_header_room(raster)
    n = len(raster)
    needed = index_bit_count // 2
    if needed > n - HEADER_COMPONENTS:
        raise CapacityExhausted(
            f"index region needs {needed} components, only "
            f"{n - HEADER_COMPONENTS} available after the header")
    return Region(n - needed, n)


def payload_region(raster: RgbRaster, index_bit_count: int = 0) -> Region:
    """Components available for payload once the header and index region are reserved."""
    idx = index_region(raster, index_bit_count)
    return Region(HEADER_COMPONENTS, idx.start)


def _png_bit_depth(path) -> int | None:
    with open(path, "rb") as fh:
        head = fh.read(33)
    if head[:8] != b"\x89PNG\r\n\x1a\n" or head[12:16] != b"IHDR" or len(head) < 25:
        return None
    return head[24]


def load_png(path: str | os.PathLike) -> RgbRaster:
    """Load an 8-bit PNG as an :class:`RgbRaster`.

    Grayscale and palette images are expanded to RGB; an alpha channel is
    kept separately. 16-bit images are rejected.
    """
    depth = _png_bit_depth(path)
    if depth is None:
        raise UnsupportedImageFormat(f"{path}: not a PNG file")
    if depth > 8:
        raise UnsupportedImageFormat(f"{path}: {depth}-bit PNGs are not supported")
    try:
        with Image.open(path) as img:
            img.load()
            mode = img.mode
            if mode == "P":
                img = img.convert("RGBA" if "transparency" in img.info else "RGB")
            elif mode in ("1", "L"):
                img = img.convert("RGB")
            elif mode == "LA":
                img = img.convert("RGBA")
            elif mode not in ("RGB", "RGBA"):
                raise UnsupportedImageFormat(f"{path}: unsupported PNG mode {mode}")
            arr = np.asarray(img, dtype=np.uint8)
    except UnsupportedImageFormat:
        raise
    except (OSError, SyntaxError, ValueError) as exc:
        raise UnsupportedImageFormat(f"{path}: {exc}") from exc
    if arr.shape[2] == 4:
        return RgbRaster(arr[:, :, :3], arr[:, :, 3])
    return RgbRaster(arr)


def save_png(raster: RgbRaster, path: str | os.PathLike) -> None:
    if raster.alpha is not None:
        arr = np.dstack([raster.rgb, raster.alpha])
        Image.fromarray(arr, "RGBA").save(path, format="PNG")
    else:
        Image.fromarray(np.ascontiguousarray(raster.rgb), "RGB").save(path, format="PNG")

