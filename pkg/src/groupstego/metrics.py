"""MSE / PSNR between a cover and a stego raster.

MSE averages the squared difference over every R, G and B component
(3 * m * n terms); alpha is never compared. PSNR uses a peak of 255 and
is ``inf`` for identical images.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch
from .raster import RgbRaster

MAX_VALUE = 255


@dataclass(frozen=True)
class QualityReport:
    mse: float
    psnr_db: float
    max_component_delta: int
    components_changed: int

    def as_dict(self) -> dict:
        return {
            "mse": self.mse,
            "psnr_db": format_db(self.psnr_db),
            "max_component_delta": self.max_component_delta,
            "components_changed": self.components_changed,
        }


def format_db(value: float):
    """JSON-friendly PSNR: the string "inf" for identical images."""
    return "inf" if math.isinf(value) else value


def _diff(a: RgbRaster, b: RgbRaster) -> np.ndarray:
    if a.rgb.shape != b.rgb.shape:
        raise DimensionMismatch(
            f"{a.width}x{a.height} vs {b.width}x{b.height}")
    return a.rgb.astype(np.int64) - b.rgb.astype(np.int64)


def mse(a: RgbRaster, b: RgbRaster) -> float:
    d = _diff(a, b)
    if d.size == 0:
        return 0.0
    return float(np.square(d).sum()) / d.size


def psnr_from_mse(value: float) -> float:
    if value == 0:
        return math.inf
    return 10.0 * math.log10(MAX_VALUE**2 / value)


def psnr(a: RgbRaster, b: RgbRaster) -> float:
    return psnr_from_mse(mse(a, b))


def quality_report(cover: RgbRaster, stego: RgbRaster) -> QualityReport:
    d = _diff(cover, stego)
    err = float(np.square(d).sum()) / d.size if d.size else 0.0
    return QualityReport(
        mse=err,
        psnr_db=psnr_from_mse(err),
        max_component_delta=int(np.abs(d).max()) if d.size else 0,
        components_changed=int(np.count_nonzero(d)),
    )
