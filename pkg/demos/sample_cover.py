"""Synthetic stand-in for a photographic cover image (no test images ship with the package)."""

import numpy as np

from groupstego import RgbRaster


def photo_like(width=512, height=512, seed=0):
    rng = np.random.default_rng(seed)
    y, x = np.mgrid[0:height, 0:width].astype(float)
    r = 0.45 * x + 40 * np.sin(y / 37.0) + 60
    g = 0.40 * y + 30 * np.cos(x / 23.0) + 50
    b = 0.25 * (x + y) + 25 * np.sin((x - y) / 51.0) + 40
    img = np.stack([r, g, b], axis=-1) + rng.normal(0, 6, size=(height, width, 3))
    return RgbRaster(np.clip(np.rint(img), 0, 255).astype(np.uint8))
