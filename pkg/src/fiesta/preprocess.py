"""Intensity windowing, outlier clipping, and resizing for raw slices."""

from __future__ import annotations

import numpy as np

from .types import InvalidInputError, LabelMap, minmax_normalize

HU_WINDOW_DEFAULT = (-275.0, 125.0)
TOP_FRACTION_DEFAULT = 0.005


def hu_window(img: np.ndarray, lo: float = HU_WINDOW_DEFAULT[0], hi: float = HU_WINDOW_DEFAULT[1]) -> np.ndarray:
    """Clamp raw intensities to [lo, hi] and map that window onto [0, 1]."""
    if lo >= hi:
        raise InvalidInputError("window requires lo < hi")
    return (np.clip(img, lo, hi) - lo) / (hi - lo)


def percentile_clip(img: np.ndarray, top_fraction: float = TOP_FRACTION_DEFAULT) -> np.ndarray:
    """Clamp the brightest `top_fraction` of pixels to the (1 - top_fraction)
    quantile (linear-interpolation definition), then min-max to [0, 1]."""
    if not 0.0 < top_fraction < 1.0:
        raise InvalidInputError("top_fraction must lie in (0, 1)")
    q = float(np.quantile(img, 1.0 - top_fraction))
    return minmax_normalize(np.minimum(img, q))


def _source_coords(out_size: int, in_size: int) -> np.ndarray:
    # Edge-aligned corners: output i samples i*(in-1)/(out-1); a single
    # output pixel samples the input center (in-1)/2.
    if out_size == 1:
        return np.array([(in_size - 1) / 2.0])
    return np.arange(out_size, dtype=np.float64) * (in_size - 1) / (out_size - 1)


def resize_bilinear(img: np.ndarray, out_h: int, out_w: int) -> np.ndarray:
    """Bilinear resample with edge-aligned corners."""
    if out_h < 1 or out_w < 1:
        raise InvalidInputError("output dimensions must be >= 1")
    h, w = img.shape
    if (out_h, out_w) == (h, w):
        return img.copy()
    ys = _source_coords(out_h, h)
    xs = _source_coords(out_w, w)
    y0 = np.clip(np.floor(ys).astype(np.int64), 0, h - 1)
    x0 = np.clip(np.floor(xs).astype(np.int64), 0, w - 1)
    y1 = np.minimum(y0 + 1, h - 1)
    x1 = np.minimum(x0 + 1, w - 1)
    wy = (ys - y0)[:, None]
    wx = (xs - x0)[None, :]
    top = img[np.ix_(y0, x0)] * (1 - wx) + img[np.ix_(y0, x1)] * wx
    bot = img[np.ix_(y1, x0)] * (1 - wx) + img[np.ix_(y1, x1)] * wx
    return top * (1 - wy) + bot * wy


def resize_nearest_labels(labels: LabelMap, out_h: int, out_w: int) -> LabelMap:
    """Nearest-neighbor resample of a label map under the same alignment
    (source coordinate rounded half-to-even)."""
    if out_h < 1 or out_w < 1:
        raise InvalidInputError("output dimensions must be >= 1")
    h, w = labels.data.shape
    ys = np.clip(np.rint(_source_coords(out_h, h)).astype(np.int64), 0, h - 1)
    xs = np.clip(np.rint(_source_coords(out_w, w)).astype(np.int64), 0, w - 1)
    return LabelMap(data=labels.data[np.ix_(ys, xs)], num_classes=labels.num_classes)


def center_crop_square(img: np.ndarray) -> np.ndarray:
    """Largest centered square crop (used ahead of the standard resize)."""
    h, w = img.shape
    side = min(h, w)
    top = (h - side) // 2
    left = (w - side) // 2
    return img[top : top + side, left : left + side]
