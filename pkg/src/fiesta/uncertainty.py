"""Entropy maps from class probabilities, their fusion into a guidance
field, and the guided fusion of the two augmented views.
"""

from __future__ import annotations

import numpy as np

from .config import AugConfig
from .types import (
    InvalidInputError,
    LabelMap,
    minmax_normalize,
    validate_probability_map,
    validate_uncertainty_map,
)


def softmax(logits: np.ndarray) -> np.ndarray:
    """Per-pixel softmax over the last axis of an (H, W, C) logit field."""
    if logits.ndim != 3:
        raise InvalidInputError("logits must be a 3-D (H, W, C) array")
    if not np.isfinite(logits).all():
        raise InvalidInputError("logits must be finite")
    shifted = logits - logits.max(axis=2, keepdims=True)
    e = np.exp(shifted)
    return e / e.sum(axis=2, keepdims=True)


def entropy_map(prob: np.ndarray) -> np.ndarray:
    """Shannon entropy per pixel, normalized by log2(C) into [0, 1]."""
    validate_probability_map(prob)
    c = prob.shape[2]
    if c < 2:
        raise InvalidInputError("entropy needs at least two classes")
    terms = np.zeros_like(prob, dtype=np.float64)
    nz = prob > 0
    terms[nz] = prob[nz] * np.log2(prob[nz])
    raw = -terms.sum(axis=2)
    return np.clip(raw / np.log2(c), 0.0, 1.0)


def _gaussian_kernel(sigma: float, radius: int) -> np.ndarray:
    offsets = np.arange(-radius, radius + 1, dtype=np.float64)
    k = np.exp(-(offsets**2) / (2.0 * sigma * sigma))
    return k / k.sum()


def gaussian_blur(u: np.ndarray, sigma: float, radius: int) -> np.ndarray:
    """Separable Gaussian smoothing with replicate borders.

    The 1-D kernel is renormalized to sum 1, so constants are fixpoints
    and the output stays within the input range.
    """
    if sigma <= 0:
        raise InvalidInputError("blur sigma must be > 0")
    kernel = _gaussian_kernel(sigma, radius)
    padded = np.pad(u, radius, mode="edge")
    rows = np.zeros((u.shape[0] + 2 * radius, u.shape[1]), dtype=np.float64)
    for i, kv in enumerate(kernel):
        rows += kv * padded[:, i : i + u.shape[1]]
    out = np.zeros_like(u, dtype=np.float64)
    for i, kv in enumerate(kernel):
        out += kv * rows[i : i + u.shape[0], :]
    return out


def aggregate_uncertainty(uc: np.ndarray, ul: np.ndarray) -> np.ndarray:
    """Pre-blur fusion 0.5 * (max(uc, ul) + (uc + ul)/2): pointwise halfway
    between the elementwise max and the elementwise mean."""
    if uc.shape != ul.shape:
        raise InvalidInputError("uncertainty map dimensions must match")
    validate_uncertainty_map(uc, "uc")
    validate_uncertainty_map(ul, "ul")
    return 0.5 * (np.maximum(uc, ul) + (uc + ul) / 2.0)


def fuse_guidance(uc: np.ndarray, ul: np.ndarray, cfg: AugConfig) -> np.ndarray:
    """Smoothed guidance field: GaussianBlur(aggregate(uc, ul)), clamped."""
    fused = aggregate_uncertainty(uc, ul)
    return np.clip(gaussian_blur(fused, cfg.blur_sigma, cfg.blur_radius), 0.0, 1.0)


def constraint_probability(u_map: np.ndarray, labels: LabelMap) -> float:
    """Mean guidance over foreground pixels (labels != 0); falls back to
    the global mean when the slice has no foreground."""
    fg = labels.data != 0
    if fg.any():
        return float(u_map[fg].mean())
    return float(u_map.mean())


def mutual_augment(
    x_ca: np.ndarray, x_la: np.ndarray, u_map: np.ndarray, labels: LabelMap
) -> np.ndarray:
    """Fuse the two augmented views under the guidance field.

    When the foreground-mean constraint probability is below 0.5 the
    views are blended pointwise (x_ca*U + x_la*(1-U)); otherwise the raw
    sum is taken and min-max renormalized back into [0, 1].
    """
    if x_ca.shape != x_la.shape or x_ca.shape != u_map.shape or x_ca.shape != labels.data.shape:
        raise InvalidInputError("images, guidance, and labels must share dimensions")
    validate_uncertainty_map(u_map, "guidance map")
    p_u = constraint_probability(u_map, labels)
    if p_u < 0.5:
        return x_ca * u_map + x_la * (1.0 - u_map)
    return minmax_normalize(x_ca + x_la)
