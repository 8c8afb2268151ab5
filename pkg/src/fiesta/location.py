"""Per-class contrast remapping ahead of the Fourier augmentation.

Each label class (background included) gets its own cubic Bezier
intensity curve plus a truncated-Gaussian linear scale and shift.  The
parametric curve is turned into a lookup function by sampling 1000
uniform t values, sorting by x, and interpolating linearly, which keeps
it a function even when the control points fold the curve back in x.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .config import AugConfig
from .fat import fat
from .rng import RngStream
from .types import InvalidInputError, LabelMap

BEZIER_SAMPLES = 1000
_TRUNC_WIDTH = 2.0  # alpha/beta draws truncated at mu +/- 2*sigma


@dataclass(frozen=True)
class BezierRemap:
    """Piecewise-linear intensity map sampled from a cubic Bezier curve."""

    p0: tuple[float, float]
    p1: tuple[float, float]
    p2: tuple[float, float]
    p3: tuple[float, float]
    xs: np.ndarray
    ys: np.ndarray

    def __call__(self, values: np.ndarray) -> np.ndarray:
        return np.clip(np.interp(values, self.xs, self.ys), 0.0, 1.0)


def bezier_remap(p1: tuple[float, float], p2: tuple[float, float], inverse: bool) -> BezierRemap:
    """Intensity curve anchored at (0,0)->(1,1), or (0,1)->(1,0) when
    `inverse` flips the endpoints; `p1`, `p2` are the inner control points.
    """
    p0, p3 = ((0.0, 1.0), (1.0, 0.0)) if inverse else ((0.0, 0.0), (1.0, 1.0))
    t = np.linspace(0.0, 1.0, BEZIER_SAMPLES)
    s = 1.0 - t
    # Cubic Bernstein basis: weights (1, 3, 3, 1).
    b0 = s**3
    b1 = 3.0 * s**2 * t
    b2 = 3.0 * s * t**2
    b3 = t**3
    x = b0 * p0[0] + b1 * p1[0] + b2 * p2[0] + b3 * p3[0]
    y = b0 * p0[1] + b1 * p1[1] + b2 * p2[1] + b3 * p3[1]
    order = np.argsort(x, kind="stable")
    return BezierRemap(p0=p0, p1=tuple(p1), p2=tuple(p2), p3=p3, xs=x[order], ys=y[order])


@dataclass(frozen=True)
class ClassRemapParams:
    """One class's draws: curve choice, control points, scale, shift."""

    p_inverse: float
    p1: tuple[float, float]
    p2: tuple[float, float]
    alpha: float
    beta: float

    @property
    def inverse(self) -> bool:
        return self.p_inverse > 0.5

    def to_dict(self) -> dict:
        return {
            "p_inverse": self.p_inverse,
            "p1": list(self.p1),
            "p2": list(self.p2),
            "alpha": self.alpha,
            "beta": self.beta,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "ClassRemapParams":
        return cls(
            p_inverse=float(d["p_inverse"]),
            p1=(float(d["p1"][0]), float(d["p1"][1])),
            p2=(float(d["p2"][0]), float(d["p2"][1])),
            alpha=float(d["alpha"]),
            beta=float(d["beta"]),
        )


def draw_location_params(rng: RngStream, cfg: AugConfig, num_classes: int) -> list[ClassRemapParams]:
    """Per-class draws, each from its own forked stream so one class's
    parameters do not depend on how many draws the others consume."""
    params = []
    for c in range(num_classes):
        sub = rng.fork(f"class{c}")
        p_inverse = sub.random()
        p1 = (sub.random(), sub.random())
        p2 = (sub.random(), sub.random())
        alpha = sub.truncated_normal(1.0, cfg.sigma1, _TRUNC_WIDTH)
        beta = sub.truncated_normal(0.0, cfg.sigma2, _TRUNC_WIDTH)
        params.append(ClassRemapParams(p_inverse=p_inverse, p1=p1, p2=p2, alpha=alpha, beta=beta))
    return params


def location_apply(img: np.ndarray, labels: LabelMap, params: list[ClassRemapParams]) -> np.ndarray:
    """Remap each class region with its own curve, scale, and shift."""
    if img.shape != labels.data.shape:
        raise InvalidInputError("image and label map dimensions must match")
    if len(params) != labels.num_classes:
        raise InvalidInputError("need one parameter set per class")
    out = np.zeros_like(img, dtype=np.float64)
    for c, cp in enumerate(params):
        region = labels.class_mask(c)
        if not region.any():
            continue
        curve = bezier_remap(cp.p1, cp.p2, cp.inverse)
        out[region] = cp.alpha * curve(img[region]) + cp.beta
    return np.clip(out, 0.0, 1.0)


def location_transform(img: np.ndarray, labels: LabelMap, cfg: AugConfig, rng: RngStream) -> np.ndarray:
    """Seeded per-class remap of a [0, 1] image."""
    return location_apply(img, labels, draw_location_params(rng, cfg, labels.num_classes))


def lfat(img: np.ndarray, labels: LabelMap, cfg: AugConfig, rng: RngStream) -> np.ndarray:
    """Per-class remap followed by the Fourier augmentation, each step on
    its own forked stream."""
    remapped = location_transform(img, labels, cfg, rng.fork("location"))
    return fat(remapped, cfg, rng.fork("fat"))
