"""Shared value types, exceptions, and invariant checkers.

Array conventions used across the package:

* images and spectra are row-major float64 arrays of shape ``(H, W)``
  with the origin at the top-left;
* centered spectra put the DC bin at ``(H // 2, W // 2)``;
* the angle of a bin ``(row, col)`` relative to the center ``(cy, cx)``
  is ``atan2(row - cy, col - cx)`` in degrees, taken modulo 360, so 0
  degrees points along +columns and angles grow toward +rows;
* label maps are integer class ids in ``[0, num_classes)`` with class 0
  reserved for background;
* probability maps are ``(H, W, C)`` with a per-pixel simplex over the
  last axis.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


class InvalidInputError(ValueError):
    """An argument violates an operation's input contract."""


class ContractViolationError(RuntimeError):
    """A value produced elsewhere does not satisfy the expected contract."""


class ConfigError(ValueError):
    """A configuration document or field is malformed."""


@dataclass(frozen=True)
class ComplexSpectrum:
    """Frequency plane; `centered` means the DC bin sits at (H//2, W//2)."""

    data: np.ndarray  # complex128, shape (H, W)
    centered: bool

    @property
    def height(self) -> int:
        return self.data.shape[0]

    @property
    def width(self) -> int:
        return self.data.shape[1]

    @property
    def real(self) -> np.ndarray:
        return self.data.real

    @property
    def imag(self) -> np.ndarray:
        return self.data.imag


@dataclass(frozen=True)
class SectorMask:
    """Binary polar-sector indicator plus the parameters that made it."""

    data: np.ndarray  # uint8 in {0, 1}, shape (H, W)
    theta_deg: float
    k_deg: float
    radius: float
    center: tuple[int, int]

    @property
    def height(self) -> int:
        return self.data.shape[0]

    @property
    def width(self) -> int:
        return self.data.shape[1]


@dataclass(frozen=True)
class LabelMap:
    """Per-pixel integer class ids; class 0 is background."""

    data: np.ndarray  # integer, shape (H, W)
    num_classes: int

    def __post_init__(self):
        if self.num_classes < 1:
            raise InvalidInputError("num_classes must be >= 1")
        if self.data.ndim != 2:
            raise InvalidInputError("label map must be 2-D")
        if self.data.size and (self.data.min() < 0 or self.data.max() >= self.num_classes):
            raise InvalidInputError("label ids must lie in [0, num_classes)")

    @property
    def height(self) -> int:
        return self.data.shape[0]

    @property
    def width(self) -> int:
        return self.data.shape[1]

    def class_mask(self, c: int) -> np.ndarray:
        return self.data == c


def minmax_normalize(img: np.ndarray) -> np.ndarray:
    """Affine map of `img` onto [0, 1].

    A constant plane has no usable range and is returned unchanged; the
    augmentation paths only hit that case with an all-zero image.
    """
    lo = float(img.min())
    hi = float(img.max())
    if hi == lo:
        return img
    return (img - lo) / (hi - lo)


def validate_image(img: np.ndarray, name: str = "image") -> np.ndarray:
    """Check the normalized-image invariants: 2-D, finite, within [0, 1]."""
    if not isinstance(img, np.ndarray) or img.ndim != 2:
        raise InvalidInputError(f"{name} must be a 2-D array")
    if img.size == 0:
        raise InvalidInputError(f"{name} must be nonempty")
    if not np.isfinite(img).all():
        raise InvalidInputError(f"{name} contains NaN or Inf")
    if img.min() < 0.0 or img.max() > 1.0:
        raise InvalidInputError(f"{name} values must lie in [0, 1]")
    return img


def validate_finite(arr: np.ndarray, name: str = "array") -> np.ndarray:
    if not isinstance(arr, np.ndarray) or arr.ndim != 2 or arr.size == 0:
        raise InvalidInputError(f"{name} must be a nonempty 2-D array")
    if not np.isfinite(arr).all():
        raise InvalidInputError(f"{name} contains NaN or Inf")
    return arr


def validate_probability_map(prob: np.ndarray, tol: float = 1e-5) -> np.ndarray:
    """Check the (H, W, C) per-pixel simplex invariants."""
    if not isinstance(prob, np.ndarray) or prob.ndim != 3:
        raise InvalidInputError("probability map must be a 3-D (H, W, C) array")
    if prob.shape[2] < 1:
        raise InvalidInputError("probability map needs at least one class plane")
    if prob.min() < -tol or prob.max() > 1.0 + tol:
        raise InvalidInputError("probabilities must lie in [0, 1]")
    sums = prob.sum(axis=2)
    if np.abs(sums - 1.0).max() > tol:
        raise InvalidInputError("per-pixel class probabilities must sum to 1")
    return prob


def validate_uncertainty_map(u: np.ndarray, name: str = "uncertainty map") -> np.ndarray:
    validate_finite(u, name)
    if u.min() < 0.0 or u.max() > 1.0:
        raise InvalidInputError(f"{name} values must lie in [0, 1]")
    return u
