"""Amplitude-plane manipulation: scale reversal, angular density analysis,
sector masks, masking, and intra-modulation between sectors.

Angles follow the package convention: for a bin ``(row, col)`` and center
``(cy, cx) = (H // 2, W // 2)``, the angle is ``atan2(row - cy, col - cx)``
in degrees modulo 360.  The DC bin itself (distance 0) never belongs to a
sector, so masking cannot erase the image mean.
"""

from __future__ import annotations

import math

import numpy as np

from .types import InvalidInputError, SectorMask

DENSITY_DEGREES = 360


def amp_transform(amp: np.ndarray, p: float) -> np.ndarray:
    """Reverse the amplitude scale about its median when p >= 0.5.

    The median is taken over all H*W bins (mean of the two middle values
    for an even count).  For p < 0.5 the input is returned unchanged.
    """
    if p >= 0.5:
        return np.abs(float(np.median(amp)) - amp)
    return amp


def spectrum_radius(height: int, width: int) -> int:
    """Largest radial sample count that stays inside the raster."""
    return min(height, width) // 2 - 1


def angular_density(amp: np.ndarray) -> np.ndarray:
    """Sum of amplitude along each integer-degree ray from the center.

    For angle theta the samples are
    ``amp[cy + floor(r*sin(t)), cx + floor(r*cos(t))]`` for r = 1..R with
    ``t = radians(theta)`` and ``R = min(H, W)//2 - 1``; samples landing
    outside the raster are skipped.  Accumulation is sequential in r so
    the result is bit-reproducible against a plain double loop.
    """
    h, w = amp.shape
    cy, cx = h // 2, w // 2
    rmax = spectrum_radius(h, w)
    radii = np.arange(1, rmax + 1, dtype=np.float64)
    density = np.zeros(DENSITY_DEGREES, dtype=np.float64)
    for theta in range(DENSITY_DEGREES):
        t = math.radians(theta)
        rows = cy + np.floor(radii * math.sin(t)).astype(np.int64)
        cols = cx + np.floor(radii * math.cos(t)).astype(np.int64)
        ok = (rows >= 0) & (rows < h) & (cols >= 0) & (cols < w)
        density[theta] = sum(amp[rows[ok], cols[ok]].tolist())
    return density


def extreme_angles(density: np.ndarray) -> tuple[int, int]:
    """(argmax, argmin) in degrees; ties resolve to the smallest angle."""
    return int(np.argmax(density)), int(np.argmin(density))


def _angular_difference_deg(angles_deg: np.ndarray, theta_deg: float) -> np.ndarray:
    diff = np.abs(angles_deg - (theta_deg % 360.0)) % 360.0
    return np.minimum(diff, 360.0 - diff)


def sector_mask(theta_deg: float, k_deg: float, radius: float, height: int, width: int) -> SectorMask:
    """Binary mask of the partial sector at `theta_deg` spanning `k_deg`.

    A bin is inside iff its center distance lies in [1, radius] and its
    angular difference to `theta_deg` is at most k_deg/2 (modulo 360).
    """
    if not 0.0 < radius < min(height, width) / 2.0:
        raise InvalidInputError("sector radius must lie in (0, min(H, W)/2)")
    if not 0.0 < k_deg <= 360.0:
        raise InvalidInputError("sector angle k must lie in (0, 360]")
    cy, cx = height // 2, width // 2
    dy = np.arange(height, dtype=np.float64)[:, None] - cy
    dx = np.arange(width, dtype=np.float64)[None, :] - cx
    dist = np.hypot(dy, dx)
    ang = np.degrees(np.arctan2(dy, dx)) % 360.0
    inside = (dist >= 1.0) & (dist <= radius) & (_angular_difference_deg(ang, theta_deg) <= k_deg / 2.0)
    return SectorMask(
        data=inside.astype(np.uint8),
        theta_deg=float(theta_deg),
        k_deg=float(k_deg),
        radius=float(radius),
        center=(cy, cx),
    )


def apply_mask(amp: np.ndarray, mask: SectorMask) -> np.ndarray:
    """Zero the bins inside the sector: amp * (1 - M)."""
    if amp.shape != mask.data.shape:
        raise InvalidInputError("amplitude and mask dimensions must match")
    return amp * (1.0 - mask.data)


def _rotated_partner(row: int, col: int, center: tuple[int, int], cos_d: float, sin_d: float) -> tuple[int, int]:
    dy = row - center[0]
    dx = col - center[1]
    ry = dx * sin_d + dy * cos_d
    rx = dx * cos_d - dy * sin_d
    return center[0] + int(np.rint(ry)), center[1] + int(np.rint(rx))


def intra_modulate(amp: np.ndarray, m_max: SectorMask, m_min: SectorMask) -> np.ndarray:
    """Exchange amplitude values between two congruent sectors.

    Each bin of `m_max` is rotated about the center by
    ``theta_min - theta_max`` and rounded to the nearest bin.  The pair is
    swapped only when the partner lands on a 1-bin of `m_min` inside the
    raster and the reverse rotation rounds back to the source bin; pairs
    touching an already-paired bin are skipped.  The result is a set of
    disjoint transpositions, so applying the operation twice with the
    same masks restores the input exactly (values move, no arithmetic).
    """
    if amp.shape != m_max.data.shape or amp.shape != m_min.data.shape:
        raise InvalidInputError("amplitude and mask dimensions must match")
    if m_max.k_deg != m_min.k_deg or m_max.radius != m_min.radius:
        raise InvalidInputError("sector masks must share k and radius")
    if m_max.center != m_min.center:
        raise InvalidInputError("sector masks must share the center bin")

    h, w = amp.shape
    delta = math.radians(m_min.theta_deg - m_max.theta_deg)
    cos_d, sin_d = math.cos(delta), math.sin(delta)
    out = amp.copy()
    used = np.zeros((h, w), dtype=bool)
    rows, cols = np.nonzero(m_max.data)
    for row, col in zip(rows.tolist(), cols.tolist()):
        pr, pc = _rotated_partner(row, col, m_max.center, cos_d, sin_d)
        if not (0 <= pr < h and 0 <= pc < w) or not m_min.data[pr, pc]:
            continue
        br, bc = _rotated_partner(pr, pc, m_max.center, cos_d, -sin_d)
        if (br, bc) != (row, col):
            continue
        if used[row, col] or used[pr, pc]:
            continue
        out[row, col], out[pr, pc] = amp[pr, pc], amp[row, col]
        used[row, col] = used[pr, pc] = True
    return out
