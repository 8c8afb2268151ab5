"""The full amplitude/phase augmentation: mask one sector, swap two
sectors, gate both branches by the phase-attention image, and mix.

Draw order from a stream is fixed -- first the scale-reversal
probability, then the sector angle k, then the sector radius -- so a
(seed, label) pair maps to the same augmentation everywhere.  The drawn
parameters are kept in :class:`FatParams`, which is enough to replay an
augmentation bit-exactly without the original seed.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .amplitude import (
    amp_transform,
    angular_density,
    apply_mask,
    extreme_angles,
    intra_modulate,
    sector_mask,
    spectrum_radius,
)
from .config import AugConfig
from .fourier import decompose, fft2_centered, ifft2_centered, recompose
from .phase_attention import bilateral_filter, phase_image
from .rng import RngStream
from .types import minmax_normalize, validate_image


@dataclass(frozen=True)
class FatParams:
    """The three random draws an augmentation consumes, in draw order."""

    p_reverse: float
    k_deg: float
    radius: float

    def to_dict(self) -> dict:
        return {"p_reverse": self.p_reverse, "k_deg": self.k_deg, "radius": self.radius}

    @classmethod
    def from_dict(cls, d: dict) -> "FatParams":
        return cls(p_reverse=float(d["p_reverse"]), k_deg=float(d["k_deg"]), radius=float(d["radius"]))


@dataclass(frozen=True)
class FatResult:
    """Output image plus every intermediate the pipeline reports on."""

    output: np.ndarray
    params: FatParams
    theta_max_deg: int
    theta_min_deg: int
    x_masked: np.ndarray
    x_modulated: np.ndarray
    attention: np.ndarray


def draw_fat_params(rng: RngStream, cfg: AugConfig, height: int, width: int) -> FatParams:
    """Consume p, k, r from `rng` in the fixed order."""
    p_reverse = rng.random()
    k_deg = rng.uniform(cfg.k_range[0], cfg.k_range[1])
    r_lo, r_hi = cfg.r_fraction_range
    radius = rng.uniform(r_lo, r_hi) * spectrum_radius(height, width)
    return FatParams(p_reverse=p_reverse, k_deg=k_deg, radius=radius)


def fat_apply(img: np.ndarray, cfg: AugConfig, params: FatParams) -> FatResult:
    """Run the augmentation with explicit parameters (replay path)."""
    validate_image(img, "input image")
    h, w = img.shape

    amp, phase = decompose(fft2_centered(img))
    amp_t = amp_transform(amp, params.p_reverse)
    density = angular_density(amp_t)
    theta_max, theta_min = extreme_angles(density)
    m_max = sector_mask(theta_max, params.k_deg, params.radius, h, w)
    m_min = sector_mask(theta_min, params.k_deg, params.radius, h, w)

    x_masked = ifft2_centered(recompose(apply_mask(amp_t, m_max), phase))
    x_modulated = ifft2_centered(recompose(intra_modulate(amp_t, m_max, m_min), phase))
    attention = bilateral_filter(
        phase_image(phase, cfg.alpha_phase), cfg.sigma_s, cfg.sigma_r, cfg.bilateral_radius
    )

    lam = cfg.lambda_mix
    mixed = lam * (x_masked * attention) + (1.0 - lam) * (x_modulated * attention)
    return FatResult(
        output=minmax_normalize(mixed),
        params=params,
        theta_max_deg=theta_max,
        theta_min_deg=theta_min,
        x_masked=x_masked,
        x_modulated=x_modulated,
        attention=attention,
    )


def fat_debug(img: np.ndarray, cfg: AugConfig, rng: RngStream) -> FatResult:
    """Seeded run that also exposes the intermediates."""
    params = draw_fat_params(rng, cfg, img.shape[0], img.shape[1])
    return fat_apply(img, cfg, params)


def fat(img: np.ndarray, cfg: AugConfig, rng: RngStream) -> np.ndarray:
    """Seeded augmentation of a [0, 1] grayscale image."""
    return fat_debug(img, cfg, rng).output
