"""Phase-only reconstruction and bilateral refinement.

The attention image is the inverse transform of a constant-amplitude
spectrum carrying the source phase, min-max normalized, then smoothed by
a brute-force bilateral filter.  With the production sigmas (75/75 on a
[0, 1] image) both kernels are nearly flat over the window, so the window
size is the effective spatial scale; the filter is implemented faithfully
anyway and the sigmas stay configurable.
"""

from __future__ import annotations

import numpy as np

from .fourier import ifft2_centered, recompose
from .types import minmax_normalize


def phase_image(phase: np.ndarray, alpha: float = 1.0) -> np.ndarray:
    """Spatial image of the phase plane under constant amplitude `alpha`.

    The result is min-max normalized to [0, 1]; it is invariant to any
    positive rescaling of the source image, since scaling only touches
    amplitude.
    """
    amp = np.full(phase.shape, float(alpha), dtype=np.float64)
    img = ifft2_centered(recompose(amp, phase))
    return minmax_normalize(img)


def bilateral_filter(img: np.ndarray, sigma_s: float, sigma_r: float, radius: int) -> np.ndarray:
    """Edge-preserving smoothing over a (2*radius+1)^2 window.

    Weights are the product of a spatial Gaussian of the Euclidean offset
    and a range Gaussian of the intensity difference; the border is
    replicate-padded.  O(window^2) per pixel, which is fine at 192x192.
    """
    h, w = img.shape
    padded = np.pad(img, radius, mode="edge")
    num = np.zeros((h, w), dtype=np.float64)
    den = np.zeros((h, w), dtype=np.float64)
    inv_2s2 = 1.0 / (2.0 * sigma_s * sigma_s)
    inv_2r2 = 1.0 / (2.0 * sigma_r * sigma_r)
    for dy in range(-radius, radius + 1):
        for dx in range(-radius, radius + 1):
            w_spatial = np.exp(-(dy * dy + dx * dx) * inv_2s2)
            window = padded[radius + dy : radius + dy + h, radius + dx : radius + dx + w]
            weight = w_spatial * np.exp(-((window - img) ** 2) * inv_2r2)
            num += weight * window
            den += weight
    return num / den
