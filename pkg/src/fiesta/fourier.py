"""Centered 2-D FFT and amplitude/phase decomposition.

Conventions (all invariants in the tests depend on these):

* forward transform is unscaled, inverse carries the 1/(H*W) factor;
* centering is done by index reordering (``fftshift`` after the forward
  transform, ``ifftshift`` before the inverse), so bin values are the
  plain DFT coefficients;
* the inverse returns only the real part -- sector masking and
  modulation break Hermitian symmetry, leaving a small imaginary
  residue that is discarded.
"""

from __future__ import annotations

import numpy as np

from .types import ComplexSpectrum, ContractViolationError, InvalidInputError, validate_finite


def fft2_centered(img: np.ndarray) -> ComplexSpectrum:
    """Unscaled 2-D DFT of `img` with the DC bin moved to (H//2, W//2)."""
    validate_finite(img, "image")
    spec = np.fft.fftshift(np.fft.fft2(img))
    return ComplexSpectrum(data=spec, centered=True)


def ifft2_centered(spec: ComplexSpectrum) -> np.ndarray:
    """Real part of the 1/(H*W)-scaled inverse of a centered spectrum."""
    if not spec.centered:
        raise ContractViolationError("ifft2_centered requires a centered spectrum")
    return np.fft.ifft2(np.fft.ifftshift(spec.data)).real


def ifft2_centered_complex(spec: ComplexSpectrum) -> np.ndarray:
    """Inverse transform without the real-part projection (diagnostics)."""
    if not spec.centered:
        raise ContractViolationError("ifft2_centered requires a centered spectrum")
    return np.fft.ifft2(np.fft.ifftshift(spec.data))


def decompose(spec: ComplexSpectrum) -> tuple[np.ndarray, np.ndarray]:
    """Per-bin (amplitude, phase); phase is atan2(imag, real) in (-pi, pi]."""
    amp = np.hypot(spec.real, spec.imag)
    phase = np.arctan2(spec.imag, spec.real)
    # atan2 maps (-0.0, negative) to -pi; fold onto +pi per the phase range.
    phase[phase == -np.pi] = np.pi
    return amp, phase


def recompose(amp: np.ndarray, phase: np.ndarray) -> ComplexSpectrum:
    """Rebuild a centered spectrum from polar planes."""
    if amp.shape != phase.shape:
        raise InvalidInputError("amplitude and phase dimensions must match")
    data = amp * np.cos(phase) + 1j * (amp * np.sin(phase))
    return ComplexSpectrum(data=data, centered=True)
