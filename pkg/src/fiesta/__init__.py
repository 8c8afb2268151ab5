"""Deterministic Fourier-domain augmentation engine for grayscale slices."""

__version__ = "0.1.0"

from .amplitude import (
    amp_transform,
    angular_density,
    apply_mask,
    extreme_angles,
    intra_modulate,
    sector_mask,
    spectrum_radius,
)
from .batch import Manifest, ManifestItem, replay_item, run_batch
from .config import AugConfig
from .fat import FatParams, FatResult, draw_fat_params, fat, fat_apply, fat_debug
from .formats import (
    read_pfm,
    read_pgm,
    read_probability_maps,
    write_pfm,
    write_pgm,
    write_probability_maps,
)
from .fourier import decompose, fft2_centered, ifft2_centered, recompose
from .location import (
    BezierRemap,
    ClassRemapParams,
    bezier_remap,
    draw_location_params,
    lfat,
    location_apply,
    location_transform,
)
from .metrics import dice_score
from .phase_attention import bilateral_filter, phase_image
from .preprocess import (
    center_crop_square,
    hu_window,
    percentile_clip,
    resize_bilinear,
    resize_nearest_labels,
)
from .rng import RngStream, rng_fork
from .types import (
    ComplexSpectrum,
    ConfigError,
    ContractViolationError,
    InvalidInputError,
    LabelMap,
    SectorMask,
    minmax_normalize,
    validate_image,
    validate_probability_map,
    validate_uncertainty_map,
)
from .uncertainty import (
    aggregate_uncertainty,
    constraint_probability,
    entropy_map,
    fuse_guidance,
    gaussian_blur,
    mutual_augment,
    softmax,
)

__all__ = [
    "AugConfig",
    "BezierRemap",
    "ClassRemapParams",
    "ComplexSpectrum",
    "ConfigError",
    "ContractViolationError",
    "FatParams",
    "FatResult",
    "InvalidInputError",
    "LabelMap",
    "Manifest",
    "ManifestItem",
    "RngStream",
    "SectorMask",
    "aggregate_uncertainty",
    "amp_transform",
    "angular_density",
    "apply_mask",
    "bezier_remap",
    "bilateral_filter",
    "center_crop_square",
    "constraint_probability",
    "decompose",
    "dice_score",
    "draw_fat_params",
    "draw_location_params",
    "entropy_map",
    "extreme_angles",
    "fat",
    "fat_apply",
    "fat_debug",
    "fft2_centered",
    "fuse_guidance",
    "gaussian_blur",
    "hu_window",
    "ifft2_centered",
    "intra_modulate",
    "lfat",
    "location_apply",
    "location_transform",
    "minmax_normalize",
    "mutual_augment",
    "percentile_clip",
    "phase_image",
    "read_pfm",
    "read_pgm",
    "read_probability_maps",
    "recompose",
    "replay_item",
    "resize_bilinear",
    "resize_nearest_labels",
    "rng_fork",
    "run_batch",
    "sector_mask",
    "softmax",
    "spectrum_radius",
    "validate_image",
    "validate_probability_map",
    "validate_uncertainty_map",
    "write_pfm",
    "write_pgm",
    "write_probability_maps",
]
