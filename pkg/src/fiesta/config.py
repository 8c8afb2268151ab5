"""Tunable constants for the augmentation engine, JSON round-trippable."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, fields

from .types import ConfigError


@dataclass(frozen=True)
class AugConfig:
    """Every knob the engine reads, with the production defaults.

    `k_range` is in degrees; `r_fraction_range` is the half-open fraction
    interval of the usable spectrum radius (``min(H, W) / 2 - 1``) that a
    sector radius is drawn from.
    """

    lambda_mix: float = 0.5
    alpha_phase: float = 1.0
    sigma_s: float = 75.0
    sigma_r: float = 75.0
    bilateral_radius: int = 7
    sigma1: float = 0.1
    sigma2: float = 0.5
    k_range: tuple[float, float] = (15.0, 90.0)
    r_fraction_range: tuple[float, float] = (0.25, 1.0)
    blur_sigma: float = 1.0
    blur_radius: int = 2
    seed: int = 0

    def validate(self) -> "AugConfig":
        if not 0.0 <= self.lambda_mix <= 1.0:
            raise ConfigError("lambda_mix must lie in [0, 1]")
        for name in ("alpha_phase", "sigma_s", "sigma_r", "sigma1", "sigma2", "blur_sigma"):
            if getattr(self, name) <= 0:
                raise ConfigError(f"{name} must be > 0")
        if self.bilateral_radius < 1 or self.blur_radius < 1:
            raise ConfigError("filter radii must be >= 1")
        k_lo, k_hi = self.k_range
        if not (0.0 < k_lo <= k_hi <= 360.0):
            raise ConfigError("k_range must lie within (0, 360]")
        r_lo, r_hi = self.r_fraction_range
        if not (0.0 < r_lo <= r_hi <= 1.0):
            raise ConfigError("r_fraction_range must lie within (0, 1]")
        if not isinstance(self.seed, int):
            raise ConfigError("seed must be an integer")
        return self

    def to_dict(self) -> dict:
        d = asdict(self)
        d["k_range"] = list(self.k_range)
        d["r_fraction_range"] = list(self.r_fraction_range)
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "AugConfig":
        known = {f.name for f in fields(cls)}
        unknown = set(d) - known
        if unknown:
            raise ConfigError(f"unknown config fields: {sorted(unknown)}")
        kwargs = dict(d)
        for name in ("k_range", "r_fraction_range"):
            if name in kwargs:
                seq = kwargs[name]
                if not isinstance(seq, (list, tuple)) or len(seq) != 2:
                    raise ConfigError(f"{name} must be a 2-element sequence")
                kwargs[name] = (float(seq[0]), float(seq[1]))
        try:
            cfg = cls(**kwargs)
        except TypeError as exc:
            raise ConfigError(str(exc)) from exc
        return cfg.validate()

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_json(cls, text: str) -> "AugConfig":
        try:
            d = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ConfigError(f"config is not valid JSON: {exc}") from exc
        if not isinstance(d, dict):
            raise ConfigError("config document must be a JSON object")
        return cls.from_dict(d)
