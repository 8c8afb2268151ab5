"""Deterministic, forkable random streams.

The generator is SplitMix64 (Steele, Lea & Flood 2014): 64-bit state
advanced by the golden-ratio increment ``0x9E3779B97F4A7C15`` and mixed
with two xor-shift/multiply rounds per output word.  It is tiny, has no
platform-dependent behavior, and is trivially reimplementable in any
language, which is what makes golden-file tests and the CLI replay mode
byte-stable across machines.

Streams are addressed, not shared: each stream is identified by the root
seed plus a path of fork labels, and its initial state is the first eight
bytes (little-endian) of SHA-256 over ``seed || 0x1f || label0 || 0x1f ||
label1 ...``.  Forking never consumes parent state, so
``fork(parent, label)`` is a pure function of ``(seed, labels)``.

Derived draws are fixed compositions of the raw 64-bit word:

* ``random()``     -> ``(word >> 11) * 2**-53`` in ``[0, 1)``
* ``uniform(a,b)`` -> ``a + (b - a) * random()``
* ``normal()``     -> Box-Muller cosine branch, two ``random()`` calls
* ``truncated_normal()`` -> rejection on ``normal()`` until within bounds
"""

from __future__ import annotations

import hashlib
import math

_MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15
_LABEL_SEP = b"\x1f"


def _derive_state(seed: int, path: tuple[str, ...]) -> int:
    h = hashlib.sha256()
    h.update((seed & _MASK64).to_bytes(8, "little"))
    for label in path:
        h.update(_LABEL_SEP)
        h.update(label.encode("utf-8"))
    return int.from_bytes(h.digest()[:8], "little")


class RngStream:
    """A deterministic draw sequence identified by (seed, fork labels)."""

    __slots__ = ("seed", "path", "_state")

    def __init__(self, seed: int, path: tuple[str, ...] = ()):
        self.seed = seed & _MASK64
        self.path = path
        self._state = _derive_state(seed, path)

    def fork(self, label: str) -> "RngStream":
        """Child stream for `label`; independent of parent draw position."""
        if not label:
            raise ValueError("fork label must be nonempty")
        return RngStream(self.seed, self.path + (label,))

    def _next_u64(self) -> int:
        self._state = (self._state + _GAMMA) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def random(self) -> float:
        """Uniform float64 in [0, 1) with 53 random bits."""
        return (self._next_u64() >> 11) * 2.0**-53

    def uniform(self, lo: float, hi: float) -> float:
        """Uniform float64 in [lo, hi)."""
        return lo + (hi - lo) * self.random()

    def normal(self, mu: float = 0.0, sigma: float = 1.0) -> float:
        """Gaussian draw; consumes exactly two uniforms (no spare cached)."""
        u1 = 1.0 - self.random()  # (0, 1], keeps log() finite
        u2 = self.random()
        return mu + sigma * math.sqrt(-2.0 * math.log(u1)) * math.cos(2.0 * math.pi * u2)

    def truncated_normal(self, mu: float, sigma: float, width: float = 2.0) -> float:
        """Gaussian truncated to mu +/- width*sigma via rejection."""
        while True:
            z = self.normal(mu, sigma)
            if abs(z - mu) <= width * sigma:
                return z

    def __repr__(self) -> str:  # pragma: no cover
        return f"RngStream(seed={self.seed}, path={self.path!r})"


def rng_fork(parent: RngStream, label: str) -> RngStream:
    """Functional alias for :meth:`RngStream.fork`."""
    return parent.fork(label)
