"""Bit-exact, dependency-free file formats.

* float images: grayscale PFM (``Pf``), little-endian (scale line
  ``-1.0``), rows stored bottom-to-top per the format convention;
* label maps: binary PGM (``P5``, maxval 255) with class ids as gray
  levels;
* probability maps: one PFM per class plane, named ``<stem>.c<k>.pfm``.
"""

from __future__ import annotations

import re
from pathlib import Path

import numpy as np

from .types import InvalidInputError, LabelMap, validate_probability_map

_PFM_SCALE = -1.0  # negative: little-endian payload


def write_pfm(path: str | Path, img: np.ndarray) -> None:
    """Write a 2-D float array as a grayscale little-endian PFM."""
    if img.ndim != 2:
        raise InvalidInputError("PFM writer expects a 2-D array")
    h, w = img.shape
    payload = np.flipud(img).astype("<f4").tobytes()
    with open(path, "wb") as f:
        f.write(b"Pf\n")
        f.write(f"{w} {h}\n".encode("ascii"))
        f.write(f"{_PFM_SCALE}\n".encode("ascii"))
        f.write(payload)


def _read_token(f) -> bytes:
    # Tokens are whitespace-separated; PFM headers do not carry comments.
    token = b""
    while True:
        ch = f.read(1)
        if not ch:
            raise InvalidInputError("truncated PFM header")
        if ch.isspace():
            if token:
                return token
            continue
        token += ch


def read_pfm(path: str | Path) -> np.ndarray:
    """Read a grayscale PFM into a float64 (H, W) array."""
    with open(path, "rb") as f:
        magic = _read_token(f)
        if magic == b"PF":
            raise InvalidInputError(f"{path}: color PFM is not supported")
        if magic != b"Pf":
            raise InvalidInputError(f"{path}: not a PFM file")
        w = int(_read_token(f))
        h = int(_read_token(f))
        scale = float(_read_token(f))
        dtype = "<f4" if scale < 0 else ">f4"
        payload = f.read(w * h * 4)
    if len(payload) != w * h * 4:
        raise InvalidInputError(f"{path}: truncated PFM payload")
    img = np.frombuffer(payload, dtype=dtype).reshape(h, w)
    return np.flipud(img).astype(np.float64)


def write_pgm(path: str | Path, labels: LabelMap) -> None:
    """Write label ids as a binary (P5) PGM with maxval 255."""
    if labels.num_classes > 256:
        raise InvalidInputError("PGM labels support at most 256 classes")
    h, w = labels.data.shape
    with open(path, "wb") as f:
        f.write(b"P5\n")
        f.write(f"{w} {h}\n255\n".encode("ascii"))
        f.write(labels.data.astype(np.uint8).tobytes())


def read_pgm(path: str | Path, num_classes: int | None = None) -> LabelMap:
    """Read a binary PGM of class ids; `num_classes` defaults to max id + 1."""
    with open(path, "rb") as f:
        magic = _read_token(f)
        if magic != b"P5":
            raise InvalidInputError(f"{path}: not a binary PGM file")
        w = int(_read_token(f))
        h = int(_read_token(f))
        maxval = int(_read_token(f))
        if maxval > 255:
            raise InvalidInputError(f"{path}: 16-bit PGM is not supported")
        payload = f.read(w * h)
    if len(payload) != w * h:
        raise InvalidInputError(f"{path}: truncated PGM payload")
    data = np.frombuffer(payload, dtype=np.uint8).reshape(h, w).astype(np.int32)
    c = num_classes if num_classes is not None else int(data.max()) + 1
    return LabelMap(data=data, num_classes=c)


_PLANE_RE = re.compile(r"\.c(\d+)\.pfm$")


def probability_plane_paths(stem: str | Path) -> list[Path]:
    """All ``<stem>.c<k>.pfm`` planes for a stem, ordered by class index."""
    stem = Path(stem)
    pattern = re.compile(re.escape(stem.name) + r"\.c(\d+)\.pfm$")
    found = {}
    for p in stem.parent.glob(f"{stem.name}.c*.pfm"):
        m = pattern.match(p.name)
        if m:
            found[int(m.group(1))] = p
    return [found[k] for k in sorted(found)]


def read_probability_maps(stem: str | Path) -> np.ndarray:
    """Stack the per-class PFM planes of `stem` into an (H, W, C) simplex."""
    paths = probability_plane_paths(stem)
    if len(paths) < 2:
        raise InvalidInputError(f"{stem}: need at least two probability planes (<stem>.c<k>.pfm)")
    planes = [read_pfm(p) for p in paths]
    shape = planes[0].shape
    if any(p.shape != shape for p in planes):
        raise InvalidInputError(f"{stem}: probability planes disagree on dimensions")
    prob = np.stack(planes, axis=2)
    return validate_probability_map(prob, tol=1e-5)


def write_probability_maps(stem: str | Path, prob: np.ndarray) -> list[Path]:
    """Write an (H, W, C) simplex as per-class PFM planes."""
    validate_probability_map(prob)
    stem = Path(stem)
    paths = []
    for k in range(prob.shape[2]):
        p = stem.parent / f"{stem.name}.c{k}.pfm"
        write_pfm(p, prob[:, :, k])
        paths.append(p)
    return paths
