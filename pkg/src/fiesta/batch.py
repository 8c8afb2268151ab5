"""Batch execution over manifests of slices, with a replayable report.

Every augmented image gets its own stream label ``<index>:<kind>`` where
kind is ``fat`` or ``lfat``, so an item's outputs do not depend on the
other manifest entries or on which subcommand produced them (``all``
emits byte-identical images to separate ``fat``/``lfat``/``mutual``
runs).  The report records every drawn parameter, which is enough to
replay any single item bit-exactly without the original seed.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .config import AugConfig
from .fat import FatParams, FatResult, draw_fat_params, fat_apply
from .formats import read_pfm, read_pgm, read_probability_maps, write_pfm
from .location import ClassRemapParams, draw_location_params, location_apply
from .rng import RngStream
from .types import InvalidInputError, LabelMap, validate_image, validate_uncertainty_map
from .uncertainty import constraint_probability, entropy_map, fuse_guidance, mutual_augment

AUGMENT_MODES = ("fat", "lfat", "mutual", "all")


@dataclass
class ManifestItem:
    """One slice and the auxiliary inputs the requested mode may need."""

    index: int
    stem: str
    image: Path
    labels: Path | None = None
    prob_ca: Path | None = None
    prob_la: Path | None = None
    unc_ca: Path | None = None
    unc_la: Path | None = None
    umap: Path | None = None
    ca: Path | None = None
    la: Path | None = None


@dataclass
class Manifest:
    mode: str
    items: list[ManifestItem] = field(default_factory=list)


def _paths_dict(item: ManifestItem) -> dict:
    out = {"image": str(item.image)}
    for name in ("labels", "prob_ca", "prob_la", "unc_ca", "unc_la", "umap", "ca", "la"):
        value = getattr(item, name)
        if value is not None:
            out[name] = str(value)
    return out


def _load_image(path: Path) -> np.ndarray:
    img = read_pfm(path)
    return validate_image(img, str(path))


def _load_labels(item: ManifestItem) -> LabelMap:
    if item.labels is None:
        raise InvalidInputError("missing label map input")
    return read_pgm(item.labels)


def _run_fat(img: np.ndarray, cfg: AugConfig, root: RngStream, item: ManifestItem) -> FatResult:
    rng = root.fork(f"{item.index}:fat")
    return fat_apply(img, cfg, draw_fat_params(rng, cfg, img.shape[0], img.shape[1]))


def _run_lfat(
    img: np.ndarray, labels: LabelMap, cfg: AugConfig, root: RngStream, item: ManifestItem
) -> tuple[np.ndarray, list[ClassRemapParams], FatResult]:
    rng = root.fork(f"{item.index}:lfat")
    loc_params = draw_location_params(rng.fork("location"), cfg, labels.num_classes)
    remapped = location_apply(img, labels, loc_params)
    fat_rng = rng.fork("fat")
    result = fat_apply(remapped, cfg, draw_fat_params(fat_rng, cfg, img.shape[0], img.shape[1]))
    return remapped, loc_params, result


def _fat_report(result: FatResult) -> dict:
    d = result.params.to_dict()
    d["theta_max_deg"] = result.theta_max_deg
    d["theta_min_deg"] = result.theta_min_deg
    return d


def _guidance_map(item: ManifestItem, cfg: AugConfig) -> np.ndarray:
    """Resolve the guidance field from whichever uncertainty inputs exist."""
    if item.umap is not None:
        return validate_uncertainty_map(read_pfm(item.umap), "guidance map")
    if item.unc_ca is not None and item.unc_la is not None:
        uc = validate_uncertainty_map(read_pfm(item.unc_ca), "unc_ca")
        ul = validate_uncertainty_map(read_pfm(item.unc_la), "unc_la")
        return fuse_guidance(uc, ul, cfg)
    if item.prob_ca is not None and item.prob_la is not None:
        uc = entropy_map(read_probability_maps(item.prob_ca))
        ul = entropy_map(read_probability_maps(item.prob_la))
        return fuse_guidance(uc, ul, cfg)
    raise InvalidInputError("missing uncertainty inputs")


def process_item(item: ManifestItem, mode: str, cfg: AugConfig, root: RngStream, out_dir: Path) -> dict:
    """Run one manifest entry; returns its report record (raises on error)."""
    record: dict = {"index": item.index, "stem": item.stem, "mode": mode, "inputs": _paths_dict(item)}
    outputs: dict = {}
    params: dict = {}
    img_cache: dict = {}

    def img() -> np.ndarray:
        # loaded lazily: `mutual` with precomputed views never reads it
        if "img" not in img_cache:
            img_cache["img"] = _load_image(item.image)
        return img_cache["img"]

    want_ca = mode in ("fat", "mutual", "all")
    want_la = mode in ("lfat", "mutual", "all")
    want_ma = mode in ("mutual", "all")

    x_ca = x_la = None
    if want_ca:
        if item.ca is not None:
            x_ca = _load_image(item.ca)
        else:
            result = _run_fat(img(), cfg, root, item)
            params["ca"] = _fat_report(result)
            x_ca = result.output
            path = out_dir / f"{item.stem}.ca.pfm"
            write_pfm(path, x_ca)
            outputs["ca"] = path.name
    if want_la:
        labels = _load_labels(item)
        if item.la is not None:
            x_la = _load_image(item.la)
        else:
            _, loc_params, result = _run_lfat(img(), labels, cfg, root, item)
            params["la"] = {
                "location": [p.to_dict() for p in loc_params],
                "fat": _fat_report(result),
            }
            x_la = result.output
            path = out_dir / f"{item.stem}.la.pfm"
            write_pfm(path, x_la)
            outputs["la"] = path.name
    if want_ma:
        labels = _load_labels(item)
        u_map = _guidance_map(item, cfg)
        x_ma = mutual_augment(x_ca, x_la, u_map, labels)
        params["mutual"] = {"p_u": constraint_probability(u_map, labels)}
        path = out_dir / f"{item.stem}.ma.pfm"
        write_pfm(path, x_ma)
        outputs["ma"] = path.name

    record["params"] = params
    record["outputs"] = outputs
    return record


def run_batch(manifest: Manifest, cfg: AugConfig, out_dir: str | Path) -> dict:
    """Process every item, write outputs and ``report.json``, and return
    the report.  Item failures are recorded and do not stop the batch."""
    if manifest.mode not in AUGMENT_MODES:
        raise InvalidInputError(f"unknown mode {manifest.mode!r}")
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    cfg.validate()
    root = RngStream(cfg.seed)
    records = []
    failures = 0
    for item in manifest.items:
        try:
            records.append(process_item(item, manifest.mode, cfg, root, out_dir))
        except Exception as exc:  # recorded per item; the batch continues
            failures += 1
            records.append(
                {
                    "index": item.index,
                    "stem": item.stem,
                    "mode": manifest.mode,
                    "inputs": _paths_dict(item),
                    "error": str(exc),
                }
            )
    report = {
        "seed": cfg.seed,
        "mode": manifest.mode,
        "config": cfg.to_dict(),
        "items": records,
        "failures": failures,
    }
    write_report(out_dir / "report.json", report)
    return report


def write_report(path: str | Path, report: dict) -> None:
    with open(path, "w", encoding="utf-8") as f:
        json.dump(report, f, indent=2)
        f.write("\n")


def read_report(path: str | Path) -> dict:
    with open(path, "r", encoding="utf-8") as f:
        return json.load(f)


def replay_item(report: dict, index: int, out_dir: str | Path) -> dict:
    """Re-run one report item from its recorded parameters (no RNG).

    Outputs are written under `out_dir` with the original names and are
    byte-identical to the first run.
    """
    matches = [r for r in report.get("items", []) if r.get("index") == index]
    if not matches:
        raise InvalidInputError(f"report has no item with index {index}")
    record = matches[0]
    if "error" in record:
        raise InvalidInputError(f"item {index} originally failed: {record['error']}")
    cfg = AugConfig.from_dict(report["config"])
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    inputs = record["inputs"]
    params = record.get("params", {})
    outputs = record.get("outputs", {})
    img = _load_image(Path(inputs["image"]))

    written = {}
    x_ca = x_la = None
    if "ca" in params:
        x_ca = fat_apply(img, cfg, FatParams.from_dict(params["ca"])).output
    elif "ca" in inputs:
        x_ca = _load_image(Path(inputs["ca"]))
    if x_ca is not None and "ca" in outputs:
        write_pfm(out_dir / outputs["ca"], x_ca)
        written["ca"] = outputs["ca"]

    if "la" in params or "la" in inputs:
        if "la" in params:
            labels = read_pgm(Path(inputs["labels"]))
            loc_params = [ClassRemapParams.from_dict(d) for d in params["la"]["location"]]
            remapped = location_apply(img, labels, loc_params)
            x_la = fat_apply(remapped, cfg, FatParams.from_dict(params["la"]["fat"])).output
        else:
            x_la = _load_image(Path(inputs["la"]))
        if "la" in outputs:
            write_pfm(out_dir / outputs["la"], x_la)
            written["la"] = outputs["la"]

    if "ma" in outputs:
        labels = read_pgm(Path(inputs["labels"]))
        item = ManifestItem(
            index=index,
            stem=record["stem"],
            image=Path(inputs["image"]),
            labels=Path(inputs["labels"]),
            prob_ca=Path(inputs["prob_ca"]) if "prob_ca" in inputs else None,
            prob_la=Path(inputs["prob_la"]) if "prob_la" in inputs else None,
            unc_ca=Path(inputs["unc_ca"]) if "unc_ca" in inputs else None,
            unc_la=Path(inputs["unc_la"]) if "unc_la" in inputs else None,
            umap=Path(inputs["umap"]) if "umap" in inputs else None,
        )
        u_map = _guidance_map(item, cfg)
        x_ma = mutual_augment(x_ca, x_la, u_map, labels)
        write_pfm(out_dir / outputs["ma"], x_ma)
        written["ma"] = outputs["ma"]
    return written
