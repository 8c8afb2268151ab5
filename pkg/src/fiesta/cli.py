"""Batch command-line front end.

Subcommands: ``fat``, ``lfat``, ``mutual``, ``all`` (augmentation over a
file or directory of PFM slices), ``density`` (angular-density CSV dump),
``dice`` (per-class overlap of two label maps), ``preprocess`` (window,
clip, crop, resize), ``replay`` (re-run one report item bit-exactly),
and the debug helpers ``entropy`` and ``fuse``.

Seed precedence: the ``FIESTA_SEED`` environment variable overrides the
``--seed`` flag, which overrides the config file.  Exit status is 0 on
full success, 2 when some items failed, 1 on a config or I/O abort.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .amplitude import angular_density
from .batch import AUGMENT_MODES, Manifest, ManifestItem, read_report, replay_item, run_batch, write_report
from .config import AugConfig
from .fourier import decompose, fft2_centered
from .formats import read_pfm, read_pgm, read_probability_maps, write_pfm, write_pgm
from .metrics import dice_score
from .preprocess import center_crop_square, hu_window, percentile_clip, resize_bilinear, resize_nearest_labels
from .types import ConfigError, InvalidInputError, LabelMap, minmax_normalize, validate_uncertainty_map
from .uncertainty import entropy_map, fuse_guidance

_DERIVED_PFM = re.compile(r"\.(ca|la|ma|umap|uc|ul|unc|pre|c\d+)\.pfm$")


class _Parser(argparse.ArgumentParser):
    """Argument errors are invocation/config problems: exit status 1."""

    def error(self, message):  # noqa: D401 - argparse hook
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _collect_inputs(input_path: Path, suffix: str = ".pfm") -> list[tuple[str, Path]]:
    """(stem, path) pairs for a file or for every primary file in a dir."""
    if input_path.is_file():
        return [(_stem_of(input_path), input_path)]
    if input_path.is_dir():
        pairs = []
        for p in sorted(input_path.glob(f"*{suffix}")):
            if suffix == ".pfm" and _DERIVED_PFM.search(p.name):
                continue
            pairs.append((_stem_of(p), p))
        if not pairs:
            raise InvalidInputError(f"no {suffix} inputs found in {input_path}")
        return pairs
    raise InvalidInputError(f"input path {input_path} does not exist")


def _stem_of(path: Path) -> str:
    return path.name[: -len(path.suffix)] if path.suffix else path.name


def _resolve_aux(value: str | None, stem: str, per_item_suffix: str) -> Path | None:
    """A file/stem is used as given; a directory is joined per item."""
    if value is None:
        return None
    p = Path(value)
    if p.is_dir():
        return p / f"{stem}{per_item_suffix}"
    return p


def _load_config(args) -> AugConfig:
    if getattr(args, "config", None):
        cfg = AugConfig.from_json(Path(args.config).read_text(encoding="utf-8"))
    else:
        cfg = AugConfig()
    seed = cfg.seed
    if getattr(args, "seed", None) is not None:
        seed = args.seed
    env_seed = os.environ.get("FIESTA_SEED")
    if env_seed is not None:
        try:
            seed = int(env_seed)
        except ValueError as exc:
            raise ConfigError(f"FIESTA_SEED must be an integer, got {env_seed!r}") from exc
    if seed != cfg.seed:
        cfg = AugConfig.from_dict({**cfg.to_dict(), "seed": seed})
    return cfg.validate()


def _out_dir(args) -> Path:
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    return out


def _cmd_augment(args) -> int:
    cfg = _load_config(args)
    out = _out_dir(args)
    items = []
    for index, (stem, image) in enumerate(_collect_inputs(Path(args.input))):
        items.append(
            ManifestItem(
                index=index,
                stem=stem,
                image=image,
                labels=_resolve_aux(args.labels, stem, ".pgm"),
                prob_ca=_resolve_aux(args.prob_ca, stem, ""),
                prob_la=_resolve_aux(args.prob_la, stem, ""),
                unc_ca=_resolve_aux(args.unc_ca, stem, ".uc.pfm"),
                unc_la=_resolve_aux(args.unc_la, stem, ".ul.pfm"),
                umap=_resolve_aux(args.umap, stem, ".umap.pfm"),
                ca=_resolve_aux(args.ca, stem, ".ca.pfm"),
                la=_resolve_aux(args.la, stem, ".la.pfm"),
            )
        )
    report = run_batch(Manifest(mode=args.mode, items=items), cfg, out)
    for record in report["items"]:
        if "error" in record:
            print(f"[{record['index']}] {record['stem']}: ERROR {record['error']}", file=sys.stderr)
        else:
            print(f"[{record['index']}] {record['stem']}: {', '.join(record['outputs'].values())}")
    return 2 if report["failures"] else 0


def _cmd_density(args) -> int:
    out = _out_dir(args)
    failures = 0
    records = []
    for index, (stem, image) in enumerate(_collect_inputs(Path(args.input))):
        try:
            img = read_pfm(image)
            amp, _ = decompose(fft2_centered(img))
            density = angular_density(amp)
            path = out / f"{stem}.density.csv"
            with open(path, "w", encoding="utf-8") as f:
                for degree, value in enumerate(density):
                    f.write(f"{degree},{float(value)!r}\n")
            records.append({"index": index, "stem": stem, "outputs": {"density": path.name}})
            print(f"[{index}] {stem}: {path.name}")
        except Exception as exc:
            failures += 1
            records.append({"index": index, "stem": stem, "error": str(exc)})
            print(f"[{index}] {stem}: ERROR {exc}", file=sys.stderr)
    write_report(out / "report.json", {"mode": "density", "items": records, "failures": failures})
    return 2 if failures else 0


def _cmd_dice(args) -> int:
    out = _out_dir(args)
    gt_arg = args.labels
    failures = 0
    records = []
    for index, (stem, pred_path) in enumerate(_collect_inputs(Path(args.input), suffix=".pgm")):
        try:
            gt_path = _resolve_aux(gt_arg, stem, ".pgm")
            pred = read_pgm(pred_path)
            gt = read_pgm(gt_path)
            c = max(pred.num_classes, gt.num_classes)
            scores = dice_score(
                LabelMap(pred.data, num_classes=c), LabelMap(gt.data, num_classes=c)
            )
            named = {str(k): v for k, v in scores.items()}
            records.append({"index": index, "stem": stem, "dice": named})
            print(f"[{index}] {stem}: " + ", ".join(f"class {k}: {v:.4f}" for k, v in named.items()))
        except Exception as exc:
            failures += 1
            records.append({"index": index, "stem": stem, "error": str(exc)})
            print(f"[{index}] {stem}: ERROR {exc}", file=sys.stderr)
    write_report(out / "report.json", {"mode": "dice", "items": records, "failures": failures})
    return 2 if failures else 0


def _cmd_preprocess(args) -> int:
    out = _out_dir(args)
    if (args.hu_lo is None) != (args.hu_hi is None):
        raise ConfigError("--hu-lo and --hu-hi must be given together")
    failures = 0
    records = []
    for index, (stem, image) in enumerate(_collect_inputs(Path(args.input))):
        try:
            img = read_pfm(image)
            if args.hu_lo is not None:
                img = hu_window(img, args.hu_lo, args.hu_hi)
            if args.top_fraction is not None:
                img = percentile_clip(img, args.top_fraction)
            img = center_crop_square(img)
            img = np.clip(resize_bilinear(minmax_normalize(img), args.size, args.size), 0.0, 1.0)
            path = out / f"{stem}.pre.pfm"
            write_pfm(path, img)
            outputs = {"image": path.name}
            labels_path = _resolve_aux(args.labels, stem, ".pgm")
            if labels_path is not None:
                labels = read_pgm(labels_path)
                labels = LabelMap(center_crop_square(labels.data), labels.num_classes)
                labels = resize_nearest_labels(labels, args.size, args.size)
                lpath = out / f"{stem}.pre.pgm"
                write_pgm(lpath, labels)
                outputs["labels"] = lpath.name
            records.append({"index": index, "stem": stem, "outputs": outputs})
            print(f"[{index}] {stem}: {', '.join(outputs.values())}")
        except Exception as exc:
            failures += 1
            records.append({"index": index, "stem": stem, "error": str(exc)})
            print(f"[{index}] {stem}: ERROR {exc}", file=sys.stderr)
    write_report(out / "report.json", {"mode": "preprocess", "items": records, "failures": failures})
    return 2 if failures else 0


def _cmd_replay(args) -> int:
    report = read_report(args.report)
    written = replay_item(report, args.index, _out_dir(args))
    print(f"[{args.index}] replayed: {', '.join(written.values())}")
    return 0


def _cmd_entropy(args) -> int:
    out = _out_dir(args)
    prob = read_probability_maps(args.prob)
    u = entropy_map(prob)
    stem = Path(args.prob).name
    path = out / f"{stem}.unc.pfm"
    write_pfm(path, u)
    print(f"{stem}: {path.name}")
    return 0


def _cmd_fuse(args) -> int:
    cfg = _load_config(args)
    out = _out_dir(args)
    uc = validate_uncertainty_map(read_pfm(args.unc_ca), "unc_ca")
    ul = validate_uncertainty_map(read_pfm(args.unc_la), "unc_la")
    u_map = fuse_guidance(uc, ul, cfg)
    stem = _stem_of(Path(args.unc_ca))
    path = out / f"{stem}.umap.pfm"
    write_pfm(path, u_map)
    print(f"{stem}: {path.name}")
    return 0


def _add_common(p: argparse.ArgumentParser, with_seed: bool = True) -> None:
    p.add_argument("--out", required=True, help="output directory")
    if with_seed:
        p.add_argument("--config", help="JSON config file (AugConfig fields)")
        p.add_argument("--seed", type=int, help="root seed (overrides config; FIESTA_SEED overrides both)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="fiesta", description="Deterministic Fourier-domain augmentation engine")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    for mode in AUGMENT_MODES:
        p = sub.add_parser(mode, help=f"run the {mode} augmentation over a file or directory")
        p.add_argument("--input", required=True, help="PFM slice or directory of slices")
        p.add_argument("--labels", help="PGM label map or directory (<stem>.pgm)")
        p.add_argument("--prob-ca", dest="prob_ca", help="probability-map stem or directory for the fat view")
        p.add_argument("--prob-la", dest="prob_la", help="probability-map stem or directory for the lfat view")
        p.add_argument("--unc-ca", dest="unc_ca", help="precomputed uncertainty PFM (or dir of <stem>.uc.pfm)")
        p.add_argument("--unc-la", dest="unc_la", help="precomputed uncertainty PFM (or dir of <stem>.ul.pfm)")
        p.add_argument("--umap", help="precomputed fused guidance PFM (or dir of <stem>.umap.pfm)")
        p.add_argument("--ca", help="precomputed fat image (or dir of <stem>.ca.pfm)")
        p.add_argument("--la", help="precomputed lfat image (or dir of <stem>.la.pfm)")
        _add_common(p)
        p.set_defaults(func=_cmd_augment, mode=mode)

    p = sub.add_parser("density", help="dump the angular density of each slice's amplitude spectrum as CSV")
    p.add_argument("--input", required=True)
    _add_common(p, with_seed=False)
    p.set_defaults(func=_cmd_density)

    p = sub.add_parser("dice", help="per-class Dice between predicted and ground-truth PGM label maps")
    p.add_argument("--input", required=True, help="predicted PGM or directory")
    p.add_argument("--labels", required=True, help="ground-truth PGM or directory")
    _add_common(p, with_seed=False)
    p.set_defaults(func=_cmd_dice)

    p = sub.add_parser("preprocess", help="window/clip raw slices, center-crop, and resize")
    p.add_argument("--input", required=True)
    p.add_argument("--labels", help="PGM label map or directory to resize alongside")
    p.add_argument("--hu-lo", dest="hu_lo", type=float, help="window lower bound (raw units)")
    p.add_argument("--hu-hi", dest="hu_hi", type=float, help="window upper bound (raw units)")
    p.add_argument("--top-fraction", dest="top_fraction", type=float, help="clip the brightest fraction (e.g. 0.005)")
    p.add_argument("--size", type=int, default=192, help="output side length (default 192)")
    _add_common(p, with_seed=False)
    p.set_defaults(func=_cmd_preprocess)

    p = sub.add_parser("replay", help="re-run one item from a report.json bit-exactly")
    p.add_argument("--report", required=True)
    p.add_argument("--index", type=int, required=True)
    _add_common(p, with_seed=False)
    p.set_defaults(func=_cmd_replay)

    p = sub.add_parser("entropy", help="normalized entropy map of a probability-map stem")
    p.add_argument("--prob", required=True, help="probability-map stem (<stem>.c<k>.pfm planes)")
    _add_common(p, with_seed=False)
    p.set_defaults(func=_cmd_entropy)

    p = sub.add_parser("fuse", help="fuse two uncertainty maps into a guidance map")
    p.add_argument("--unc-ca", dest="unc_ca", required=True)
    p.add_argument("--unc-la", dest="unc_la", required=True)
    _add_common(p)
    p.set_defaults(func=_cmd_fuse)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ConfigError, InvalidInputError, OSError, json.JSONDecodeError) as exc:
        print(f"fiesta: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
