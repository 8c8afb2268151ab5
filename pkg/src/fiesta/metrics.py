"""Segmentation overlap scoring."""

from __future__ import annotations

import numpy as np

from .types import InvalidInputError, LabelMap


def dice_score(pred: LabelMap, gt: LabelMap) -> dict[int, float]:
    """Per-class Dice overlap 2|A∩B| / (|A|+|B|) for classes 1..C-1.

    Background (class 0) is not scored.  A class empty in both maps
    scores 1.0.
    """
    if pred.data.shape != gt.data.shape:
        raise InvalidInputError("prediction and ground truth dimensions must match")
    if pred.num_classes != gt.num_classes:
        raise InvalidInputError("prediction and ground truth class counts must match")
    scores: dict[int, float] = {}
    for c in range(1, gt.num_classes):
        p = pred.data == c
        g = gt.data == c
        total = int(p.sum()) + int(g.sum())
        if total == 0:
            scores[c] = 1.0
        else:
            scores[c] = 2.0 * int(np.logical_and(p, g).sum()) / total
    return scores
