"""Axis-aligned box arithmetic.

A box is a tuple ``(x, y, w, h)``: the span ``[x, x+w) x [y, y+h)``.
"""

from __future__ import annotations

import numpy as np

Box = tuple[float, float, float, float]


def box_center(box: Box) -> tuple[float, float]:
    x, y, w, h = box
    return x + 0.5 * w, y + 0.5 * h


def box_from_center(cx: float, cy: float, w: float, h: float) -> Box:
    return (cx - 0.5 * w, cy - 0.5 * h, w, h)


def box_area(box: Box) -> float:
    return max(0.0, box[2]) * max(0.0, box[3])


def intersection_area(a: Box, b: Box) -> float:
    ix = min(a[0] + a[2], b[0] + b[2]) - max(a[0], b[0])
    iy = min(a[1] + a[3], b[1] + b[3]) - max(a[1], b[1])
    if ix <= 0.0 or iy <= 0.0:
        return 0.0
    return ix * iy


def iou(a: Box, b: Box) -> float:
    inter = intersection_area(a, b)
    if inter == 0.0:
        return 0.0
    union = box_area(a) + box_area(b) - inter
    return inter / union


def iou_many(box: Box, others: np.ndarray) -> np.ndarray:
    """IoU of one box against an ``(n, 4)`` array of boxes."""
    others = np.asarray(others, dtype=float).reshape(-1, 4)
    x, y, w, h = box
    ix = np.minimum(x + w, others[:, 0] + others[:, 2]) - np.maximum(x, others[:, 0])
    iy = np.minimum(y + h, others[:, 1] + others[:, 3]) - np.maximum(y, others[:, 1])
    inter = np.clip(ix, 0.0, None) * np.clip(iy, 0.0, None)
    union = w * h + others[:, 2] * others[:, 3] - inter
    with np.errstate(invalid="ignore", divide="ignore"):
        out = np.where(union > 0.0, inter / union, 0.0)
    return out


def max_iou(box: Box, others) -> float:
    """Largest IoU of ``box`` against an iterable of boxes (0.0 if empty)."""
    others = list(others)
    if not others:
        return 0.0
    return float(iou_many(box, np.asarray(others)).max())
