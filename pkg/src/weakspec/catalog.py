"""Rule-driven class labeling, derived abundance ratios, and stratified splits.

Class codes: 0 = NMP (not metal poor), 1 = CEMP (carbon enhanced metal
poor), 2 = CnMP (carbon normal metal poor). Labels derive from two
abundance thresholds; the split keeps per-class proportions at 7:1:2.
"""

from __future__ import annotations

import math
from typing import Sequence

import numpy as np

from .errors import ValidationError

NMP = 0
CEMP = 1
CNMP = 2

CLASS_NAMES = ("NMP", "CEMP", "CnMP")

#: [Fe/H] at or above this value -> NMP (equality resolves to NMP).
METAL_POOR_THRESHOLD = -1.0
#: [C/Fe] at or above this value (within the metal-poor branch) -> CEMP.
CARBON_ENHANCED_THRESHOLD = 0.7

SPLIT_NAMES = ("train", "val", "test")
DEFAULT_SPLIT_RATIOS = (0.7, 0.1, 0.2)


def carbon_ratio(c_h: float, fe_h: float) -> float:
    """[C/Fe] = [C/H] - [Fe/H]."""
    if not (math.isfinite(c_h) and math.isfinite(fe_h)):
        raise ValidationError(f"carbon_ratio requires finite inputs, got ({c_h}, {fe_h})")
    return c_h - fe_h


def assign_label(
    fe_h: float,
    c_fe: float,
    *,
    metal_poor_threshold: float = METAL_POOR_THRESHOLD,
    carbon_enhanced_threshold: float = CARBON_ENHANCED_THRESHOLD,
) -> int:
    """Classify a star from its metallicity and carbon-to-iron ratio.

    fe_h >= metal_poor_threshold           -> 0 (NMP)
    fe_h <  threshold and c_fe >= ce_thr   -> 1 (CEMP)
    fe_h <  threshold and c_fe <  ce_thr   -> 2 (CnMP)
    """
    if not (math.isfinite(fe_h) and math.isfinite(c_fe)):
        raise ValidationError(f"assign_label requires finite inputs, got ({fe_h}, {c_fe})")
    if fe_h >= metal_poor_threshold:
        return NMP
    return CEMP if c_fe >= carbon_enhanced_threshold else CNMP


def _split_counts(n_class: int, ratios: Sequence[float]) -> list[int]:
    """Largest-remainder apportionment, forcing every split non-empty."""
    exact = [n_class * r for r in ratios]
    counts = [int(math.floor(e)) for e in exact]
    remainders = [e - c for e, c in zip(exact, counts)]
    short = n_class - sum(counts)
    for idx in sorted(range(len(ratios)), key=lambda i: (-remainders[i], i))[:short]:
        counts[idx] += 1
    # every class must appear in every split; steal from the largest bucket
    while min(counts) == 0:
        counts[counts.index(max(counts))] -= 1
        counts[counts.index(min(counts))] += 1
    return counts


def stratified_split(
    labels: Sequence[int],
    ratios: Sequence[float] = DEFAULT_SPLIT_RATIOS,
    seed: int = 0,
    keys: Sequence[int] | None = None,
) -> list[str]:
    """Assign each sample to train/val/test, stratified by class label.

    Per-class counts follow ``ratios`` by largest remainder (within one
    sample). Assignment is a pure function of (label, key, seed): each
    sample is ranked within its class by a hash of (seed, key), so
    reordering the input with stable keys does not change who lands in
    which split. ``keys`` defaults to the positional index.
    """
    labels = np.asarray(labels, dtype=np.int64)
    if labels.ndim != 1:
        raise ValidationError("labels must be a 1-D sequence")
    if abs(sum(ratios) - 1.0) > 1e-9 or len(ratios) != 3:
        raise ValidationError(f"ratios must be 3 values summing to 1, got {ratios}")
    if keys is None:
        keys = np.arange(labels.size, dtype=np.uint64)
    else:
        keys = np.asarray(keys, dtype=np.uint64)
        if keys.shape != labels.shape:
            raise ValidationError("keys must align one-to-one with labels")

    # SplitMix64 of (key ^ seed-derived constant): stable per-sample score.
    mix = (keys + np.uint64((seed * 0x9E3779B97F4A7C15) & 0xFFFFFFFFFFFFFFFF)).copy()
    for shift, mult in ((30, 0xBF58476D1CE4E5B9), (27, 0x94D049BB133111EB)):
        mix ^= mix >> np.uint64(shift)
        mix = (mix * np.uint64(mult)) & np.uint64(0xFFFFFFFFFFFFFFFF)
    mix ^= mix >> np.uint64(31)

    assignment = np.empty(labels.size, dtype=object)
    for cls in np.unique(labels):
        idx = np.flatnonzero(labels == cls)
        if idx.size < 3:
            raise ValidationError(
                f"class {int(cls)} has {idx.size} samples; need >= 3 for a 3-way split"
            )
        order = idx[np.lexsort((keys[idx], mix[idx]))]
        n_train, n_val, _ = _split_counts(idx.size, ratios)
        assignment[order[:n_train]] = "train"
        assignment[order[n_train : n_train + n_val]] = "val"
        assignment[order[n_train + n_val :]] = "test"
    return assignment.tolist()
