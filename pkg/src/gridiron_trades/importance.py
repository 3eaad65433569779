"""Model-agnostic feature importance and cross-model diversity measures.

Permutation importance treats the scorer as a black box: shuffle one
feature column, measure the score drop.  Importances from tiered model
groups are accuracy-boosted and normalized, then multiple models are
ensembled with weights proportional to each model's accuracy, rank
diversity, and importance variance.

All shuffles draw from generators seeded by (seed, feature name), so
per-feature computations are reproducible and independently parallel.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Mapping, Sequence

import numpy as np

from .valuation import FeatureVector


@dataclass(frozen=True)
class LabeledDataset:
    """Feature rows with binary good/bad labels (1 = good)."""

    rows: tuple[FeatureVector, ...]
    labels: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.rows) != len(self.labels):
            raise ValueError("rows and labels must have equal length")

    def __len__(self) -> int:
        return len(self.rows)


ScoreFn = Callable[[LabeledDataset], float]


def _feature_rng(seed: int, feature: str) -> np.random.Generator:
    # Derive the stream from the feature name's bytes: stable across
    # processes, unlike hash().
    entropy = [seed & 0xFFFFFFFF, len(feature)] + list(feature.encode("utf-8"))
    return np.random.default_rng(np.random.SeedSequence(entropy))


def permutation_importance(
    score_fn: ScoreFn,
    data: LabeledDataset,
    feature: str,
    k: int = 10,
    seed: int = 0,
) -> float:
    """Score drop after shuffling one feature column, averaged over k shuffles."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if len(data) < 2:
        raise ValueError("need at least 2 rows to permute")
    for row in data.rows:
        if feature not in row:
            raise KeyError(f"feature {feature!r} missing from a dataset row")

    base = score_fn(data)
    column = [row[feature] for row in data.rows]
    rng = _feature_rng(seed, feature)

    total = 0.0
    for _ in range(k):
        order = rng.permutation(len(column))
        rows = tuple(
            {**row, feature: column[order[i]]} for i, row in enumerate(data.rows)
        )
        total += score_fn(LabeledDataset(rows=rows, labels=data.labels))
    return base - total / k


def tier_boost(importance: float, tier_accuracy: float) -> float:
    """Reflect a tiered model group's accuracy into one feature's importance."""
    if not (0.0 <= tier_accuracy <= 1.0):
        raise ValueError("tier_accuracy must be in [0,1]")
    return (
        0.5 * math.exp(tier_accuracy * importance)
        + 0.5 * math.tan(tier_accuracy) * importance
        + importance
    )


def normalize_importances(boosted: Sequence[float]) -> list[float]:
    total = sum(boosted)
    if total <= 0:
        raise ValueError("cannot normalize an all-zero importance list")
    return [x / total for x in boosted]


# ----------------------------------------------------------------------
# Diversity notation
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class DiversityTriple:
    """Accuracy @ average rank difference @ importance variance."""

    accuracy: float
    avg_rank_diff: float
    importance_variance: float

    def __post_init__(self) -> None:
        if not (0.0 <= self.accuracy <= 1.0 and 0.0 <= self.avg_rank_diff <= 1.0):
            raise ValueError("accuracy and avg_rank_diff must be in [0,1]")
        if self.importance_variance < 0:
            raise ValueError("variance must be >= 0")

    def render(self) -> str:
        return (
            f"{self.accuracy * 100:.2f}%"
            f"@{self.avg_rank_diff * 100:.2f}%"
            f"@{self.importance_variance:.3f}"
        )


def max_rank_displacement(n: int) -> int:
    """Maximum total displacement of a permutation of n items: floor(n^2/2)."""
    return (n * n) // 2


def rank_diff_pct(ranks_a: Sequence[str], ranks_b: Sequence[str]) -> float:
    """Total rank displacement between two orderings of the same features,
    as a fraction of the maximum possible displacement."""
    if sorted(ranks_a) != sorted(ranks_b):
        raise ValueError("rankings must order the same feature set")
    n = len(ranks_a)
    max_diff = max_rank_displacement(n)
    if max_diff == 0:
        return 0.0
    pos_b = {name: i for i, name in enumerate(ranks_b)}
    total = sum(abs(i - pos_b[name]) for i, name in enumerate(ranks_a))
    return total / max_diff


def avg_rank_diff(vs_classical: float, vs_sme: float) -> float:
    return (vs_classical + vs_sme) / 2.0


def importance_variance(importances: Sequence[float]) -> float:
    """Population variance of an importance vector."""
    if not importances:
        raise ValueError("importance list is empty")
    mu = sum(importances) / len(importances)
    return sum((x - mu) ** 2 for x in importances) / len(importances)


def diversity_triple(accuracy: float, rank_diff: float, variance: float) -> DiversityTriple:
    return DiversityTriple(accuracy=accuracy, avg_rank_diff=rank_diff, importance_variance=variance)


# ----------------------------------------------------------------------
# Cross-model ensemble
# ----------------------------------------------------------------------

def ensemble_weights(
    models: Sequence[tuple[Mapping[str, float], DiversityTriple]],
) -> dict[str, float]:
    """Combine per-model importances, weighting each model by its share of
    total accuracy, rank diversity, and importance variance.

    A zero denominator drops that term for every model rather than failing:
    a stat that never varies carries no weighting information.
    """
    if not models:
        raise ValueError("need at least one model")
    acc_total = sum(stats.accuracy for _, stats in models)
    rank_total = sum(stats.avg_rank_diff for _, stats in models)
    var_total = sum(stats.importance_variance for _, stats in models)

    features: list[str] = []
    for importances, _ in models:
        for name in importances:
            if name not in features:
                features.append(name)

    combined: dict[str, float] = {}
    for name in features:
        value = 0.0
        for importances, stats in models:
            p = importances.get(name, 0.0)
            if acc_total > 0:
                value += stats.accuracy * p / acc_total
            if rank_total > 0:
                value += stats.avg_rank_diff * p / rank_total
            if var_total > 0:
                value += stats.importance_variance * p / var_total
        combined[name] = value
    return combined


def diversity_report(
    profiles: Sequence,
    sme_rank_order: Sequence[str] | None = None,
) -> list[dict]:
    """Per-model diversity rows mirroring the model evaluation table.

    Each model's rank ordering is compared against the reference orderings
    of the other computing paradigms (the highest-accuracy profile of each,
    plus the expert ordering when supplied); the comparisons are averaged.
    """
    refs: dict[str, Sequence[str]] = {}
    for mode in ("classical", "quantum"):
        candidates = [p for p in profiles if p.compute_mode == mode]
        if candidates:
            best = max(candidates, key=lambda p: (p.accuracy, p.model_id))
            refs[mode] = best.rank_order
    if sme_rank_order is not None:
        refs["sme"] = tuple(sme_rank_order)

    rows = []
    for profile in profiles:
        others = [order for mode, order in sorted(refs.items()) if mode != profile.compute_mode]
        diffs = [rank_diff_pct(profile.rank_order, order) for order in others]
        ard = sum(diffs) / len(diffs) if diffs else 0.0
        norm = normalize_importances(list(profile.importances.values()))
        triple = DiversityTriple(profile.accuracy, ard, importance_variance(norm))
        rows.append(
            {
                "model_id": profile.model_id,
                "compute_mode": profile.compute_mode,
                "accuracy": profile.accuracy,
                "avg_rank_diff": ard,
                "variance": triple.importance_variance,
                "rendered_triple": triple.render(),
            }
        )
    return rows
