"""Blinded rating capture and evaluation metrics.

Raters score each trade 1-10 twice, once per side; the two sides average
into an overall rating and anything at 4 or above counts as a good trade.
Compute modes are hidden behind shuffled A/B/C labels during a session.
Ratings append to a JSON-lines file through a single-writer lock, with the
newest rating per (rater, trade, side) winning.
"""

from __future__ import annotations

import json
import os
import threading
from dataclasses import dataclass, asdict
from typing import Iterable, Mapping, Sequence

import numpy as np

GOOD_TRADE_THRESHOLD = 4.0
BLIND_LABELS = ("A", "B", "C")


@dataclass(frozen=True)
class TradeRating:
    fingerprint: str
    rater_id: str
    side: str  # "A" | "B"
    rating: int  # 1..10
    blinded_mode_label: str = ""

    def __post_init__(self) -> None:
        if self.side not in ("A", "B"):
            raise ValueError("side must be 'A' or 'B'")
        if not (1 <= self.rating <= 10):
            raise ValueError("rating must be in 1..10")


def overall_rating(side_a: float, side_b: float) -> float:
    return (side_a + side_b) / 2.0


def completed_overall_ratings(ratings: Iterable[TradeRating]) -> dict[tuple[str, str], float]:
    """Overall rating per (rater, trade) with both sides present.

    Later ratings replace earlier ones for the same (rater, trade, side).
    Pending one-sided ratings are excluded.
    """
    latest: dict[tuple[str, str, str], int] = {}
    for r in ratings:
        latest[(r.rater_id, r.fingerprint, r.side)] = r.rating
    overall: dict[tuple[str, str], float] = {}
    for (rater, fingerprint, side), value in latest.items():
        other = latest.get((rater, fingerprint, "B" if side == "A" else "A"))
        if other is not None:
            overall[(rater, fingerprint)] = overall_rating(value, other)
    return overall


def good_trade_accuracy(overall_ratings: Sequence[float]) -> float | None:
    """Fraction of overall ratings at or above the good-trade threshold."""
    if not overall_ratings:
        return None
    good = sum(1 for r in overall_ratings if r >= GOOD_TRADE_THRESHOLD)
    return good / len(overall_ratings)


def rating_distribution(ratings: Sequence[float]) -> dict[int, float]:
    """Percentage histogram over the 1..10 bins (half-ratings round up)."""
    bins = {b: 0 for b in range(1, 11)}
    for r in ratings:
        b = min(10, max(1, int(r + 0.5)))
        bins[b] += 1
    total = len(ratings)
    if total == 0:
        return {b: 0.0 for b in bins}
    return {b: 100.0 * count / total for b, count in bins.items()}


def cohen_kappa(rater_x: Sequence[bool], rater_y: Sequence[bool]) -> float:
    """Two-rater Cohen's kappa over shared trades, binarized good/bad."""
    if len(rater_x) != len(rater_y):
        raise ValueError("raters must score the same trades")
    n = len(rater_x)
    if n == 0:
        raise ValueError("no shared trades")
    p_o = sum(1 for x, y in zip(rater_x, rater_y) if x == y) / n
    px = sum(rater_x) / n
    py = sum(rater_y) / n
    p_e = px * py + (1 - px) * (1 - py)
    if p_e == 1.0:
        if p_o == 1.0:
            return 1.0
        raise ValueError("degenerate marginals with imperfect agreement")
    return (p_o - p_e) / (1 - p_e)


def pairwise_kappas(ratings: Iterable[TradeRating]) -> dict[tuple[str, str], float]:
    """Kappa for every rater pair sharing at least one completed trade."""
    overall = completed_overall_ratings(ratings)
    by_rater: dict[str, dict[str, bool]] = {}
    for (rater, fingerprint), value in overall.items():
        by_rater.setdefault(rater, {})[fingerprint] = value >= GOOD_TRADE_THRESHOLD
    kappas: dict[tuple[str, str], float] = {}
    raters = sorted(by_rater)
    for i, rx in enumerate(raters):
        for ry in raters[i + 1 :]:
            shared = sorted(set(by_rater[rx]) & set(by_rater[ry]))
            if not shared:
                continue
            kappas[(rx, ry)] = cohen_kappa(
                [by_rater[rx][f] for f in shared],
                [by_rater[ry][f] for f in shared],
            )
    return kappas


def uniqueness(trades_by_mode: Mapping[str, Iterable[str]]) -> float | None:
    """Fraction of served trades whose fingerprint shows up under exactly
    one compute mode.  Within a mode, fingerprints are a set, so repeats
    of the same trade inside one mode do not count twice."""
    mode_sets = {mode: set(fps) for mode, fps in trades_by_mode.items()}
    mode_sets = {mode: fps for mode, fps in mode_sets.items() if fps}
    if len(mode_sets) < 2:
        return None
    appearances: dict[str, int] = {}
    for fps in mode_sets.values():
        for fp in fps:
            appearances[fp] = appearances.get(fp, 0) + 1
    total = sum(len(fps) for fps in mode_sets.values())
    unique = sum(
        1 for fps in mode_sets.values() for fp in fps if appearances[fp] == 1
    )
    return unique / total


def blinded_labels(modes: Sequence[str], seed: int) -> dict[str, str]:
    """Stable per-session label -> mode shuffle (labels A, B, C, ...)."""
    rng = np.random.default_rng(seed)
    order = [modes[i] for i in rng.permutation(len(modes))]
    labels = [BLIND_LABELS[i] if i < len(BLIND_LABELS) else f"M{i}" for i in range(len(order))]
    return dict(zip(labels, order))


class RatingStore:
    """Append-only JSON-lines store with a single-writer lock."""

    def __init__(self, path: str):
        self.path = path
        self._lock = threading.Lock()

    def append(self, rating: TradeRating) -> None:
        line = json.dumps(asdict(rating), sort_keys=True)
        with self._lock:
            with open(self.path, "a", encoding="utf-8") as fh:
                fh.write(line + "\n")
                fh.flush()
                os.fsync(fh.fileno())

    def load(self) -> list[TradeRating]:
        if not os.path.exists(self.path):
            return []
        out: list[TradeRating] = []
        with open(self.path, "r", encoding="utf-8") as fh:
            for line in fh:
                line = line.strip()
                if not line:
                    continue
                doc = json.loads(line)
                out.append(
                    TradeRating(
                        fingerprint=doc["fingerprint"],
                        rater_id=doc["rater_id"],
                        side=doc["side"],
                        rating=int(doc["rating"]),
                        blinded_mode_label=doc.get("blinded_mode_label", ""),
                    )
                )
        return out


def evaluation_report(
    ratings: Iterable[TradeRating],
    trades_by_mode: Mapping[str, Iterable[str]] | None = None,
) -> dict:
    """Headline metrics: accuracy, distribution, agreement, uniqueness."""
    ratings = list(ratings)
    overall = completed_overall_ratings(ratings)
    values = sorted(overall.values())
    kappas = pairwise_kappas(ratings)
    report = {
        "rating_count": len(values),
        "good_trade_accuracy": good_trade_accuracy(values),
        "rating_distribution": rating_distribution(values),
        "pairwise_kappa": {f"{a}|{b}": k for (a, b), k in sorted(kappas.items())},
        "mean_kappa": (sum(kappas.values()) / len(kappas)) if kappas else None,
    }
    if trades_by_mode is not None:
        report["uniqueness"] = uniqueness(trades_by_mode)
    return report
