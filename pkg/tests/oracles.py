"""Independent brute-force oracles.

Everything here recomputes expectations from first principles (exhaustive
enumeration, quadrature) without touching the implementation paths it
checks.
"""

from __future__ import annotations

import math
from itertools import combinations
from typing import Sequence

from scipy import integrate


def knapsack_brute_force(
    values: Sequence[int],
    weights: Sequence[int],
    capacity: int,
    max_items: int,
) -> int:
    """Best total value over all subsets of size <= max_items."""
    n = len(values)
    best = 0
    for k in range(1, min(max_items, n) + 1):
        for combo in combinations(range(n), k):
            w = sum(weights[i] for i in combo)
            if w <= capacity:
                best = max(best, sum(values[i] for i in combo))
    return best


def percentile_below(value: float, pool: Sequence[float]) -> float:
    return 100.0 * sum(1 for s in pool if s < value) / len(pool)


def boom_brute_force(log: Sequence[float], pool: Sequence[float]) -> float:
    if not log:
        return 0.0
    return sum(1 for g in log if percentile_below(g, pool) >= 85.0) / len(log)


def bust_brute_force(log: Sequence[float], pool: Sequence[float]) -> float:
    if not log:
        return 0.0
    return sum(1 for g in log if percentile_below(g, pool) <= 15.0) / len(log)


def normal_cdf_quadrature(x: float, mu: float, sigma: float) -> float:
    """Numerically integrate the normal density up to x."""

    def pdf(t: float) -> float:
        return math.exp(-((t - mu) ** 2) / (2 * sigma**2)) / (math.sqrt(2 * math.pi) * sigma)

    result, _ = integrate.quad(pdf, mu - 12 * sigma, x, limit=200)
    return result


def slots_fillable_exhaustive(slot_position_sets, roster_positions) -> bool:
    """Try every assignment of players to slots, backtracking."""
    slots = list(slot_position_sets)

    def assign(slot_idx: int, used: set[int]) -> bool:
        if slot_idx == len(slots):
            return True
        for i, pos in enumerate(roster_positions):
            if i not in used and pos in slots[slot_idx]:
                if assign(slot_idx + 1, used | {i}):
                    return True
        return False

    return assign(0, set())


def best_subset_pair(items_a, items_b, capacity_a, capacity_b, max_items):
    """Enumerate every feasible (side A, side B) subset pair; return the
    pair of id sets maximizing each side's value independently with the
    documented tie-break (value desc, fewer items, lexicographic ids)."""

    def best_side(items, capacity):
        best_key = None
        best_ids: tuple[str, ...] = ()
        n = len(items)
        for k in range(0, min(max_items, n) + 1):
            for combo in combinations(range(n), k):
                w = sum(items[i].weight for i in combo)
                if w > capacity:
                    continue
                v = sum(items[i].value for i in combo)
                ids = tuple(sorted(items[i].player_id for i in combo))
                key = (-v, len(ids), ids)
                if best_key is None or key < best_key:
                    best_key = key
                    best_ids = ids
        return best_ids

    return best_side(items_a, capacity_a), best_side(items_b, capacity_b)
