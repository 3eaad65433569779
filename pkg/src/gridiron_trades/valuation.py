"""Broad per-player market valuation primitives.

Two pipelines produce raw valuations: an expert rule pipeline (tier scores,
recency decay, status and positional-equivalence adjustments, prior-season
momentum) and an importance-weighted model pipeline (feature vector times a
trained model's importance weights).  Both are normalized into the daily
expert valuation range so sheets from different computing modes are
comparable, then adjusted for the acquiring roster's positional depth.

Everything here is a pure function over immutable inputs.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .league import LeagueRules, PlayerRecord, PlayerStatus, Position

# Feature vectors are plain name -> value maps; names come from the
# registry declared in features.py.
FeatureVector = Mapping[str, float]

DEFAULT_STATUS_PENALTIES: Mapping[PlayerStatus, float] = {
    PlayerStatus.ACTIVE: 1.0,
    PlayerStatus.PROBABLE: 0.95,
    PlayerStatus.QUESTIONABLE: 0.8,
    PlayerStatus.DOUBTFUL: 0.6,
    PlayerStatus.COVID_LIST: 0.5,
    PlayerStatus.SUSPENDED: 0.4,
    PlayerStatus.OUT: 0.3,
    PlayerStatus.INJURED_RESERVE: 0.2,
}

# Positional ranks are grouped into bands of 5 when looking up
# equivalence-table multipliers ("1-5", "6-10", ...).
RANK_BAND_WIDTH = 5


def rank_band(rank: int) -> str:
    if rank < 1:
        raise ValueError("rank is 1-based")
    lo = ((rank - 1) // RANK_BAND_WIDTH) * RANK_BAND_WIDTH + 1
    return f"{lo}-{lo + RANK_BAND_WIDTH - 1}"


def rank_to_score(rank: int, pool_size: int) -> float:
    """Ordinal rank (1 = best of pool_size) to a [0,1] score, best -> 1."""
    if pool_size < 1 or not (1 <= rank <= pool_size):
        raise ValueError(f"rank {rank} out of range for pool of {pool_size}")
    return (pool_size - rank + 1) / pool_size


@dataclass(frozen=True)
class ValuationRange:
    """Daily expert valuation range plus one mode's raw valuation range."""

    sme_low: float
    sme_high: float
    mode_low: float
    mode_high: float

    def __post_init__(self) -> None:
        if self.sme_low > self.sme_high or self.mode_low > self.mode_high:
            raise ValueError("ranges must satisfy low <= high")


@dataclass(frozen=True)
class TierScores:
    """Per-player [0,1] scores for the four expert feature tiers."""

    tier1: float  # season-long projection rank within position
    tier2: float  # boom ratio, bust ratio, next-game projection
    tier3: float  # current-week boom, percent started, preseason, PV
    tier4: float  # average draft position (brand)


# Equivalence tables are keyed position -> rank band -> multiplier.
EquivalenceTable = Mapping[str, Mapping[str, float]]


@dataclass(frozen=True)
class SmeWeights:
    alpha1: float = 0.4
    alpha2: float = 0.3
    alpha3: float = 0.2
    decay_divisor: float = 3.0
    status_penalties: Mapping[PlayerStatus, float] = field(default_factory=lambda: dict(DEFAULT_STATUS_PENALTIES))
    equivalence_boost: EquivalenceTable = field(default_factory=dict)
    equivalence_expert: EquivalenceTable = field(default_factory=dict)

    def status_penalty(self, status: PlayerStatus) -> float:
        return float(self.status_penalties.get(status, 1.0))


def sme_weights_from_dict(doc: Mapping) -> SmeWeights:
    penalties = dict(DEFAULT_STATUS_PENALTIES)
    for key, value in doc.get("status_penalties", {}).items():
        penalties[PlayerStatus(key)] = float(value)
    return SmeWeights(
        alpha1=float(doc.get("alpha1", 0.4)),
        alpha2=float(doc.get("alpha2", 0.3)),
        alpha3=float(doc.get("alpha3", 0.2)),
        decay_divisor=float(doc.get("decay_divisor", 3.0)),
        status_penalties=penalties,
        equivalence_boost=doc.get("equivalence_boost", {}),
        equivalence_expert=doc.get("equivalence_expert", {}),
    )


def load_sme_weights(path: str) -> SmeWeights:
    with open(path, "r", encoding="utf-8") as fh:
        return sme_weights_from_dict(json.load(fh))


@dataclass(frozen=True)
class ModelImportanceProfile:
    """A trained model's accuracy and per-feature importance weights.

    Models are trained offline; their interpretability output is ingested
    here as data, which keeps the valuation pipeline independent of any
    training stack.
    """

    model_id: str
    compute_mode: str  # "sme" | "classical" | "quantum"
    accuracy: float
    importances: Mapping[str, float]
    rank_order: tuple[str, ...]

    def __post_init__(self) -> None:
        if not (0.0 <= self.accuracy <= 1.0):
            raise ValueError("accuracy must be in [0,1]")
        for name, w in self.importances.items():
            if not math.isfinite(w) or w < 0:
                raise ValueError(f"importance for {name!r} must be finite and >= 0")
        if sorted(self.rank_order) != sorted(self.importances):
            raise ValueError("rank_order must be a permutation of the importance names")


def profile_from_dict(doc: Mapping) -> ModelImportanceProfile:
    return ModelImportanceProfile(
        model_id=doc["model_id"],
        compute_mode=doc["compute_mode"],
        accuracy=float(doc["accuracy"]),
        importances={k: float(v) for k, v in doc["importances"].items()},
        rank_order=tuple(doc["rank_order"]),
    )


def load_profile(path: str) -> ModelImportanceProfile:
    with open(path, "r", encoding="utf-8") as fh:
        return profile_from_dict(json.load(fh))


# ----------------------------------------------------------------------
# Boom / bust ratios
# ----------------------------------------------------------------------

def percentile_rank(value: float, pool: Sequence[float]) -> float:
    """Percent of pool scores strictly below value (strictly-less convention)."""
    if not pool:
        raise ValueError("percentile pool is empty")
    below = sum(1 for s in pool if s < value)
    return 100.0 * below / len(pool)


def boom_ratio(player_log: Sequence[float], position_pool: Sequence[float]) -> float:
    """Fraction of games scored at or above the pool's 85th percentile.

    An empty log returns 0.0: an unplayed rookie has no boom evidence.
    """
    if not position_pool:
        raise ValueError("position pool is empty")
    if not player_log:
        return 0.0
    booms = sum(1 for g in player_log if percentile_rank(g, position_pool) >= 85.0)
    return booms / len(player_log)


def bust_ratio(player_log: Sequence[float], position_pool: Sequence[float]) -> float:
    """Fraction of games scored at or below the pool's 15th percentile."""
    if not position_pool:
        raise ValueError("position pool is empty")
    if not player_log:
        return 0.0
    busts = sum(1 for g in player_log if percentile_rank(g, position_pool) <= 15.0)
    return busts / len(player_log)


# ----------------------------------------------------------------------
# Season-projection valuation (normal CDF)
# ----------------------------------------------------------------------

def projection_valuation(x_pts: float, mu_pts: float, sigma_pts: float) -> float:
    """P(score <= x_pts) under a normal fit of the positional point spread."""
    if sigma_pts <= 0:
        raise ValueError("sigma_pts must be > 0")
    z = (x_pts - mu_pts) / sigma_pts
    return 0.5 * (1.0 + math.erf(z / math.sqrt(2.0)))


# ----------------------------------------------------------------------
# Expert rule pipeline
# ----------------------------------------------------------------------

def sme_raw_valuation(tiers: TierScores, week: int, weights: SmeWeights) -> float:
    """Weighted tier combination with an exponentially decayed brand term."""
    brand_coeff = math.exp(-week / weights.decay_divisor)
    return (
        weights.alpha1 * tiers.tier1
        + weights.alpha2 * tiers.tier2
        + weights.alpha3 * tiers.tier3
        + brand_coeff * tiers.tier4
    )


def _table_multiplier(table: EquivalenceTable, position: Position, rank: int | None) -> float:
    if rank is None:
        return 1.0
    by_band = table.get(position.value)
    if not by_band:
        return 1.0
    return float(by_band.get(rank_band(rank), 1.0))


def apply_state_and_equivalence(
    raw: float,
    player: PlayerRecord,
    weights: SmeWeights,
    position_rank: int | None = None,
) -> float:
    """Penalize unavailable players and apply positional equivalence boosts.

    Missing table entries are identity multipliers, so empty tables leave
    the raw valuation unchanged for active players.
    """
    penalty = weights.status_penalty(player.status)
    b1 = _table_multiplier(weights.equivalence_boost, player.position, position_rank)
    b2 = _table_multiplier(weights.equivalence_expert, player.position, position_rank)
    return raw * penalty * b1 * b2


def momentum_blend(v_norm: float, avg_points_prev: float, week: int) -> float:
    """Blend in last season's points per game, fading to nothing by week 6.

    The prior-season contribution shrinks linearly with the week so the
    two branches meet exactly at week 6.
    """
    if week > 6:
        return 6.0 * v_norm
    return week * v_norm + (6 - week) * avg_points_prev


# ----------------------------------------------------------------------
# Range normalization and the model pipeline
# ----------------------------------------------------------------------

def normalize_to_sme_range(x: float, rng: ValuationRange) -> float:
    """Linearly map a mode's raw valuation into the expert range.

    Inputs outside [mode_low, mode_high] are clamped first: late-arriving
    players can fall outside the day's snapshot range.  A degenerate mode
    range maps everything to the midpoint of the expert range.
    """
    if rng.mode_high == rng.mode_low:
        return (rng.sme_low + rng.sme_high) / 2.0
    x = min(max(x, rng.mode_low), rng.mode_high)
    # Ratio first: bounded in [0,1], so a tiny mode range cannot overflow.
    ratio = (x - rng.mode_low) / (rng.mode_high - rng.mode_low)
    return rng.sme_low + (rng.sme_high - rng.sme_low) * ratio


def model_raw_valuation(
    features: FeatureVector,
    profile: ModelImportanceProfile,
    player: PlayerRecord,
    weights: SmeWeights,
) -> float:
    """State-penalized product sum of feature values and importance weights."""
    total = 0.0
    for name, w in profile.importances.items():
        if name not in features:
            raise KeyError(f"feature vector is missing {name!r} required by model {profile.model_id}")
        total += features[name] * w
    return weights.status_penalty(player.status) * total


def model_valuation(
    features: FeatureVector,
    profile: ModelImportanceProfile,
    player: PlayerRecord,
    rng: ValuationRange,
    weights: SmeWeights | None = None,
) -> float:
    raw = model_raw_valuation(features, profile, player, weights or SmeWeights())
    return normalize_to_sme_range(raw, rng)


# ----------------------------------------------------------------------
# Roster-context adjustments
# ----------------------------------------------------------------------

def slot_need(rules: LeagueRules, position: Position, acquiring_roster: Sequence[PlayerRecord]) -> float:
    """Starter-slot need multiplier on the acquiring roster, in (0, 1].

    One QB slot against four rostered QBs gives 0.25: the incoming player's
    value is reduced by 0.75.  No rostered player at the position means
    full need.
    """
    rostered = sum(1 for p in acquiring_roster if p.position == position)
    if rostered == 0:
        return 1.0
    return min(1.0, rules.slots_for(position) / rostered)


def positional_decay(rules: LeagueRules, position: Position, acquiring_roster: Sequence[PlayerRecord]) -> float:
    """Depth decay: each player beyond the starter slots halves, thirds, ..."""
    rostered = sum(1 for p in acquiring_roster if p.position == position)
    surplus = max(0, rostered - rules.slots_for(position))
    return 1.0 / (1.0 + surplus)


def roster_adjustments(
    valuation: float,
    player: PlayerRecord,
    acquiring_roster: Sequence[PlayerRecord],
    rules: LeagueRules,
) -> float:
    """Scale a broad valuation by the acquiring roster's need and depth.

    Both multipliers are <= 1, so adjustment never inflates a valuation.
    """
    need = slot_need(rules, player.position, acquiring_roster)
    decay = positional_decay(rules, player.position, acquiring_roster)
    return valuation * need * decay
