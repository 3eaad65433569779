"""Per-player feature extraction and expert tier scoring.

Positional pools (every player at a position across the player table)
supply the context for percentile features, boom/bust evidence, and
rank-based tier scores.  Model importance profiles reference features by
the registry names declared here.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .league import PlayerRecord, PlayerStatus, Position
from .valuation import (
    TierScores,
    boom_ratio,
    bust_ratio,
    percentile_rank,
    projection_valuation,
    rank_to_score,
)

FEATURE_REGISTRY: tuple[str, ...] = (
    "sentiment_score",
    "season_projection_pct",
    "next_game_projection_pct",
    "preseason_projection_pct",
    "season_actual_pct",
    "prev_avg_points_pct",
    "boom_ratio",
    "bust_ratio",
    "projection_valuation",
    "percent_owned",
    "percent_started",
    "draft_position_score",
    "opponent_rank_score",
    "games_left_frac",
    "healthy_flag",
)


@dataclass(frozen=True)
class PositionPool:
    """Aggregates over every player at one position."""

    position: Position
    log_scores: tuple[float, ...]
    season_projections: tuple[float, ...]
    next_game_projections: tuple[float, ...]
    preseason_projections: tuple[float, ...]
    season_actuals: tuple[float, ...]
    prev_averages: tuple[float, ...]
    adps: tuple[float, ...]
    opponent_ranks: tuple[int, ...]
    games_left: tuple[int, ...]
    mu_pts: float
    sigma_pts: float


def build_position_pools(players: Sequence[PlayerRecord]) -> dict[Position, PositionPool]:
    pools: dict[Position, PositionPool] = {}
    by_position: dict[Position, list[PlayerRecord]] = {}
    for p in players:
        by_position.setdefault(p.position, []).append(p)
    for position, group in by_position.items():
        projections = tuple(p.season_projection for p in group)
        mu = sum(projections) / len(projections)
        var = sum((x - mu) ** 2 for x in projections) / len(projections)
        logs: list[float] = []
        for p in group:
            logs.extend(p.game_log)
        pools[position] = PositionPool(
            position=position,
            log_scores=tuple(logs),
            season_projections=projections,
            next_game_projections=tuple(p.next_game_projection for p in group),
            preseason_projections=tuple(p.preseason_projection for p in group),
            season_actuals=tuple(p.season_actual for p in group),
            prev_averages=tuple(p.avg_points_prev for p in group),
            adps=tuple(p.adp for p in group),
            opponent_ranks=tuple(p.opponent_rank for p in group),
            games_left=tuple(p.games_left for p in group),
            mu_pts=mu,
            sigma_pts=var**0.5,
        )
    return pools


def minmax_score(value: float, pool: Sequence[float]) -> float:
    """Min-max position of value within pool; degenerate pools sit at 0.5."""
    if not pool:
        return 0.5
    lo, hi = min(pool), max(pool)
    if hi == lo:
        return 0.5
    return (min(max(value, lo), hi) - lo) / (hi - lo)


def _pool_pv(player: PlayerRecord, pool: PositionPool) -> float:
    if pool.sigma_pts <= 0:
        return 0.5
    return projection_valuation(player.season_projection, pool.mu_pts, pool.sigma_pts)


def _boom_bust(player: PlayerRecord, pool: PositionPool) -> tuple[float, float]:
    if not pool.log_scores:
        return 0.0, 0.0
    return boom_ratio(player.game_log, pool.log_scores), bust_ratio(player.game_log, pool.log_scores)


def extract_features(player: PlayerRecord, pool: PositionPool) -> dict[str, float]:
    """Every registry feature for one player, all scaled into [0,1]."""
    boom, bust = _boom_bust(player, pool)
    return {
        "sentiment_score": (player.sentiment + 1.0) / 2.0,
        "season_projection_pct": minmax_score(player.season_projection, pool.season_projections),
        "next_game_projection_pct": minmax_score(player.next_game_projection, pool.next_game_projections),
        "preseason_projection_pct": minmax_score(player.preseason_projection, pool.preseason_projections),
        "season_actual_pct": minmax_score(player.season_actual, pool.season_actuals),
        "prev_avg_points_pct": minmax_score(player.avg_points_prev, pool.prev_averages),
        "boom_ratio": boom,
        "bust_ratio": bust,
        "projection_valuation": _pool_pv(player, pool),
        "percent_owned": player.percent_owned,
        "percent_started": player.percent_started,
        "draft_position_score": 1.0 - minmax_score(player.adp, pool.adps),
        "opponent_rank_score": 1.0 - minmax_score(float(player.opponent_rank), [float(r) for r in pool.opponent_ranks]),
        "games_left_frac": minmax_score(float(player.games_left), [float(g) for g in pool.games_left]),
        "healthy_flag": 1.0 if player.status in (PlayerStatus.ACTIVE, PlayerStatus.PROBABLE) else 0.0,
    }


# ----------------------------------------------------------------------
# Expert tiers
# ----------------------------------------------------------------------

def _rank_by(
    group: Sequence[PlayerRecord],
    metric: Mapping[str, float],
    ascending: bool = False,
) -> dict[str, int]:
    """Ordinal ranks (1 = best) with player_id tie-breaking."""
    sign = 1.0 if ascending else -1.0
    ordered = sorted(group, key=lambda p: (sign * metric[p.player_id], p.player_id))
    return {p.player_id: i for i, p in enumerate(ordered, start=1)}


def _current_week_boom(player: PlayerRecord, pool: PositionPool) -> float:
    if not player.game_log or not pool.log_scores:
        return 0.0
    return 1.0 if percentile_rank(player.game_log[-1], pool.log_scores) >= 85.0 else 0.0


def compute_tier_scores(
    players: Sequence[PlayerRecord],
    pools: Mapping[Position, PositionPool],
) -> dict[str, TierScores]:
    """Tier scores per player: composite metrics ranked within position,
    ranks converted to (P - r + 1) / P so 1.0 is the positional best."""
    scores: dict[str, TierScores] = {}
    by_position: dict[Position, list[PlayerRecord]] = {}
    for p in players:
        by_position.setdefault(p.position, []).append(p)

    for position, group in by_position.items():
        pool = pools[position]
        n = len(group)

        season = {p.player_id: p.season_projection for p in group}

        short_term: dict[str, float] = {}
        for p in group:
            boom, bust = _boom_bust(p, pool)
            next_pct = minmax_score(p.next_game_projection, pool.next_game_projections)
            short_term[p.player_id] = (boom + (1.0 - bust) + next_pct) / 3.0

        expert_now: dict[str, float] = {}
        for p in group:
            expert_now[p.player_id] = (
                _current_week_boom(p, pool)
                + p.percent_started
                + minmax_score(p.preseason_projection, pool.preseason_projections)
                + _pool_pv(p, pool)
            ) / 4.0

        # Undrafted players (adp <= 0) rank behind every drafted one.
        worst_adp = max((p.adp for p in group if p.adp > 0), default=0.0)
        brand = {
            p.player_id: p.adp if p.adp > 0 else worst_adp + 1.0 for p in group
        }

        r1 = _rank_by(group, season)
        r2 = _rank_by(group, short_term)
        r3 = _rank_by(group, expert_now)
        r4 = _rank_by(group, brand, ascending=True)
        for p in group:
            scores[p.player_id] = TierScores(
                tier1=rank_to_score(r1[p.player_id], n),
                tier2=rank_to_score(r2[p.player_id], n),
                tier3=rank_to_score(r3[p.player_id], n),
                tier4=rank_to_score(r4[p.player_id], n),
            )
    return scores


def positional_ranks(players: Sequence[PlayerRecord]) -> dict[str, int]:
    """Season-projection rank within position across the player table."""
    ranks: dict[str, int] = {}
    by_position: dict[Position, list[PlayerRecord]] = {}
    for p in players:
        by_position.setdefault(p.position, []).append(p)
    for group in by_position.values():
        metric = {p.player_id: p.season_projection for p in group}
        ranks.update(_rank_by(group, metric))
    return ranks
