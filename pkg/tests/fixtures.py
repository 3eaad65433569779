"""Synthetic league and model-profile builders for the test suite."""

from __future__ import annotations

import numpy as np

from gridiron_trades.features import FEATURE_REGISTRY
from gridiron_trades.league import (
    League,
    LeagueRules,
    PlayerRecord,
    PlayerStatus,
    Position,
    SlotRule,
    Team,
)
from gridiron_trades.valuation import ModelImportanceProfile

STANDARD_SLOTS = (
    SlotRule("QB", frozenset({Position.QB}), 1),
    SlotRule("RB", frozenset({Position.RB}), 2),
    SlotRule("WR", frozenset({Position.WR}), 2),
    SlotRule("TE", frozenset({Position.TE}), 1),
    SlotRule("FLEX", frozenset({Position.RB, Position.WR, Position.TE}), 1),
    SlotRule("K", frozenset({Position.K}), 1),
    SlotRule("DST", frozenset({Position.DST}), 1),
)

ROSTER_SHAPE = (
    (Position.QB, 2),
    (Position.RB, 4),
    (Position.WR, 4),
    (Position.TE, 2),
    (Position.K, 1),
    (Position.DST, 1),
)

PROJECTION_MEANS = {
    Position.QB: 280.0,
    Position.RB: 180.0,
    Position.WR: 170.0,
    Position.TE: 120.0,
    Position.K: 130.0,
    Position.DST: 110.0,
}

STATUSES = (
    PlayerStatus.ACTIVE,
    PlayerStatus.ACTIVE,
    PlayerStatus.ACTIVE,
    PlayerStatus.ACTIVE,
    PlayerStatus.ACTIVE,
    PlayerStatus.ACTIVE,
    PlayerStatus.PROBABLE,
    PlayerStatus.QUESTIONABLE,
)


def _make_player(rng: np.random.Generator, pid: str, position: Position) -> PlayerRecord:
    mean = PROJECTION_MEANS[position]
    season = max(10.0, rng.normal(mean, mean * 0.25))
    weekly = season / 17.0
    games = int(rng.integers(4, 9))
    log = tuple(max(0.0, rng.normal(weekly, weekly * 0.45)) for _ in range(games))
    return PlayerRecord(
        player_id=pid,
        name=f"Player {pid}",
        position=position,
        season_projection=round(season, 2),
        next_game_projection=round(max(0.0, rng.normal(weekly, weekly * 0.3)), 2),
        preseason_projection=round(max(5.0, rng.normal(mean, mean * 0.3)), 2),
        season_actual=round(sum(log), 2),
        avg_points_prev=round(max(0.0, rng.normal(weekly, weekly * 0.5)), 2),
        game_log=tuple(round(x, 2) for x in log),
        percent_owned=float(np.clip(rng.beta(4, 2), 0.0, 1.0)),
        percent_started=float(np.clip(rng.beta(3, 3), 0.0, 1.0)),
        adp=float(rng.integers(1, 200)),
        status=STATUSES[int(rng.integers(0, len(STATUSES)))],
        sentiment=float(np.clip(rng.normal(0.15, 0.4), -1.0, 1.0)),
        opponent_rank=int(rng.integers(1, 33)),
        games_left=int(rng.integers(6, 15)),
    )


def make_league(seed: int = 7, n_teams: int = 10, extra_players: int = 0, current_week: int = 3) -> League:
    rng = np.random.default_rng(seed)
    players: dict[str, PlayerRecord] = {}
    teams = []
    counter = 0
    for t in range(1, n_teams + 1):
        roster = []
        for position, count in ROSTER_SHAPE:
            for _ in range(count):
                counter += 1
                pid = f"p{counter:03d}"
                players[pid] = _make_player(rng, pid, position)
                roster.append(pid)
        teams.append(Team(team_id=f"T{t}", roster=tuple(roster)))
    positions = [p for p, _ in ROSTER_SHAPE]
    for _ in range(extra_players):
        counter += 1
        pid = f"p{counter:03d}"
        position = positions[int(rng.integers(0, len(positions)))]
        players[pid] = _make_player(rng, pid, position)
    rules = LeagueRules(slot_rules=STANDARD_SLOTS, team_count=n_teams, current_week=current_week)
    return League(rules=rules, teams=tuple(teams), players=players)


def make_profile(
    seed: int,
    model_id: str,
    compute_mode: str,
    accuracy: float,
) -> ModelImportanceProfile:
    rng = np.random.default_rng(seed)
    raw = rng.uniform(0.05, 1.0, size=len(FEATURE_REGISTRY))
    weights = {name: float(w / raw.sum()) for name, w in zip(FEATURE_REGISTRY, raw)}
    order = tuple(sorted(weights, key=lambda f: (-weights[f], f)))
    return ModelImportanceProfile(
        model_id=model_id,
        compute_mode=compute_mode,
        accuracy=accuracy,
        importances=weights,
        rank_order=order,
    )


def standard_profiles() -> list[ModelImportanceProfile]:
    return [
        make_profile(11, "xgb", "classical", 0.957),
        make_profile(23, "hybrid-qnn-pi", "quantum", 0.943),
        make_profile(37, "qsvm-pi", "quantum", 0.855),
    ]


def league_to_dict(league: League) -> dict:
    return {
        "rules": {
            "slot_rules": [
                {
                    "slot_id": s.slot_id,
                    "eligible_positions": sorted(p.value for p in s.eligible_positions),
                    "count": s.count,
                }
                for s in league.rules.slot_rules
            ],
            "team_count": league.rules.team_count,
            "current_week": league.rules.current_week,
        },
        "teams": [{"team_id": t.team_id, "roster": list(t.roster)} for t in league.teams],
        "players": [
            {
                "player_id": p.player_id,
                "name": p.name,
                "position": p.position.value,
                "season_projection": p.season_projection,
                "next_game_projection": p.next_game_projection,
                "preseason_projection": p.preseason_projection,
                "season_actual": p.season_actual,
                "avg_points_prev": p.avg_points_prev,
                "game_log": list(p.game_log),
                "percent_owned": p.percent_owned,
                "percent_started": p.percent_started,
                "adp": p.adp,
                "status": p.status.value,
                "sentiment": p.sentiment,
                "opponent_rank": p.opponent_rank,
                "games_left": p.games_left,
            }
            for p in sorted(league.players.values(), key=lambda p: p.player_id)
        ],
    }
