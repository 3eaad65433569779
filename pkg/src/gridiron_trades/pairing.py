"""Team-to-team pairing by cosine dissimilarity of positional vectors.

Each team becomes one nonnegative vector: per position, an importance
block (one-hot position code, starter slot count, eligible body count)
concatenated with a strength block (average valuation, average inverted
rank, average/min/max projection, average ownership).  Complementary
teams sit at a wide angle, so candidate partners are ranked from 90
degrees downward.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping, Sequence

from .league import League, PlayerRecord, Position, POSITION_ORDER, Team


@dataclass(frozen=True)
class TeamVector:
    team_id: str
    entries: tuple[float, ...]

    def __post_init__(self) -> None:
        if any(x < 0 for x in self.entries):
            raise ValueError("team vector entries must be nonnegative")


def _league_position_ranks(league: League, valuations: Mapping[str, float]) -> dict[str, float]:
    """League-wide inverted normalized rank per player, within position.

    Competition ranking: equals share a rank, so identically valued
    players (and hence identically built teams) score identically.
    Players missing a valuation rank below every valued one.
    """
    by_position: dict[Position, list[PlayerRecord]] = {}
    for p in league.rostered_players():
        by_position.setdefault(p.position, []).append(p)
    scores: dict[str, float] = {}
    for group in by_position.values():
        vals = {p.player_id: valuations.get(p.player_id, float("-inf")) for p in group}
        n = len(group)
        for p in group:
            rank = 1 + sum(1 for q in group if vals[q.player_id] > vals[p.player_id])
            scores[p.player_id] = (n - rank + 1) / n
    return scores


def team_vector(
    team: Team,
    league: League,
    valuations: Mapping[str, float],
) -> TeamVector:
    """Deterministic positional importance + strength vector for one team.

    Positions with no rostered player contribute an all-zero strength
    block; valuations are clamped at zero to keep the vector nonnegative.
    """
    rules = league.rules
    roster = league.roster_players(team)
    rank_scores = _league_position_ranks(league, valuations)

    entries: list[float] = []
    for idx, position in enumerate(POSITION_ORDER):
        group = [p for p in roster if p.position == position]
        onehot = [1.0 if i == idx else 0.0 for i in range(len(POSITION_ORDER))]
        slots = float(rules.slots_for(position))
        eligible = float(len(group))
        entries.extend(onehot)
        entries.extend([slots, eligible])
        if group:
            vals = [max(0.0, valuations.get(p.player_id, 0.0)) for p in group]
            ranks = [rank_scores[p.player_id] for p in group]
            projections = [p.season_projection for p in group]
            owned = [p.percent_owned for p in group]
            entries.extend(
                [
                    sum(vals) / len(vals),
                    sum(ranks) / len(ranks),
                    sum(projections) / len(projections),
                    min(projections),
                    max(projections),
                    sum(owned) / len(owned),
                ]
            )
        else:
            entries.extend([0.0] * 6)
    return TeamVector(team_id=team.team_id, entries=tuple(entries))


def dissimilarity_angle(a: TeamVector | Sequence[float], b: TeamVector | Sequence[float]) -> float:
    """Angle between two nonnegative vectors, in degrees within [0, 90].

    Computed as 2*atan2(|â - b̂|, |â + b̂|) over the unit vectors, which
    is exact for identical inputs where acos of a rounded dot product
    is not.
    """
    va = a.entries if isinstance(a, TeamVector) else tuple(a)
    vb = b.entries if isinstance(b, TeamVector) else tuple(b)
    if len(va) != len(vb):
        raise ValueError("vectors must have equal dimension")
    norm_a = math.sqrt(sum(x * x for x in va))
    norm_b = math.sqrt(sum(x * x for x in vb))
    if norm_a == 0 or norm_b == 0:
        raise ValueError("cannot measure the angle of a zero vector")
    ua = [x / norm_a for x in va]
    ub = [x / norm_b for x in vb]
    diff = math.sqrt(sum((x - y) ** 2 for x, y in zip(ua, ub)))
    total = math.sqrt(sum((x + y) ** 2 for x, y in zip(ua, ub)))
    return math.degrees(2.0 * math.atan2(diff, total))


def rank_pairings(
    requesting_team: Team,
    teams: Sequence[Team],
    vectors: Mapping[str, TeamVector],
) -> list[tuple[str, float]]:
    """Opponents ordered most-dissimilar first; ties break by team_id."""
    requester = vectors[requesting_team.team_id]
    angles = [
        (t.team_id, dissimilarity_angle(requester, vectors[t.team_id]))
        for t in teams
        if t.team_id != requesting_team.team_id
    ]
    angles.sort(key=lambda pair: (-pair[1], pair[0]))
    return angles
