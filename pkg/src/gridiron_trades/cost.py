"""Tradability cost of each rostered player, from roster context.

A player's release cost is the mean of four [0,1] ratios: positional
importance (starter slots vs. eligible bodies), share of the roster's
total projection, share of the positional projection, and positional
rank.  Rank enters inverted so the better player carries the higher
cost: cost measures value surrendered.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .league import LeagueRules, PlayerRecord, Position


@dataclass(frozen=True)
class CostBreakdown:
    position_importance_term: float
    all_roster_projection_term: float
    position_projection_term: float
    rank_term: float
    pre_pc: float
    norm_pcost: float

    def as_dict(self) -> dict[str, float]:
        return {
            "position_importance_term": self.position_importance_term,
            "all_roster_projection_term": self.all_roster_projection_term,
            "position_projection_term": self.position_projection_term,
            "rank_term": self.rank_term,
            "pre_pc": self.pre_pc,
            "norm_pcost": self.norm_pcost,
        }


def position_importance(
    rules: LeagueRules,
    position: Position,
    roster: Sequence[PlayerRecord],
) -> float:
    """Starter slots a player of this position can fill, over the roster
    players eligible for those slots.

    A position with no slots is worthless here (0); slots with nobody to
    fill them are maximally scarce (1).
    """
    fillable_slots = [s for s in rules.slot_rules if position in s.eligible_positions]
    slot_count = sum(s.count for s in fillable_slots)
    if slot_count == 0:
        return 0.0
    eligible_positions: set[Position] = set()
    for s in fillable_slots:
        eligible_positions.update(s.eligible_positions)
    eligible = sum(1 for p in roster if p.position in eligible_positions)
    if eligible == 0:
        return 1.0
    return slot_count / eligible


def _max_position_importance(rules: LeagueRules, roster: Sequence[PlayerRecord]) -> float:
    # Max is taken over every position the league's slot rules name, so an
    # unfilled slot position (importance 1) anchors the scale at 1.
    values = [position_importance(rules, pos, roster) for pos in sorted(rules.slot_positions())]
    return max(values, default=0.0)


def player_cost(
    player: PlayerRecord,
    roster: Sequence[PlayerRecord],
    rules: LeagueRules,
    position_ranks: Mapping[str, int],
) -> CostBreakdown:
    """Release cost of one rostered player.

    position_ranks maps player_id -> ordinal rank (1 = best) among the
    roster's players at the same position.
    """
    same_position = [p for p in roster if p.position == player.position]
    total_proj = sum(p.season_projection for p in roster)
    position_proj = sum(p.season_projection for p in same_position)
    if total_proj <= 0 or position_proj <= 0:
        raise ValueError("roster and positional projection sums must be > 0")

    importance = position_importance(rules, player.position, roster)
    max_importance = _max_position_importance(rules, roster)
    importance_term = importance / max_importance if max_importance > 0 else 0.0

    all_term = player.season_projection / total_proj
    pos_term = player.season_projection / position_proj

    max_rank = max(position_ranks[p.player_id] for p in same_position)
    inv_rank = max_rank - position_ranks[player.player_id] + 1
    rank_term = inv_rank / max_rank

    pre_pc = (importance_term + all_term + pos_term + rank_term) / 4.0
    return CostBreakdown(
        position_importance_term=importance_term,
        all_roster_projection_term=all_term,
        position_projection_term=pos_term,
        rank_term=rank_term,
        pre_pc=pre_pc,
        norm_pcost=min(1.0, max(0.0, pre_pc)),
    )


def roster_position_ranks(
    roster: Sequence[PlayerRecord],
    score_of: Mapping[str, float],
) -> dict[str, int]:
    """Rank roster players within their position by a score map (1 = best).

    Players missing from the score map sort last; ties break by player_id
    so ranks are deterministic.
    """
    ranks: dict[str, int] = {}
    by_position: dict[Position, list[PlayerRecord]] = {}
    for p in roster:
        by_position.setdefault(p.position, []).append(p)
    for group in by_position.values():
        ordered = sorted(
            group,
            key=lambda p: (-score_of.get(p.player_id, float("-inf")), p.player_id),
        )
        for i, p in enumerate(ordered, start=1):
            ranks[p.player_id] = i
    return ranks
