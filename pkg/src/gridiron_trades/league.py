"""League, roster, and player data model with slot-feasibility checking.

All types are immutable values after construction and safe to share across
concurrent trade computations.  The canonical league input is one JSON
document ``{rules, teams, players}`` with snake_case field names matching
the dataclass fields below.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Mapping, Sequence


class Position(str, Enum):
    QB = "QB"
    RB = "RB"
    WR = "WR"
    TE = "TE"
    K = "K"
    DST = "DST"


# Fixed position order used everywhere a deterministic layout is needed
# (team vectors, sheet serialization, reports).
POSITION_ORDER = (Position.QB, Position.RB, Position.WR, Position.TE, Position.K, Position.DST)


class PlayerStatus(str, Enum):
    ACTIVE = "active"
    PROBABLE = "probable"
    QUESTIONABLE = "questionable"
    DOUBTFUL = "doubtful"
    OUT = "out"
    INJURED_RESERVE = "injured_reserve"
    COVID_LIST = "covid_list"
    SUSPENDED = "suspended"


@dataclass(frozen=True)
class SlotRule:
    """One kind of starter slot.  Flex slots list more than one position."""

    slot_id: str
    eligible_positions: frozenset[Position]
    count: int

    def __post_init__(self) -> None:
        if not self.eligible_positions:
            raise ValueError(f"slot {self.slot_id!r} has no eligible positions")
        if self.count < 1:
            raise ValueError(f"slot {self.slot_id!r} must have count >= 1")


@dataclass(frozen=True)
class LeagueRules:
    slot_rules: tuple[SlotRule, ...]
    team_count: int
    current_week: int = 0

    def __post_init__(self) -> None:
        if self.team_count < 2:
            raise ValueError("a league needs at least 2 teams")
        if self.current_week < 0:
            raise ValueError("current_week must be >= 0")
        ids = [s.slot_id for s in self.slot_rules]
        if len(ids) != len(set(ids)):
            raise ValueError("slot_ids must be unique")

    def slots_for(self, position: Position) -> int:
        """Total starter slots a player of this position can fill (flex included)."""
        return sum(s.count for s in self.slot_rules if position in s.eligible_positions)

    def slot_positions(self) -> frozenset[Position]:
        """All positions that appear in at least one slot rule."""
        out: set[Position] = set()
        for s in self.slot_rules:
            out.update(s.eligible_positions)
        return frozenset(out)


@dataclass(frozen=True)
class PlayerRecord:
    player_id: str
    name: str
    position: Position
    season_projection: float
    next_game_projection: float = 0.0
    preseason_projection: float = 0.0
    season_actual: float = 0.0
    avg_points_prev: float = 0.0
    game_log: tuple[float, ...] = ()
    percent_owned: float = 0.0
    percent_started: float = 0.0
    adp: float = 0.0
    status: PlayerStatus = PlayerStatus.ACTIVE
    sentiment: float = 0.0
    opponent_rank: int = 0
    games_left: int = 0


@dataclass(frozen=True)
class Team:
    team_id: str
    roster: tuple[str, ...]

    def __post_init__(self) -> None:
        if len(self.roster) != len(set(self.roster)):
            raise ValueError(f"team {self.team_id!r} rosters a player twice")


@dataclass(frozen=True)
class ValidationFinding:
    code: str
    message: str


def validate_league(
    rules: LeagueRules,
    teams: Sequence[Team],
    players: Mapping[str, PlayerRecord],
) -> list[ValidationFinding]:
    """Structural checks over a league document.

    Findings are collected and returned, never raised, so a batch pipeline
    can report every problem in one pass.
    """
    findings: list[ValidationFinding] = []
    seen: dict[str, str] = {}
    for team in teams:
        if not team.roster:
            findings.append(ValidationFinding("empty-roster", f"team {team.team_id} has an empty roster"))
        for pid in team.roster:
            if pid in seen and seen[pid] != team.team_id:
                findings.append(
                    ValidationFinding(
                        "duplicate-player",
                        f"player {pid} appears on both {seen[pid]} and {team.team_id}",
                    )
                )
            seen.setdefault(pid, team.team_id)
            if pid not in players:
                findings.append(
                    ValidationFinding(
                        "unresolved-reference",
                        f"team {team.team_id} references unknown player {pid}",
                    )
                )
    return findings


def _expand_slots(rules: LeagueRules) -> list[frozenset[Position]]:
    slots: list[frozenset[Position]] = []
    for rule in rules.slot_rules:
        slots.extend([rule.eligible_positions] * rule.count)
    return slots


def starters_fillable(rules: LeagueRules, roster: Iterable[PlayerRecord]) -> bool:
    """True iff every starter slot can be covered by a distinct roster player.

    Exact maximum bipartite matching (augmenting paths) between players and
    expanded slots; greedy assignment gets flex/position interactions wrong.
    """
    slots = _expand_slots(rules)
    if not slots:
        return True
    players = list(roster)
    eligible = [[i for i, slot in enumerate(slots) if p.position in slot] for p in players]

    slot_owner: list[int | None] = [None] * len(slots)

    def try_assign(p: int, visited: list[bool]) -> bool:
        for s in eligible[p]:
            if visited[s]:
                continue
            visited[s] = True
            if slot_owner[s] is None or try_assign(slot_owner[s], visited):
                slot_owner[s] = p
                return True
        return False

    matched = 0
    for p in range(len(players)):
        if try_assign(p, [False] * len(slots)):
            matched += 1
    return matched == len(slots)


# ----------------------------------------------------------------------
# League file loading
# ----------------------------------------------------------------------

def slot_rule_from_dict(doc: Mapping) -> SlotRule:
    return SlotRule(
        slot_id=doc["slot_id"],
        eligible_positions=frozenset(Position(p) for p in doc["eligible_positions"]),
        count=int(doc["count"]),
    )


def player_from_dict(doc: Mapping) -> PlayerRecord:
    return PlayerRecord(
        player_id=doc["player_id"],
        name=doc.get("name", doc["player_id"]),
        position=Position(doc["position"]),
        season_projection=float(doc.get("season_projection", 0.0)),
        next_game_projection=float(doc.get("next_game_projection", 0.0)),
        preseason_projection=float(doc.get("preseason_projection", 0.0)),
        season_actual=float(doc.get("season_actual", 0.0)),
        avg_points_prev=float(doc.get("avg_points_prev", 0.0)),
        game_log=tuple(float(x) for x in doc.get("game_log", ())),
        percent_owned=float(doc.get("percent_owned", 0.0)),
        percent_started=float(doc.get("percent_started", 0.0)),
        adp=float(doc.get("adp", 0.0)),
        status=PlayerStatus(doc.get("status", "active")),
        sentiment=float(doc.get("sentiment", 0.0)),
        opponent_rank=int(doc.get("opponent_rank", 0)),
        games_left=int(doc.get("games_left", 0)),
    )


@dataclass(frozen=True)
class League:
    """A parsed league document: rules + teams + player table."""

    rules: LeagueRules
    teams: tuple[Team, ...]
    players: Mapping[str, PlayerRecord] = field(hash=False)

    def team(self, team_id: str) -> Team:
        for t in self.teams:
            if t.team_id == team_id:
                return t
        raise KeyError(f"unknown team {team_id!r}")

    def roster_players(self, team: Team) -> list[PlayerRecord]:
        return [self.players[pid] for pid in team.roster if pid in self.players]

    def rostered_players(self) -> list[PlayerRecord]:
        out: list[PlayerRecord] = []
        for t in self.teams:
            out.extend(self.roster_players(t))
        return out


def league_from_dict(doc: Mapping) -> League:
    rules_doc = doc["rules"]
    rules = LeagueRules(
        slot_rules=tuple(slot_rule_from_dict(s) for s in rules_doc["slot_rules"]),
        team_count=int(rules_doc["team_count"]),
        current_week=int(rules_doc.get("current_week", 0)),
    )
    teams = tuple(Team(team_id=t["team_id"], roster=tuple(t["roster"])) for t in doc["teams"])
    players = {p["player_id"]: player_from_dict(p) for p in doc["players"]}
    return League(rules=rules, teams=teams, players=players)


def load_league(path: str) -> League:
    with open(path, "r", encoding="utf-8") as fh:
        return league_from_dict(json.load(fh))
