"""Pydantic request/response models for the HTTP service.

The league body mirrors the league file schema exactly, so a league JSON
document can be posted as-is inside a trade request.
"""

from __future__ import annotations

from typing import Optional

from pydantic import BaseModel, Field, field_validator

from .engine import PersonalizationRequest, TradePackage
from .league import League, Position, league_from_dict


class SlotRuleBody(BaseModel):
    slot_id: str
    eligible_positions: list[str]
    count: int = Field(ge=1)


class LeagueRulesBody(BaseModel):
    slot_rules: list[SlotRuleBody]
    team_count: int = Field(ge=2)
    current_week: int = Field(default=0, ge=0)


class TeamBody(BaseModel):
    team_id: str
    roster: list[str]


class PlayerBody(BaseModel):
    player_id: str
    name: str = ""
    position: str
    season_projection: float = 0.0
    next_game_projection: float = 0.0
    preseason_projection: float = 0.0
    season_actual: float = 0.0
    avg_points_prev: float = 0.0
    game_log: list[float] = Field(default_factory=list)
    percent_owned: float = Field(default=0.0, ge=0.0, le=1.0)
    percent_started: float = Field(default=0.0, ge=0.0, le=1.0)
    adp: float = 0.0
    status: str = "active"
    sentiment: float = Field(default=0.0, ge=-1.0, le=1.0)
    opponent_rank: int = 0
    games_left: int = Field(default=0, ge=0)


class LeagueBody(BaseModel):
    rules: LeagueRulesBody
    teams: list[TeamBody]
    players: list[PlayerBody]

    def to_league(self) -> League:
        return league_from_dict(self.model_dump())


class PersonalizationBody(BaseModel):
    watchlist: list[str] = Field(default_factory=list)
    prefer_release: list[str] = Field(default_factory=list)
    untradables: list[str] = Field(default_factory=list)
    target_positions: list[str] = Field(default_factory=list)
    must_acquire: list[str] = Field(default_factory=list)
    must_release: list[str] = Field(default_factory=list)
    risk: float = 1.0

    @field_validator("risk")
    @classmethod
    def _risk_in_range(cls, v: float) -> float:
        if not (0.0 < v <= 1.0):
            raise ValueError("risk must be in (0, 1]")
        return v

    @field_validator("target_positions")
    @classmethod
    def _known_positions(cls, v: list[str]) -> list[str]:
        for p in v:
            Position(p)
        return v

    def to_request(self) -> PersonalizationRequest:
        return PersonalizationRequest(
            watchlist=frozenset(self.watchlist),
            prefer_release=frozenset(self.prefer_release),
            untradables=frozenset(self.untradables),
            target_positions=frozenset(Position(p) for p in self.target_positions),
            must_acquire=frozenset(self.must_acquire),
            must_release=frozenset(self.must_release),
            risk=self.risk,
        )


class TradesRequest(BaseModel):
    league: LeagueBody
    requesting_team: str
    personalization: Optional[PersonalizationBody] = None
    compute_modes: Optional[list[str]] = None
    max_results: Optional[int] = Field(default=None, ge=1)


class InsightsBody(BaseModel):
    parity: float
    impact_a: float
    impact_b: float
    pain_a: float
    pain_b: float
    upside: float


class TradeBody(BaseModel):
    fingerprint: str
    team_a: str
    team_b: str
    a_receives: list[str]
    b_receives: list[str]
    compute_mode: str
    pairing_angle: float
    insights: InsightsBody

    @classmethod
    def from_package(cls, pkg: TradePackage) -> "TradeBody":
        return cls(
            fingerprint=pkg.fingerprint,
            team_a=pkg.team_a,
            team_b=pkg.team_b,
            a_receives=list(pkg.a_receives),
            b_receives=list(pkg.b_receives),
            compute_mode=pkg.compute_mode,
            pairing_angle=pkg.pairing_angle,
            insights=InsightsBody(**pkg.insights.as_dict()),
        )


class RejectionBody(BaseModel):
    fingerprint: str
    rule_id: str
    line: str


class TradesResponse(BaseModel):
    requesting_team: str
    trades: list[TradeBody]
    rejections: list[RejectionBody]
    modes_used: list[str]


class RatingBody(BaseModel):
    fingerprint: str
    side: str
    rating: int = Field(ge=1, le=10)
    rater_id: str
    blinded_mode_label: str = ""

    @field_validator("side")
    @classmethod
    def _side_ab(cls, v: str) -> str:
        if v not in ("A", "B"):
            raise ValueError("side must be 'A' or 'B'")
        return v


class RatingAck(BaseModel):
    status: str
    fingerprint: str
