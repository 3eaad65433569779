"""Trade package generation.

Valuations and costs are rescaled to a shared 1-100 integer scale, then
each side of a candidate pairing is solved as a cardinality-capped 0-1
knapsack: maximize the value of players taken from the other roster,
subject to the release-cost budget the opponent would accept (their
priciest player's cost scaled by the user's risk setting).  Running the
solver twice with roles swapped yields the two sides of a package.

Generation is deterministic: fixed mode order, pairing rank order, and
descending risk sweep, with first-seen dedup by player fingerprint.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Mapping, Sequence

from .cost import player_cost, roster_position_ranks
from .league import League, PlayerRecord, Position, Team
from .pairing import rank_pairings, team_vector
from .valuation import roster_adjustments


@dataclass(frozen=True)
class KnapsackItem:
    player_id: str
    value: int  # integer-scaled valuation, >= 1
    weight: int  # integer-scaled release cost, >= 1

    def __post_init__(self) -> None:
        if self.value < 1 or self.weight < 1:
            raise ValueError("item value and weight must be >= 1")


def integer_scale(v: float) -> int:
    """Scale a (0,1] fraction to the 1-100 integer grid, rounding up.

    Nonpositive inputs clamp to 1: a rostered player never has zero
    value or zero release cost.
    """
    if v <= 0:
        return 1
    return max(1, math.ceil(v * 100))


def knapsack_01(
    items: Sequence[KnapsackItem],
    capacity: int,
    max_items: int,
) -> list[KnapsackItem]:
    """Exact 0-1 knapsack with a cardinality cap.

    Returns the subset maximizing total value with total weight <= capacity
    and at most max_items members.  Ties prefer fewer items, then the
    lexicographically smallest id set.  Exact dynamic program over
    (weight x count); item ids must be unique.
    """
    if max_items < 1:
        raise ValueError("max_items must be >= 1")
    capacity = max(0, capacity)
    ordered = sorted(items, key=lambda it: it.player_id)
    ids = [it.player_id for it in ordered]
    if len(ids) != len(set(ids)):
        raise ValueError("duplicate player ids in item pool")

    cap = min(capacity, sum(it.weight for it in ordered))
    # dp[w][k]: best (value, id tuple) using exact weight w and k items.
    # Items enter in ascending id order, so stored tuples stay sorted and
    # lexicographic comparisons are meaningful.
    dp: list[list[tuple[int, tuple[str, ...]] | None]] = [
        [None] * (max_items + 1) for _ in range(cap + 1)
    ]
    dp[0][0] = (0, ())
    for it in ordered:
        if it.weight > cap:
            continue
        for w in range(cap, it.weight - 1, -1):
            for k in range(max_items, 0, -1):
                prev = dp[w - it.weight][k - 1]
                if prev is None:
                    continue
                candidate = (prev[0] + it.value, prev[1] + (it.player_id,))
                current = dp[w][k]
                if (
                    current is None
                    or candidate[0] > current[0]
                    or (candidate[0] == current[0] and candidate[1] < current[1])
                ):
                    dp[w][k] = candidate

    best_value, best_count, best_ids = 0, 0, ()
    for w in range(cap + 1):
        for k in range(max_items + 1):
            cell = dp[w][k]
            if cell is None:
                continue
            if (-cell[0], k, cell[1]) < (-best_value, best_count, best_ids):
                best_value, best_count, best_ids = cell[0], k, cell[1]
    chosen = set(best_ids)
    return [it for it in ordered if it.player_id in chosen]


# ----------------------------------------------------------------------
# Personalization
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class PersonalizationRequest:
    watchlist: frozenset[str] = frozenset()
    prefer_release: frozenset[str] = frozenset()
    untradables: frozenset[str] = frozenset()
    target_positions: frozenset[Position] = frozenset()
    must_acquire: frozenset[str] = frozenset()
    must_release: frozenset[str] = frozenset()
    risk: float = 1.0

    def __post_init__(self) -> None:
        if not (0.0 < self.risk <= 1.0):
            raise ValueError("risk must be in (0, 1]")
        overlap = self.must_acquire & self.untradables
        if overlap:
            raise ValueError(f"must-acquire players marked untradable: {sorted(overlap)}")

    @property
    def is_personalized(self) -> bool:
        return bool(
            self.watchlist
            or self.prefer_release
            or self.untradables
            or self.target_positions
            or self.must_acquire
            or self.must_release
        )


EMPTY_REQUEST = PersonalizationRequest()


@dataclass(frozen=True)
class PersonalizationWeights:
    """Experimentally tuned multipliers; untradables are excluded outright,
    which is the deterministic limit of an arbitrarily large cost bump."""

    watchlist_boost: float = 1.25  # w1
    release_discount: float = 0.8  # w2
    position_boost: float = 1.2  # w4


def apply_personalization(
    acquire_items: Sequence[KnapsackItem],
    release_items: Sequence[KnapsackItem],
    positions: Mapping[str, Position],
    request: PersonalizationRequest,
    weights: PersonalizationWeights,
) -> tuple[list[KnapsackItem], list[KnapsackItem]]:
    """Adjust the two item pools for one requester's preferences.

    Acquisition candidates get value boosts (watchlist, target positions);
    the requester's own players get release-cost discounts; untradables
    vanish from both pools.
    """
    acquire: list[KnapsackItem] = []
    for it in acquire_items:
        if it.player_id in request.untradables:
            continue
        value = float(it.value)
        if it.player_id in request.watchlist:
            value *= weights.watchlist_boost
        if positions.get(it.player_id) in request.target_positions:
            value *= weights.position_boost
        acquire.append(replace(it, value=max(1, int(round(value)))))

    release: list[KnapsackItem] = []
    for it in release_items:
        if it.player_id in request.untradables:
            continue
        weight = float(it.weight)
        if it.player_id in request.prefer_release:
            weight *= weights.release_discount
        release.append(replace(it, weight=max(1, int(round(weight)))))
    return acquire, release


# ----------------------------------------------------------------------
# Mode context and packages
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class TradeInsights:
    parity: float
    impact_a: float
    impact_b: float
    pain_a: float
    pain_b: float
    upside: float

    def as_dict(self) -> dict[str, float]:
        return {
            "parity": self.parity,
            "impact_a": self.impact_a,
            "impact_b": self.impact_b,
            "pain_a": self.pain_a,
            "pain_b": self.pain_b,
            "upside": self.upside,
        }


@dataclass(frozen=True)
class TradePackage:
    team_a: str
    team_b: str
    a_receives: tuple[str, ...]
    b_receives: tuple[str, ...]
    compute_mode: str
    pairing_angle: float
    insights: TradeInsights | None = None

    @property
    def fingerprint(self) -> str:
        return "+".join(sorted(self.a_receives + self.b_receives))


@dataclass(frozen=True)
class ModeContext:
    """One compute mode's per-player numbers for a specific league.

    Broad valuations come from the mode's sheet; release costs are
    recomputed against the submitted league's rosters, since cost is
    roster-contextual while valuation is market-wide.
    """

    mode: str
    league: League
    valuations: Mapping[str, float]
    sme_high: float
    cost_fracs: Mapping[str, float]
    value_ints: Mapping[str, int]
    cost_ints: Mapping[str, int]
    max_roster_value: Mapping[str, float]

    def value_fraction(self, valuation: float) -> float:
        if self.sme_high <= 0:
            return 0.0
        return valuation / self.sme_high


def mode_context(league: League, mode: str, valuations: Mapping[str, float], sme_high: float) -> ModeContext:
    cost_fracs: dict[str, float] = {}
    value_ints: dict[str, int] = {}
    cost_ints: dict[str, int] = {}
    max_roster: dict[str, float] = {}
    for team in league.teams:
        roster = league.roster_players(team)
        ranks = roster_position_ranks(roster, valuations)
        team_vals = [valuations[p.player_id] for p in roster if p.player_id in valuations]
        max_roster[team.team_id] = max(team_vals, default=0.0)
        for p in roster:
            if p.player_id not in valuations:
                continue
            breakdown = player_cost(p, roster, league.rules, ranks)
            cost_fracs[p.player_id] = breakdown.norm_pcost
            frac = valuations[p.player_id] / sme_high if sme_high > 0 else 0.0
            value_ints[p.player_id] = integer_scale(frac)
            cost_ints[p.player_id] = integer_scale(breakdown.norm_pcost)
    return ModeContext(
        mode=mode,
        league=league,
        valuations=valuations,
        sme_high=sme_high,
        cost_fracs=cost_fracs,
        value_ints=value_ints,
        cost_ints=cost_ints,
        max_roster_value=max_roster,
    )


@dataclass(frozen=True)
class EngineConfig:
    top_pairings: int = 3
    max_results: int = 10
    max_items: int = 3
    risk_multipliers: tuple[float, ...] = (1.0, 0.75, 0.5)
    mode_order: tuple[str, ...] = ("sme", "classical", "quantum")
    personalization: PersonalizationWeights = field(default_factory=PersonalizationWeights)


def _acquisition_pool(
    ctx: ModeContext,
    giving_roster: Sequence[PlayerRecord],
    acquiring_roster: Sequence[PlayerRecord],
    skip: frozenset[str],
) -> list[KnapsackItem]:
    """Items for players the acquiring roster could take from the giving one."""
    pool: list[KnapsackItem] = []
    for p in giving_roster:
        if p.player_id in skip or p.player_id not in ctx.valuations:
            continue
        adjusted = roster_adjustments(ctx.valuations[p.player_id], p, acquiring_roster, ctx.league.rules)
        pool.append(
            KnapsackItem(
                player_id=p.player_id,
                value=integer_scale(ctx.value_fraction(adjusted)),
                weight=ctx.cost_ints[p.player_id],
            )
        )
    return pool


def build_trade(
    requester: Team,
    opponent: Team,
    ctx: ModeContext,
    request: PersonalizationRequest,
    config: EngineConfig,
    pairing_angle: float,
    risk: float | None = None,
) -> TradePackage | None:
    """Two knapsack runs with roles swapped, bundled into one package.

    Returns None when a side comes up empty without being forced there:
    an unbalanced package only survives if the user demanded it.
    """
    league = ctx.league
    alpha = request.risk if risk is None else risk
    requester_roster = league.roster_players(requester)
    opponent_roster = league.roster_players(opponent)
    requester_ids = frozenset(requester.roster)
    opponent_ids = frozenset(opponent.roster)

    missing = request.must_release - requester_ids
    if missing:
        raise ValueError(f"must-release players not on {requester.team_id}: {sorted(missing)}")

    forced_acquire = sorted(request.must_acquire & opponent_ids)
    forced_release = sorted(request.must_release)
    skip_a = request.untradables | frozenset(forced_acquire)
    skip_b = request.untradables | frozenset(forced_release)

    pool_a = _acquisition_pool(ctx, opponent_roster, requester_roster, skip_a)
    pool_b = _acquisition_pool(ctx, requester_roster, opponent_roster, skip_b)
    positions = {p.player_id: p.position for p in list(opponent_roster) + list(requester_roster)}
    pool_a, pool_b = apply_personalization(pool_a, pool_b, positions, request, config.personalization)

    forced_a_items = [
        KnapsackItem(pid, value=1, weight=ctx.cost_ints[pid])
        for pid in forced_acquire
        if pid in ctx.cost_ints
    ]
    forced_b_items = [
        KnapsackItem(pid, value=1, weight=ctx.cost_ints[pid])
        for pid in forced_release
        if pid in ctx.cost_ints
    ]

    def solve(pool: list[KnapsackItem], forced: list[KnapsackItem]) -> list[str]:
        weights = [it.weight for it in pool] + [it.weight for it in forced]
        if not weights:
            return []
        budget = math.floor(alpha * max(weights))
        budget -= sum(it.weight for it in forced)
        slots = config.max_items - len(forced)
        picked: list[KnapsackItem] = []
        if pool and budget > 0 and slots > 0:
            picked = knapsack_01(pool, budget, slots)
        return sorted([it.player_id for it in forced] + [it.player_id for it in picked])

    a_receives = solve(pool_a, forced_a_items)
    b_receives = solve(pool_b, forced_b_items)

    if not a_receives and not b_receives:
        return None
    if not a_receives and not forced_release:
        return None
    if not b_receives and not forced_acquire:
        return None

    return TradePackage(
        team_a=requester.team_id,
        team_b=opponent.team_id,
        a_receives=tuple(a_receives),
        b_receives=tuple(b_receives),
        compute_mode=ctx.mode,
        pairing_angle=pairing_angle,
    )


def generate_trades(
    league: League,
    requesting_team_id: str,
    request: PersonalizationRequest,
    contexts: Sequence[ModeContext],
    config: EngineConfig | None = None,
    filter_config=None,
    upside_weights=None,
) -> tuple[list[TradePackage], list]:
    """End-to-end generation for one request.

    Sweeps (compute mode x top pairings x risk levels), dedupes by player
    fingerprint, scores insights, filters, and returns the survivors
    ordered by upside (descending) plus the rejection log.
    """
    from .insights import FilterConfig, UpsideWeights, attach_insights, filter_trades

    config = config or EngineConfig()
    filter_config = filter_config or FilterConfig()
    upside_weights = upside_weights or UpsideWeights()
    requester = league.team(requesting_team_id)

    by_mode = {ctx.mode: ctx for ctx in contexts}
    ordered_modes = [m for m in config.mode_order if m in by_mode]
    ordered_modes += [m for m in sorted(by_mode) if m not in ordered_modes]

    seen: set[str] = set()
    candidates: list[tuple[TradePackage, ModeContext]] = []
    for mode in ordered_modes:
        ctx = by_mode[mode]
        vectors = {t.team_id: team_vector(t, league, ctx.valuations) for t in league.teams}
        pairings = rank_pairings(requester, league.teams, vectors)
        if request.must_acquire:
            owners = {
                t.team_id for t in league.teams if request.must_acquire & set(t.roster)
            }
            pairings = [p for p in pairings if p[0] in owners]
        for opponent_id, angle in pairings[: config.top_pairings]:
            opponent = league.team(opponent_id)
            for mult in config.risk_multipliers:
                alpha = max(min(request.risk * mult, 1.0), 1e-9)
                package = build_trade(requester, opponent, ctx, request, config, angle, risk=alpha)
                if package is None or package.fingerprint in seen:
                    continue
                seen.add(package.fingerprint)
                candidates.append((package, ctx))

    scored = [attach_insights(pkg, ctx, upside_weights) for pkg, ctx in candidates]
    survivors, rejections = filter_trades(scored, league, request, filter_config, by_mode)
    survivors.sort(key=lambda t: (-t.insights.upside, t.fingerprint))
    return survivors[: config.max_results], rejections
