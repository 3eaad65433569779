"""Trade scoring (parity, impact, pain, upside) and rule-based filtering.

Parity measures fairness symmetrically; impact and pain are egocentric
(one team's incoming value over outgoing cost, and outgoing cost over
outgoing value).  Upside is a pluggable probability-like score from a
logistic over the insight metrics; the shipped default stands in for a
learned acceptance model.  A postprocessor applies the named rules and
thresholds, recording the first failing rule for every removed trade.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Mapping, Sequence

from .engine import ModeContext, TradeInsights, TradePackage, PersonalizationRequest
from .league import League, Position, starters_fillable


def parity(
    a_incoming_values: Sequence[float],
    b_incoming_values: Sequence[float],
    max_value_a: float,
    max_value_b: float,
    a_outgoing_costs: Sequence[float],
    b_outgoing_costs: Sequence[float],
) -> float:
    """Half the normalized-value gap plus half the release-cost gap.

    Value sums are scaled by each receiving team's best roster valuation;
    costs are the [0,1] release-cost fractions of each side's own
    outgoing players.
    """
    if max_value_a <= 0 or max_value_b <= 0:
        raise ValueError("max roster values must be > 0")
    value_gap = abs(
        sum(a_incoming_values) / max_value_a - sum(b_incoming_values) / max_value_b
    )
    cost_gap = abs(sum(a_outgoing_costs) - sum(b_outgoing_costs))
    return 0.5 * value_gap + 0.5 * cost_gap


def impact(incoming_values: Sequence[int], outgoing_costs: Sequence[int]) -> float:
    """Incoming value over outgoing cost, both on the 1-100 integer scale."""
    denom = sum(outgoing_costs)
    if denom <= 0:
        raise ValueError("outgoing cost sum must be > 0")
    return sum(incoming_values) / denom


def pain(
    outgoing_costs: Sequence[float],
    outgoing_values: Sequence[float],
    max_roster_value: float,
) -> float:
    """Outgoing release cost over normalized outgoing value."""
    if max_roster_value <= 0:
        raise ValueError("max roster value must be > 0")
    denom = sum(v / max_roster_value for v in outgoing_values)
    if denom <= 0:
        raise ValueError("outgoing value sum must be > 0")
    return sum(outgoing_costs) / denom


@dataclass(frozen=True)
class UpsideWeights:
    """Logistic coefficients over the insight features.

    Similarity is |angle - 90| / 90, so 0 means maximally complementary
    partners.  Defaults are tuned config, replaceable per deployment.
    """

    bias: float = 1.5
    parity_coeff: float = -6.0
    pain_coeff: float = -0.8
    similarity_coeff: float = -0.6
    impact_coeff: float = 1.2


UpsideScorer = Callable[[float, float, float, float], float]

_UPSIDE_SCORERS: dict[str, UpsideScorer] = {}


def register_upside_scorer(name: str, scorer: UpsideScorer) -> None:
    _UPSIDE_SCORERS[name] = scorer


def get_upside_scorer(name: str) -> UpsideScorer:
    return _UPSIDE_SCORERS[name]


def upside(
    trade_parity: float,
    mean_pain: float,
    similarity: float,
    min_impact: float,
    weights: UpsideWeights,
) -> float:
    z = (
        weights.bias
        + weights.parity_coeff * trade_parity
        + weights.pain_coeff * mean_pain
        + weights.similarity_coeff * similarity
        + weights.impact_coeff * min_impact
    )
    return 1.0 / (1.0 + math.exp(-z))


register_upside_scorer("logistic-default", lambda p, mp, s, mi: upside(p, mp, s, mi, UpsideWeights()))


def attach_insights(
    trade: TradePackage,
    ctx: ModeContext,
    weights: UpsideWeights,
) -> TradePackage:
    """Score one package from its mode context.

    A side that gives up nothing (possible only when the user forced a
    one-sided package) contributes zero pain and the integer cost floor
    of 1 to the other side's impact denominator.
    """
    from dataclasses import replace

    a_in = [ctx.valuations[pid] for pid in trade.a_receives]
    b_in = [ctx.valuations[pid] for pid in trade.b_receives]
    max_a = ctx.max_roster_value[trade.team_a]
    max_b = ctx.max_roster_value[trade.team_b]
    a_out_costs = [ctx.cost_fracs[pid] for pid in trade.b_receives]
    b_out_costs = [ctx.cost_fracs[pid] for pid in trade.a_receives]

    trade_parity = parity(a_in, b_in, max_a, max_b, a_out_costs, b_out_costs)

    a_in_ints = [ctx.value_ints[pid] for pid in trade.a_receives]
    b_in_ints = [ctx.value_ints[pid] for pid in trade.b_receives]
    a_out_ints = [ctx.cost_ints[pid] for pid in trade.b_receives]
    b_out_ints = [ctx.cost_ints[pid] for pid in trade.a_receives]
    impact_a = impact(a_in_ints, a_out_ints or [1])
    impact_b = impact(b_in_ints, b_out_ints or [1])

    a_out_vals = [ctx.valuations[pid] for pid in trade.b_receives]
    b_out_vals = [ctx.valuations[pid] for pid in trade.a_receives]
    pain_a = pain(a_out_costs, a_out_vals, max_a) if a_out_vals else 0.0
    pain_b = pain(b_out_costs, b_out_vals, max_b) if b_out_vals else 0.0

    similarity = abs(trade.pairing_angle - 90.0) / 90.0
    score = upside(trade_parity, (pain_a + pain_b) / 2.0, similarity, min(impact_a, impact_b), weights)
    return replace(
        trade,
        insights=TradeInsights(
            parity=trade_parity,
            impact_a=impact_a,
            impact_b=impact_b,
            pain_a=pain_a,
            pain_b=pain_b,
            upside=score,
        ),
    )


# ----------------------------------------------------------------------
# Rule filters
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class FilterConfig:
    max_parity: float = 0.35
    max_pain: float = 1.5
    max_count_diff: int = 1
    min_upside: float = 0.5
    best_player_gap: int = 40
    swap_positions: frozenset[Position] = frozenset({Position.QB})
    disabled: frozenset[str] = frozenset()

    def enabled(self, rule_id: str) -> bool:
        return rule_id not in self.disabled


@dataclass(frozen=True)
class Rejection:
    fingerprint: str
    rule_id: str
    line: str


def _rejection(trade: TradePackage, rule_id: str) -> Rejection:
    ins = trade.insights
    metrics = (
        f"parity={ins.parity:.6f} pain_a={ins.pain_a:.6f} "
        f"pain_b={ins.pain_b:.6f} upside={ins.upside:.6f}"
        if ins is not None
        else "unscored"
    )
    return Rejection(
        fingerprint=trade.fingerprint,
        rule_id=rule_id,
        line=f"{trade.fingerprint} {rule_id} {metrics}",
    )


def _first_failing_rule(
    trade: TradePackage,
    league: League,
    request: PersonalizationRequest,
    config: FilterConfig,
    ctx: ModeContext,
) -> str | None:
    team_a = league.team(trade.team_a)
    team_b = league.team(trade.team_b)
    roster_a = league.roster_players(team_a)
    roster_b = league.roster_players(team_b)
    sides = (
        (roster_a, trade.b_receives, trade.a_receives),  # team A gives b_receives
        (roster_b, trade.a_receives, trade.b_receives),
    )

    if config.enabled("R1"):
        for roster, outgoing, incoming in sides:
            post = [p for p in roster if p.player_id not in outgoing]
            post += [league.players[pid] for pid in incoming if pid in league.players]
            if not starters_fillable(league.rules, post):
                return "R1"

    if config.enabled("R2"):
        for roster, outgoing, _ in sides:
            counts: dict[Position, int] = {}
            for p in roster:
                counts[p.position] = counts.get(p.position, 0) + 1
            for pid in outgoing:
                player = league.players.get(pid)
                if player is not None and counts.get(player.position, 0) == 1:
                    return "R2"

    if config.enabled("R3") and len(trade.a_receives) == 1 and len(trade.b_receives) == 1:
        pa = league.players[trade.a_receives[0]].position
        pb = league.players[trade.b_receives[0]].position
        if pa == pb and pa in config.swap_positions:
            return "R3"

    if config.enabled("R4") and not request.is_personalized:
        shape = (len(trade.a_receives), len(trade.b_receives))
        if shape not in ((1, 1), (2, 2)):
            return "R4"

    if config.enabled("R5"):
        best_a = max((ctx.value_ints[pid] for pid in trade.a_receives), default=0)
        best_b = max((ctx.value_ints[pid] for pid in trade.b_receives), default=0)
        if abs(best_a - best_b) > config.best_player_gap:
            return "R5"

    if config.enabled("R6"):
        for side in (trade.a_receives, trade.b_receives):
            has_kdst = any(
                league.players[pid].position in (Position.K, Position.DST) for pid in side
            )
            if has_kdst and len(side) < 2:
                return "R6"

    if config.enabled("R7"):
        for side in (trade.a_receives, trade.b_receives):
            counts = {}
            for pid in side:
                pos = league.players[pid].position
                counts[pos] = counts.get(pos, 0) + 1
            if counts and max(counts.values()) >= 3:
                return "R7"

    if config.enabled("R8"):
        if len(trade.a_receives) > 3 or len(trade.b_receives) > 3:
            return "R8"

    if config.enabled("R9") and not request.is_personalized:
        pos_a = sorted(league.players[pid].position.value for pid in trade.a_receives)
        pos_b = sorted(league.players[pid].position.value for pid in trade.b_receives)
        if pos_a == pos_b:
            return "R9"

    ins = trade.insights
    if ins is not None:
        if config.enabled("T1") and ins.parity > config.max_parity:
            return "T1"
        if config.enabled("T2") and (ins.pain_a > config.max_pain or ins.pain_b > config.max_pain):
            return "T2"
        if config.enabled("T3") and abs(len(trade.a_receives) - len(trade.b_receives)) > config.max_count_diff:
            return "T3"
        if config.enabled("T4") and ins.upside < config.min_upside:
            return "T4"
    return None


def filter_trades(
    trades: Sequence[TradePackage],
    league: League,
    request: PersonalizationRequest,
    config: FilterConfig,
    contexts: Mapping[str, ModeContext],
) -> tuple[list[TradePackage], list[Rejection]]:
    """Keep trades passing every enabled rule; log the rest.

    Filtering survivors again is a no-op: every rule is a pure predicate
    of the trade and its league context.
    """
    survivors: list[TradePackage] = []
    rejections: list[Rejection] = []
    for trade in trades:
        ctx = contexts[trade.compute_mode]
        rule = _first_failing_rule(trade, league, request, config, ctx)
        if rule is None:
            survivors.append(trade)
        else:
            rejections.append(_rejection(trade, rule))
    return survivors, rejections
