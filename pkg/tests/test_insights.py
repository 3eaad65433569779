import math

import pytest

from gridiron_trades.engine import (
    PersonalizationRequest,
    TradePackage,
    mode_context,
)
from gridiron_trades.insights import (
    FilterConfig,
    UpsideWeights,
    attach_insights,
    filter_trades,
    impact,
    pain,
    parity,
    upside,
)
from gridiron_trades.league import League, LeagueRules, PlayerRecord, Position, SlotRule, Team

EMPTY = PersonalizationRequest()
PERSONALIZED = PersonalizationRequest(watchlist=frozenset({"whatever"}))


class TestParity:
    def test_mirror_trade_is_zero(self):
        got = parity([5.0], [5.0], 10.0, 10.0, [0.4], [0.4])
        assert got == 0.0

    def test_one_sided_value_difference(self):
        got = parity([8.0], [4.0], 10.0, 10.0, [0.5], [0.5])
        assert got == pytest.approx(0.2, abs=1e-12)

    def test_value_and_cost_gaps_combine(self):
        got = parity([6.0], [4.0], 10.0, 10.0, [0.7], [0.4])
        assert got == pytest.approx(0.25, abs=1e-12)

    def test_symmetric_under_team_swap(self):
        a = parity([6.0, 2.0], [4.0], 10.0, 8.0, [0.7], [0.4, 0.1])
        b = parity([4.0], [6.0, 2.0], 8.0, 10.0, [0.4, 0.1], [0.7])
        assert a == b

    def test_zero_max_roster_value_rejected(self):
        with pytest.raises(ValueError):
            parity([1.0], [1.0], 0.0, 1.0, [], [])


class TestImpact:
    def test_double_value(self):
        assert impact([100], [50]) == 2.0

    def test_equal_sums(self):
        assert impact([30, 20], [25, 25]) == 1.0

    def test_three_for_two_fixture(self):
        assert impact([40, 35, 10], [30, 20]) == pytest.approx(85 / 50, abs=1e-12)

    def test_is_the_exact_integer_ratio(self):
        from fractions import Fraction

        values = [37, 21, 44]
        costs = [13, 29]
        got = impact(values, costs)
        assert got == sum(values) / sum(costs)  # same float quotient, bit for bit
        assert Fraction(sum(values), sum(costs)) * sum(costs) == sum(values)

    def test_zero_cost_rejected(self):
        with pytest.raises(ValueError):
            impact([10], [])


class TestPain:
    def test_balanced_trade(self):
        # cost sum 0.5 and value share sum 0.5
        assert pain([0.5], [5.0], 10.0) == 1.0

    def test_low_value_high_cost_hurts(self):
        assert pain([0.9], [2.0], 10.0) > 1.0

    def test_high_value_low_cost_is_cheap(self):
        assert pain([0.2], [9.0], 10.0) < 1.0

    def test_empty_outgoing_rejected(self):
        with pytest.raises(ValueError):
            pain([], [], 10.0)


class TestUpside:
    def test_all_zero_weights_give_half(self):
        weights = UpsideWeights(bias=0.0, parity_coeff=0.0, pain_coeff=0.0,
                                similarity_coeff=0.0, impact_coeff=0.0)
        assert upside(0.9, 1.4, 0.3, 2.0, weights) == 0.5

    def test_monotone_against_parity(self):
        weights = UpsideWeights()
        assert upside(0.0, 1.0, 0.5, 1.0, weights) > upside(1.0, 1.0, 0.5, 1.0, weights)

    def test_default_weight_hand_evaluation(self):
        weights = UpsideWeights()
        z = 1.5 - 6.0 * 0.1 - 0.8 * 0.9 - 0.6 * 0.5 + 1.2 * 1.1
        expected = 1.0 / (1.0 + math.exp(-z))
        assert upside(0.1, 0.9, 0.5, 1.1, weights) == pytest.approx(expected, abs=1e-12)

    def test_monotone_in_each_feature_with_coefficient_sign(self):
        weights = UpsideWeights()
        base = upside(0.2, 1.0, 0.5, 1.0, weights)
        assert upside(0.2, 1.0, 0.5, 1.4, weights) > base  # impact positive
        assert upside(0.2, 1.4, 0.5, 1.0, weights) < base  # pain negative
        assert upside(0.2, 1.0, 0.9, 1.0, weights) < base  # similarity negative


def build_league(team_specs):
    """team_specs: {team_id: [(pid, position), ...]}"""
    players = {}
    teams = []
    for tid, entries in team_specs.items():
        roster = []
        for pid, pos in entries:
            players[pid] = PlayerRecord(
                player_id=pid, name=pid, position=pos, season_projection=100.0
            )
            roster.append(pid)
        teams.append(Team(tid, tuple(roster)))
    rules = LeagueRules(
        slot_rules=(
            SlotRule("QB", frozenset({Position.QB}), 1),
            SlotRule("RB", frozenset({Position.RB}), 1),
            SlotRule("TE", frozenset({Position.TE}), 1),
            SlotRule("K", frozenset({Position.K}), 1),
        ),
        team_count=len(teams),
    )
    return League(rules=rules, teams=tuple(teams), players=players)


def context_for(league, bump=None):
    valuations = {pid: 10.0 for pid in league.players}
    if bump:
        valuations.update(bump)
    return mode_context(league, "sme", valuations, max(valuations.values()))


def package(league, ctx, team_a, team_b, a_receives, b_receives, angle=20.0):
    pkg = TradePackage(
        team_a=team_a,
        team_b=team_b,
        a_receives=tuple(a_receives),
        b_receives=tuple(b_receives),
        compute_mode="sme",
        pairing_angle=angle,
    )
    return attach_insights(pkg, ctx, UpsideWeights())


BASE_SPEC = {
    "T1": [("a_qb1", Position.QB), ("a_qb2", Position.QB), ("a_rb1", Position.RB),
           ("a_rb2", Position.RB), ("a_te1", Position.TE), ("a_te2", Position.TE),
           ("a_k1", Position.K), ("a_k2", Position.K)],
    "T2": [("b_qb1", Position.QB), ("b_qb2", Position.QB), ("b_rb1", Position.RB),
           ("b_rb2", Position.RB), ("b_te1", Position.TE), ("b_te2", Position.TE),
           ("b_k1", Position.K), ("b_k2", Position.K)],
}


class TestFilterTrades:
    def test_qb_for_qb_swap_rejected_as_r3(self):
        league = build_league(BASE_SPEC)
        ctx = context_for(league)
        trade = package(league, ctx, "T1", "T2", ["b_qb1"], ["a_qb1"])
        survivors, rejections = filter_trades([trade], league, PERSONALIZED, FilterConfig(), {"sme": ctx})
        assert survivors == []
        assert rejections[0].rule_id == "R3"
        assert rejections[0].line.startswith(trade.fingerprint)

    def test_unfillable_te_slot_rejected_as_r1(self):
        spec = dict(BASE_SPEC)
        spec["T1"] = [("a_qb1", Position.QB), ("a_rb1", Position.RB),
                      ("a_te1", Position.TE), ("a_k1", Position.K), ("a_k2", Position.K)]
        league = build_league(spec)
        ctx = context_for(league)
        # T1 gives its TE for a RB: the TE slot can no longer be filled.
        trade = package(league, ctx, "T1", "T2", ["b_rb1"], ["a_te1"])
        survivors, rejections = filter_trades([trade], league, PERSONALIZED, FilterConfig(), {"sme": ctx})
        assert survivors == []
        assert rejections[0].rule_id == "R1"

    def test_solo_kicker_rejected_as_r6(self):
        league = build_league(BASE_SPEC)
        ctx = context_for(league)
        trade = package(league, ctx, "T1", "T2", ["b_k1"], ["a_rb1"])
        survivors, rejections = filter_trades([trade], league, EMPTY, FilterConfig(), {"sme": ctx})
        assert survivors == []
        assert rejections[0].rule_id == "R6"

    def test_only_player_at_position_rejected_as_r2(self):
        spec = dict(BASE_SPEC)
        spec["T1"] = [("a_qb1", Position.QB), ("a_qb2", Position.QB), ("a_rb1", Position.RB),
                      ("a_te1", Position.TE), ("a_te2", Position.TE), ("a_k1", Position.K),
                      ("a_k2", Position.K)]
        league = build_league(spec)
        ctx = context_for(league)
        # T1 gives its only RB but receives one back: rosters stay fillable
        # (R1 passes), yet giving away the lone RB still trips R2.
        trade = package(league, ctx, "T1", "T2", ["b_rb1"], ["a_rb1"])
        survivors, rejections = filter_trades([trade], league, PERSONALIZED, FilterConfig(), {"sme": ctx})
        assert survivors == []
        assert rejections[0].rule_id == "R2"

    def test_non_personalized_shape_rule_r4(self):
        league = build_league(BASE_SPEC)
        ctx = context_for(league)
        trade = package(league, ctx, "T1", "T2", ["b_rb1", "b_te1"], ["a_qb1"])
        survivors, rejections = filter_trades([trade], league, EMPTY, FilterConfig(), {"sme": ctx})
        assert rejections[0].rule_id == "R4"
        survivors, rejections = filter_trades(
            [trade], league, PERSONALIZED, FilterConfig(), {"sme": ctx}
        )
        assert rejections == [] or rejections[0].rule_id != "R4"

    def test_pure_positional_swap_rejected_as_r9(self):
        league = build_league(BASE_SPEC)
        ctx = context_for(league)
        trade = package(league, ctx, "T1", "T2", ["b_rb1"], ["a_rb1"])
        survivors, rejections = filter_trades([trade], league, EMPTY, FilterConfig(), {"sme": ctx})
        assert survivors == []
        assert rejections[0].rule_id == "R9"

    def test_best_player_gap_rule_r5(self):
        league = build_league(BASE_SPEC)
        ctx = context_for(league, bump={"b_rb1": 1.0})
        trade = package(league, ctx, "T1", "T2", ["b_rb1"], ["a_te1"])
        survivors, rejections = filter_trades([trade], league, PERSONALIZED, FilterConfig(), {"sme": ctx})
        assert survivors == []
        assert rejections[0].rule_id == "R5"

    def test_three_of_one_position_rejected_as_r7(self):
        spec = {
            "T1": BASE_SPEC["T1"] + [("a_rb3", Position.RB), ("a_rb4", Position.RB)],
            "T2": BASE_SPEC["T2"] + [("b_rb3", Position.RB), ("b_rb4", Position.RB)],
        }
        league = build_league(spec)
        ctx = context_for(league)
        trade = package(league, ctx, "T1", "T2", ["b_rb1", "b_rb2", "b_rb3"],
                        ["a_qb1", "a_rb1", "a_te1"])
        survivors, rejections = filter_trades([trade], league, PERSONALIZED, FilterConfig(), {"sme": ctx})
        assert survivors == []
        assert rejections[0].rule_id == "R7"

    def test_survivor_set_is_idempotent(self):
        league = build_league(BASE_SPEC)
        ctx = context_for(league, bump={"b_rb1": 9.0, "a_te1": 9.5})
        trades = [
            package(league, ctx, "T1", "T2", ["b_rb1"], ["a_te1"]),
            package(league, ctx, "T1", "T2", ["b_qb1"], ["a_qb1"]),
        ]
        survivors, _ = filter_trades(trades, league, PERSONALIZED, FilterConfig(), {"sme": ctx})
        again, rejections = filter_trades(survivors, league, PERSONALIZED, FilterConfig(), {"sme": ctx})
        assert again == survivors
        assert rejections == []

    def test_disabled_rule_is_skipped(self):
        league = build_league(BASE_SPEC)
        ctx = context_for(league)
        trade = package(league, ctx, "T1", "T2", ["b_qb1"], ["a_qb1"])
        config = FilterConfig(disabled=frozenset({"R3", "R9", "T4"}))
        survivors, rejections = filter_trades([trade], league, EMPTY, config, {"sme": ctx})
        assert survivors == [trade]


class TestAttachInsights:
    def test_metrics_wire_up_from_context(self, desk_league, desk_contexts):
        ctx = desk_contexts[0]
        t1, t2 = desk_league.teams[0], desk_league.teams[1]
        trade = TradePackage(
            team_a=t1.team_id,
            team_b=t2.team_id,
            a_receives=(t2.roster[2],),
            b_receives=(t1.roster[2],),
            compute_mode=ctx.mode,
            pairing_angle=30.0,
        )
        scored = attach_insights(trade, ctx, UpsideWeights())
        ins = scored.insights
        assert ins is not None
        out_id = t1.roster[2]
        in_id = t2.roster[2]
        assert ins.impact_a == pytest.approx(
            ctx.value_ints[in_id] / ctx.cost_ints[out_id], abs=1e-12
        )
        assert ins.impact_b == pytest.approx(
            ctx.value_ints[out_id] / ctx.cost_ints[in_id], abs=1e-12
        )
        assert ins.pain_a == pytest.approx(
            ctx.cost_fracs[out_id]
            / (ctx.valuations[out_id] / ctx.max_roster_value[t1.team_id]),
            abs=1e-12,
        )
        assert 0.0 <= ins.upside <= 1.0
