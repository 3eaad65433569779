import math

import pytest
from hypothesis import given, settings, strategies as st

from gridiron_trades.importance import (
    DiversityTriple,
    LabeledDataset,
    avg_rank_diff,
    diversity_report,
    diversity_triple,
    ensemble_weights,
    importance_variance,
    max_rank_displacement,
    normalize_importances,
    permutation_importance,
    rank_diff_pct,
    tier_boost,
)
from gridiron_trades.valuation import ModelImportanceProfile


def balanced_dataset(n=200):
    rows = tuple({"f1": float(i % 2), "f2": float(i)} for i in range(n))
    labels = tuple(i % 2 for i in range(n))
    return LabeledDataset(rows=rows, labels=labels)


def accuracy_predicting_from_f1(data: LabeledDataset) -> float:
    hits = sum(1 for row, label in zip(data.rows, data.labels) if int(row["f1"]) == label)
    return hits / len(data)


class TestPermutationImportance:
    def test_ignored_feature_is_exactly_zero_for_every_seed(self):
        data = balanced_dataset()
        for seed in range(20):
            got = permutation_importance(accuracy_predicting_from_f1, data, "f2", k=3, seed=seed)
            assert got == 0.0

    def test_perfect_predictor_loses_half_its_accuracy(self):
        data = balanced_dataset()
        got = permutation_importance(accuracy_predicting_from_f1, data, "f1", k=20, seed=42)
        assert got == pytest.approx(0.5, abs=0.05)

    def test_deterministic_given_seed(self):
        data = balanced_dataset()
        a = permutation_importance(accuracy_predicting_from_f1, data, "f1", k=5, seed=9)
        b = permutation_importance(accuracy_predicting_from_f1, data, "f1", k=5, seed=9)
        assert a == b

    def test_constant_column_importance_zero(self):
        rows = tuple({"f1": 1.0} for _ in range(10))
        data = LabeledDataset(rows=rows, labels=tuple([0, 1] * 5))

        def score(d):
            return sum(r["f1"] for r in d.rows)

        assert permutation_importance(score, data, "f1", k=4, seed=0) == 0.0

    def test_missing_feature_rejected(self):
        data = balanced_dataset()
        with pytest.raises(KeyError):
            permutation_importance(accuracy_predicting_from_f1, data, "nope", k=1, seed=0)


class TestTierBoost:
    def test_zero_accuracy_closed_form(self):
        assert tier_boost(0.2, 0.0) == pytest.approx(0.7, abs=1e-12)

    def test_zero_importance_closed_form(self):
        for accuracy in (0.0, 0.3, 0.99):
            assert tier_boost(0.0, accuracy) == pytest.approx(0.5, abs=1e-12)

    def test_hand_computed_value(self):
        expected = 0.5 * math.exp(0.9 * 0.1) + 0.5 * math.tan(0.9) * 0.1 + 0.1
        assert tier_boost(0.1, 0.9) == pytest.approx(expected, abs=1e-12)
        assert tier_boost(0.1, 0.9) == pytest.approx(0.71009, abs=1e-5)

    @settings(max_examples=100, deadline=None)
    @given(
        accuracy=st.floats(0, 1, allow_nan=False),
        x=st.floats(0, 10, allow_nan=False),
        dx=st.floats(1e-6, 1.0, allow_nan=False),
    )
    def test_strictly_increasing_in_importance(self, accuracy, x, dx):
        assert tier_boost(x + dx, accuracy) > tier_boost(x, accuracy)


class TestNormalizeImportances:
    def test_single_entry(self):
        assert normalize_importances([3.7]) == [1.0]

    def test_proportions(self):
        assert normalize_importances([1.0, 1.0, 2.0]) == [0.25, 0.25, 0.5]

    def test_boosted_set_sums_to_one(self):
        boosted = [tier_boost(x, 0.9) for x in (0.0, 0.1, 0.25, 0.4)]
        normalized = normalize_importances(boosted)
        assert sum(normalized) == pytest.approx(1.0, abs=1e-12)
        assert normalized.index(max(normalized)) == boosted.index(max(boosted))

    def test_all_zero_rejected(self):
        with pytest.raises(ValueError):
            normalize_importances([0.0, 0.0])


class TestRankDiff:
    def test_identity_is_zero(self):
        assert rank_diff_pct(["a", "b", "c"], ["a", "b", "c"]) == 0.0

    def test_full_reversal_n4(self):
        assert rank_diff_pct(["a", "b", "c", "d"], ["d", "c", "b", "a"]) == 1.0

    def test_adjacent_swap_n3(self):
        assert rank_diff_pct(["a", "b", "c"], ["b", "a", "c"]) == 0.5

    def test_full_reversal_is_maximal_for_all_sizes(self):
        for n in range(2, 11):
            names = [f"f{i}" for i in range(n)]
            assert rank_diff_pct(names, names[::-1]) == 1.0
            assert rank_diff_pct(names, names) == 0.0

    def test_symmetry(self):
        a = ["a", "b", "c", "d", "e"]
        b = ["c", "a", "e", "b", "d"]
        assert rank_diff_pct(a, b) == rank_diff_pct(b, a)

    def test_mismatched_sets_rejected(self):
        with pytest.raises(ValueError):
            rank_diff_pct(["a", "b"], ["a", "c"])

    def test_max_displacement_matches_enumeration(self):
        from itertools import permutations

        for n in range(1, 7):
            base = list(range(n))
            best = max(
                sum(abs(i - perm.index(x)) for i, x in enumerate(base))
                for perm in map(list, permutations(base))
            )
            assert max_rank_displacement(n) == best


class TestDiversityNotation:
    def test_avg_rank_diff(self):
        assert avg_rank_diff(0.0, 0.0) == 0.0
        assert avg_rank_diff(1.0, 1.0) == 1.0
        assert avg_rank_diff(0.67, 0.55) == pytest.approx(0.61, abs=1e-12)

    def test_importance_variance(self):
        assert importance_variance([0.3, 0.3, 0.3]) == 0.0
        assert importance_variance([0.5, 0.5, 0.0, 0.0]) == pytest.approx(0.0625, abs=1e-12)
        assert importance_variance([0.9]) == 0.0

    def test_rendering_model_evaluation_rows(self):
        assert diversity_triple(0.957, 0.67, 0.002).render() == "95.70%@67.00%@0.002"
        assert diversity_triple(0.943, 0.7996, 0.077).render() == "94.30%@79.96%@0.077"
        assert diversity_triple(0.0, 0.0, 0.0).render() == "0.00%@0.00%@0.000"


class TestEnsembleWeights:
    def test_single_model_triples_importances(self):
        stats = DiversityTriple(0.9, 0.5, 0.02)
        got = ensemble_weights([({"f1": 0.25, "f2": 0.75}, stats)])
        assert got == {"f1": pytest.approx(0.75, abs=1e-12), "f2": pytest.approx(2.25, abs=1e-12)}

    def test_two_identical_models_also_triple(self):
        stats = DiversityTriple(0.9, 0.5, 0.02)
        model = ({"f1": 0.25, "f2": 0.75}, stats)
        got = ensemble_weights([model, model])
        assert got["f1"] == pytest.approx(0.75, abs=1e-12)
        assert got["f2"] == pytest.approx(2.25, abs=1e-12)

    def test_two_model_hand_computation(self):
        m1 = ({"f1": 0.6, "f2": 0.4}, DiversityTriple(0.9, 0.5, 0.01))
        m2 = ({"f1": 0.2, "f2": 0.8}, DiversityTriple(0.6, 0.25, 0.03))
        got = ensemble_weights([m1, m2])
        acc_t, rank_t, var_t = 1.5, 0.75, 0.04
        expected_f1 = (
            0.9 * 0.6 / acc_t + 0.5 * 0.6 / rank_t + 0.01 * 0.6 / var_t
            + 0.6 * 0.2 / acc_t + 0.25 * 0.2 / rank_t + 0.03 * 0.2 / var_t
        )
        expected_f2 = (
            0.9 * 0.4 / acc_t + 0.5 * 0.4 / rank_t + 0.01 * 0.4 / var_t
            + 0.6 * 0.8 / acc_t + 0.25 * 0.8 / rank_t + 0.03 * 0.8 / var_t
        )
        assert got["f1"] == pytest.approx(expected_f1, abs=1e-12)
        assert got["f2"] == pytest.approx(expected_f2, abs=1e-12)

    def test_homogeneous_in_importances(self):
        m1 = ({"f1": 0.6, "f2": 0.4}, DiversityTriple(0.9, 0.5, 0.01))
        m2 = ({"f1": 0.2, "f2": 0.8}, DiversityTriple(0.6, 0.25, 0.03))
        base = ensemble_weights([m1, m2])
        scaled = ensemble_weights(
            [({k: 3.5 * v for k, v in m1[0].items()}, m1[1]),
             ({k: 3.5 * v for k, v in m2[0].items()}, m2[1])]
        )
        for name in base:
            assert scaled[name] == pytest.approx(3.5 * base[name], rel=1e-12)

    def test_zero_denominator_term_drops_out(self):
        stats = DiversityTriple(0.9, 0.0, 0.0)
        got = ensemble_weights([({"f1": 1.0}, stats)])
        assert got == {"f1": pytest.approx(1.0, abs=1e-12)}


class TestDiversityReport:
    def test_rows_cover_profiles(self):
        order = ("f1", "f2", "f3")
        profiles = [
            ModelImportanceProfile("xgb", "classical", 0.957, {"f1": 0.5, "f2": 0.3, "f3": 0.2}, order),
            ModelImportanceProfile("qnn", "quantum", 0.943, {"f1": 0.1, "f2": 0.3, "f3": 0.6}, ("f3", "f2", "f1")),
        ]
        rows = diversity_report(profiles, sme_rank_order=("f2", "f1", "f3"))
        assert [r["model_id"] for r in rows] == ["xgb", "qnn"]
        for row in rows:
            assert 0.0 <= row["avg_rank_diff"] <= 1.0
            assert "@" in row["rendered_triple"]
