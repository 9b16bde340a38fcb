import numpy as np
import pytest

from kway.behavior import (
    Behavior,
    BehaviorError,
    GameSpec,
    classical_win_bound,
    eval_B,
    one_hot,
    win_prob_game1,
    win_prob_game2,
)

PERFECT_N2 = Behavior.from_table(2, [0.0, 1.0, 1.0, 0.0])


def random_behavior(rng, n):
    return Behavior.from_table(n, rng.uniform(0.0, 1.0, 2 ** n))


class TestBehaviorConstruction:
    def test_table_size_checked(self):
        with pytest.raises(BehaviorError):
            Behavior.from_table(2, [0.1, 0.2, 0.3])

    def test_out_of_range_rejected(self):
        with pytest.raises(BehaviorError):
            Behavior.from_table(1, [0.5, 1.1])
        with pytest.raises(BehaviorError):
            Behavior.from_table(1, [-0.2, 0.5])

    def test_tiny_overshoot_clamped(self):
        b = Behavior.from_table(1, [1.0 + 5e-13, -5e-13])
        assert b.p1 == (1.0, 0.0)

    def test_json_round_trip(self):
        b = Behavior.from_table(2, [0.0, 0.25, 0.5, 1.0])
        assert Behavior.from_json(b.to_json()) == b


class TestEvalB:
    def test_perfect_n2_saturates_logical_bound(self):
        assert eval_B(PERFECT_N2) == pytest.approx(2.0, abs=1e-12)

    def test_all_zero_behavior(self):
        b = Behavior.from_table(3, [0.0] * 8)
        assert eval_B(b) == 0.0

    def test_all_one_behavior_n3(self):
        b = Behavior.from_table(3, [1.0] * 8)
        assert eval_B(b) == pytest.approx(2.0)

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_identity_with_game1_and_upper_bound(self, n):
        rng = np.random.default_rng(17 + n)
        for _ in range(50):
            b = random_behavior(rng, n)
            v = eval_B(b)
            assert v == pytest.approx(-1 + (n + 1) * win_prob_game1(b), abs=1e-12)
            assert -1 - 1e-12 <= v <= n + 1e-12


class TestWinProbabilities:
    def test_game1_perfect_discrimination(self):
        assert win_prob_game1(PERFECT_N2) == pytest.approx(1.0)

    def test_game1_random_guess(self):
        b = Behavior.from_table(3, [0.5] * 8)
        assert win_prob_game1(b) == pytest.approx(0.5)

    def test_game1_always_output_one(self):
        b = Behavior.from_table(3, [1.0] * 8)
        assert win_prob_game1(b) == pytest.approx(0.75)

    def test_game2_always_output_zero(self):
        b = Behavior.from_table(3, [0.0] * 8)
        assert win_prob_game2(b) == pytest.approx(0.5)

    def test_game2_perfect_n2(self):
        assert win_prob_game2(PERFECT_N2) == pytest.approx(1.0)

    def test_game2_one_query_strategy_n4(self):
        # read x_1, output it
        b = Behavior.from_table(4, [(x >> 0) & 1 for x in range(16)])
        assert win_prob_game2(b) == pytest.approx(5 / 8)

    def test_gamespec_priors_validated(self):
        with pytest.raises(BehaviorError):
            GameSpec(2, (0.5, 0.5, 0.5))
        with pytest.raises(BehaviorError):
            GameSpec(2, (-0.5, 1.0, 0.5))


class TestClassicalBound:
    @pytest.mark.parametrize(
        "n,k,expected", [(4, 1, 0.625), (7, 0, 0.5), (5, 5, 1.0), (10, 4, 0.7)]
    )
    def test_values(self, n, k, expected):
        assert classical_win_bound(n, k) == pytest.approx(expected)

    def test_rejects_k_above_n(self):
        with pytest.raises(BehaviorError):
            classical_win_bound(3, 4)

    @pytest.mark.parametrize("n", range(1, 7))
    def test_monotone_and_matches_or_strategy(self, n):
        prev = -1.0
        for k in range(n + 1):
            bound = classical_win_bound(n, k)
            assert bound >= prev
            prev = bound
            # deterministic strategy: output 1 iff any of the first k bits is 1
            mask = (1 << k) - 1
            table = [1.0 if (x & mask) else 0.0 for x in range(2 ** n)]
            assert win_prob_game2(Behavior.from_table(n, table)) == pytest.approx(bound)


def test_one_hot_indexing():
    assert [one_hot(i) for i in (1, 2, 3)] == [1, 2, 4]
