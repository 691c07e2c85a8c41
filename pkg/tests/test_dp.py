import numpy as np
import pytest

from sepsparse.dp import dp_solve, dp_solve_2spike, dp_solve_unrestricted
from sepsparse.model import Instance, brute_force_solve, is_feasible, objective
from sepsparse.seeding import make_rng


def random_instance(rng, n_max=14, delta_max=5):
    n = int(rng.integers(1, n_max + 1))
    k = int(rng.integers(1, n + 1))
    delta = int(rng.integers(1, delta_max + 1))
    style = rng.integers(0, 3)
    if style == 0:
        x = rng.random(n)
    elif style == 1:
        x = np.round(rng.random(n) * 4)  # many ties and zeros
    else:
        x = np.where(rng.random(n) < 0.4, 0.0, rng.random(n))
    return x, n, k, delta


class TestDpSolve:
    def test_spec_examples(self):
        values, sols = dp_solve([1.0, 1, 1], 2, 2)
        assert np.array_equal(values, [1.0, 2.0])
        assert objective([1.0, 1, 1], sols[1]) == 2.0
        values, _ = dp_solve([0.0, 0, 0, 0], 3, 1)
        assert np.array_equal(values, [0.0, 0.0, 0.0])
        values, _ = dp_solve([3.0, 2, 3, 2], 2, 3)
        assert np.array_equal(values, [3.0, 5.0])

    def test_matches_oracle(self):
        rng = make_rng(23)
        for _ in range(300):
            x, n, k, delta = random_instance(rng)
            values, sols = dp_solve(x, k, delta)
            _, best = brute_force_solve(Instance(x, k, delta))
            assert values[-1] == pytest.approx(best, abs=1e-9)
            for ell, sol in enumerate(sols, start=1):
                assert is_feasible(sol, n, ell, delta, 1)

    def test_reconstruction_exact_and_monotone(self):
        rng = make_rng(29)
        for _ in range(200):
            x, n, k, delta = random_instance(rng)
            values, sols = dp_solve(x, k, delta)
            for ell in range(1, k + 1):
                # bit-for-bit: reconstruction replays the DP's additions
                assert objective(x, sols[ell - 1]) == values[ell - 1]
            assert np.all(np.diff(values) >= 0)

    def test_marginals_concave(self):
        rng = make_rng(31)
        for _ in range(200):
            x, n, k, delta = random_instance(rng)
            values, _ = dp_solve(x, k, delta)
            gains = np.diff(values, prepend=0.0)
            assert np.all(np.diff(gains) <= 1e-12)

    def test_skip_preferred_on_ties(self):
        values, sols = dp_solve([1.0, 1.0], 1, 1)
        assert sols[0] == (1,)  # equal candidates: the earlier take wins via flags
        values, sols = dp_solve([2.0, 2.0, 2.0], 1, 2)
        assert sols[0] == (1,)


class TestDpUnrestricted:
    def test_spec_examples(self):
        assert dp_solve_unrestricted([1.0, 1, 1], 2) == (2.0, (1, 3))
        assert dp_solve_unrestricted([7.0], 5) == (7.0, (1,))
        assert dp_solve_unrestricted([1.0, 2, 3, 4], 1) == (10.0, (1, 2, 3, 4))

    def test_agrees_with_budgeted_at_capacity(self):
        rng = make_rng(37)
        for _ in range(200):
            n = int(rng.integers(1, 15))
            delta = int(rng.integers(1, 6))
            x = rng.random(n)
            k = -(-n // delta)
            value, sol = dp_solve_unrestricted(x, delta)
            values, _ = dp_solve(x, k, delta)
            assert value == pytest.approx(values[-1], abs=1e-9)
            assert objective(x, sol) == value
            assert is_feasible(sol, n, k, delta, 1)


class TestDp2Spike:
    def test_spec_examples(self):
        values, _ = dp_solve_2spike([2.0, 3, 4], 3, 2)
        assert np.array_equal(values, [4.0, 7.0, 9.0])
        values, _ = dp_solve_2spike([5.0], 1, 3)
        assert np.array_equal(values, [5.0])

    def test_unit_weights_delta4(self):
        # Windows of four consecutive positions cap any 4-vector at two picks;
        # frozen from the exhaustive oracle.
        values, sols = dp_solve_2spike([1.0, 1, 1, 1], 3, 4)
        assert np.array_equal(values, [1.0, 2.0, 2.0])
        _, best = brute_force_solve(Instance(np.ones(4), 3, 4, spikes=2))
        assert values[-1] == best

    def test_matches_oracle(self):
        rng = make_rng(41)
        for _ in range(300):
            x, n, k, delta = random_instance(rng)
            values, sols = dp_solve_2spike(x, k, delta)
            _, best = brute_force_solve(Instance(x, k, delta, spikes=2))
            assert values[-1] == pytest.approx(best, abs=1e-9)
            for ell, sol in enumerate(sols, start=1):
                assert is_feasible(sol, n, ell, delta, 2)
                assert objective(x, sol) == values[ell - 1]

    def test_monotone_and_concave(self):
        rng = make_rng(43)
        for _ in range(200):
            x, n, k, delta = random_instance(rng)
            values, _ = dp_solve_2spike(x, k, delta)
            assert np.all(np.diff(values) >= 0)
            gains = np.diff(values, prepend=0.0)
            assert np.all(np.diff(gains) <= 1e-12)
