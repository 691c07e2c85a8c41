import numpy as np
import pytest

from sepsparse.generators import GenSpec, gen_poisson, gen_uniform
from sepsparse.tail import strong_and_reduced


class TestUniform:
    def test_deterministic(self):
        assert np.array_equal(gen_uniform(5, 1), gen_uniform(5, 1))
        assert not np.array_equal(gen_uniform(5, 1), gen_uniform(5, 2))

    def test_range_and_mean(self):
        x = gen_uniform(10_000, 3)
        assert float(x.min()) >= 0.0 and float(x.max()) < 1.0
        assert 0.47 <= float(x.mean()) <= 0.53

    def test_single_entry(self):
        x = gen_uniform(1, 9)
        assert x.shape == (1,) and 0.0 <= x[0] < 1.0

    def test_few_strong_indices(self):
        # dense uniform noise rarely lets one entry dominate its window
        strong = total = 0
        for seed in range(3):
            x = gen_uniform(50_000, seed)
            strong += strong_and_reduced(x, 3).strong.size
            total += x.size
        assert strong / total < 0.01


class TestPoisson:
    def test_deterministic(self):
        a = gen_poisson(200, 4.0, 9)
        b = gen_poisson(200, 4.0, 9)
        assert np.array_equal(a[0], b[0]) and a[1] == b[1]

    def test_structure(self):
        x, spikes = gen_poisson(500, 3.0, 5)
        arr = np.asarray(spikes)
        assert np.all(np.diff(arr) >= 1)
        assert arr.min() >= 1 and arr.max() <= 500
        on = np.zeros(500, dtype=bool)
        on[arr - 1] = True
        assert np.all(x[~on] == 0.0)
        assert np.all((x[on] >= 0.0) & (x[on] < 1.0))

    def test_spike_density(self):
        counts = [len(gen_poisson(10_000, 4.0, seed)[1]) for seed in range(100)]
        med = float(np.median(counts))
        assert 2000 <= med <= 3000
        assert abs(med - 2500) <= 250

    def test_huge_gap_small_count(self):
        counts = [len(gen_poisson(50, 51.0, seed)[1]) for seed in range(200)]
        assert max(counts) <= 50
        assert float(np.mean(counts)) <= 2.0

    def test_validation(self):
        with pytest.raises(ValueError):
            gen_poisson(10, 0.5, 0)
        with pytest.raises(ValueError):
            gen_poisson(0, 2.0, 0)


class TestGenSpec:
    def test_dispatch(self):
        assert np.array_equal(GenSpec("uniform", 6, 4).generate(), gen_uniform(6, 4))
        spec = GenSpec("poisson", 30, 4, expected_gap=3.0)
        assert np.array_equal(spec.generate(), gen_poisson(30, 3.0, 4)[0])

    def test_validation(self):
        with pytest.raises(ValueError):
            GenSpec("gauss", 5, 0)
        with pytest.raises(ValueError):
            GenSpec("poisson", 5, 0)
