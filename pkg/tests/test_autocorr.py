import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spectra import AcfSequence, ExactAcfSpec, biased_acf, exact_acf, gaussian_noise, toeplitz_from_acf


class TestBiasedAcf:
    def test_constant_signal(self):
        seq = biased_acf(np.ones(4), 1)
        assert seq.lags[0] == pytest.approx(1.0, abs=0)
        assert seq.lags[1] == pytest.approx(0.75, abs=0)
        assert seq.source == "estimated"

    def test_zero_signal(self):
        assert np.array_equal(biased_acf(np.zeros(16), 5).lags, np.zeros(6))

    def test_quarter_cycle_cosine_against_direct_sum(self):
        x = np.cos(2 * np.pi * 0.25 * np.arange(8))
        seq = biased_acf(x, 2)
        # direct-summation oracle
        expected = [sum(x[n] * x[n + k] for n in range(8 - k)) / 8 for k in range(3)]
        np.testing.assert_allclose(seq.lags, expected, rtol=0, atol=1e-15)
        assert seq.lags[0] == pytest.approx(0.5)
        assert seq.lags[2] == pytest.approx(-0.375)

    def test_rejects_max_lag_at_length(self):
        with pytest.raises(ValueError):
            biased_acf(np.ones(4), 4)

    def test_evenness_via_indexing(self):
        seq = biased_acf(gaussian_noise(1.0, 64, seed=5), 10)
        for k in range(11):
            assert seq[-k] == seq[k]

    def test_lag_bound(self):
        # |r(k)| <= r(0) is structural for the biased estimator
        for seed in range(5):
            seq = biased_acf(gaussian_noise(1.0, 100, seed=seed), 50)
            assert np.all(np.abs(seq.lags) <= seq.lags[0] + 1e-15)

    @given(seed=st.integers(0, 2**32), n=st.integers(8, 96))
    @settings(max_examples=40, deadline=None)
    def test_toeplitz_is_positive_semidefinite(self, seed, n):
        x = gaussian_noise(1.0, n, seed=seed)
        seq = biased_acf(x, n - 1)
        matrix = toeplitz_from_acf(seq, n)
        assert np.linalg.eigvalsh(matrix).min() >= -1e-9 * seq.lags[0]

    def test_quadratic_scaling(self):
        x = gaussian_noise(1.0, 64, seed=9)
        base = biased_acf(x, 20).lags
        scaled = biased_acf(3.5 * x, 20).lags
        np.testing.assert_allclose(scaled, 3.5**2 * base, rtol=1e-12)


class TestToeplitz:
    def test_white_noise_acf_gives_identity(self):
        assert np.array_equal(toeplitz_from_acf([1.0, 0.0, 0.0], 3), np.eye(3))

    def test_two_lag_definition(self):
        assert np.array_equal(toeplitz_from_acf([2.0, 1.0], 2), [[2.0, 1.0], [1.0, 2.0]])

    def test_exact_acf_diagonal(self):
        seq = exact_acf(ExactAcfSpec(5.0, 5.0, 0.2, 0.3, max_lag=5))
        matrix = toeplitz_from_acf(seq, 6)
        assert np.array_equal(np.diag(matrix), np.full(6, 11.0))
        assert np.array_equal(matrix, matrix.T)

    def test_rejects_dim_beyond_lags(self):
        with pytest.raises(ValueError):
            toeplitz_from_acf([1.0, 0.5], 3)


class TestAcfSequence:
    def test_rejects_non_finite(self):
        with pytest.raises(ValueError):
            AcfSequence(np.array([1.0, np.inf]))

    def test_rejects_unknown_source(self):
        with pytest.raises(ValueError):
            AcfSequence(np.array([1.0]), source="guessed")

    def test_lags_are_read_only(self):
        seq = AcfSequence(np.array([1.0, 0.5]))
        with pytest.raises(ValueError):
            seq.lags[0] = 2.0
