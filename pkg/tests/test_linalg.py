import numpy as np
import pytest
from scipy.linalg import toeplitz

from spectra import (
    ExactAcfSpec,
    SingularMatrixError,
    biased_acf,
    exact_acf,
    gaussian_noise,
    hermitian_quadratic_form,
    levinson_solve,
    spd_factorize,
    spd_solve,
)


def dense_yule_walker(lags: np.ndarray, order: int) -> tuple[np.ndarray, float]:
    """Gaussian-elimination oracle for the Toeplitz normal equations."""
    coeffs = np.linalg.solve(toeplitz(lags[:order]), -lags[1: order + 1])
    return coeffs, float(lags[0] + coeffs @ lags[1: order + 1])


class TestLevinson:
    def test_single_tap(self):
        coeffs, rho = levinson_solve([1.0, 0.5], 1)
        assert coeffs == pytest.approx([-0.5])
        assert rho == pytest.approx(0.75)

    def test_white_noise(self):
        coeffs, rho = levinson_solve([1.0, 0.0, 0.0, 0.0], 3)
        np.testing.assert_allclose(coeffs, np.zeros(3), atol=0)
        assert rho == pytest.approx(1.0)

    def test_matches_dense_solve_on_exact_acf(self):
        seq = exact_acf(ExactAcfSpec(5.0, 5.0, 0.2, 0.3, max_lag=5))
        coeffs, rho = levinson_solve(seq, 5)
        expected, rho_expected = dense_yule_walker(seq.lags, 5)
        np.testing.assert_allclose(coeffs, expected, atol=1e-8)
        assert rho == pytest.approx(rho_expected, abs=1e-8)

    @pytest.mark.parametrize("seed", range(6))
    @pytest.mark.parametrize("order", [1, 4, 12])
    def test_matches_dense_solve_on_estimated_acf(self, seed, order):
        seq = biased_acf(gaussian_noise(1.0, 128, seed=seed), order)
        coeffs, rho = levinson_solve(seq, order)
        expected, rho_expected = dense_yule_walker(seq.lags, order)
        scale = np.max(np.abs(expected)) or 1.0
        np.testing.assert_allclose(coeffs, expected, atol=1e-8 * scale)
        assert rho == pytest.approx(rho_expected, rel=1e-8)
        assert rho >= 0.0

    def test_reflection_coefficients_bounded_for_psd_input(self):
        # the order-m fit's last coefficient is the m-th reflection coefficient
        seq = biased_acf(gaussian_noise(1.0, 200, seed=17), 20)
        for order in range(1, 21):
            coeffs, _ = levinson_solve(seq, order)
            assert abs(coeffs[-1]) <= 1.0 + 1e-10

    def test_signals_singularity(self):
        # f = 0 tone without noise: prediction error hits exactly zero at order 1
        with pytest.raises(SingularMatrixError):
            levinson_solve([1.0, 1.0, 1.0], 2)

    def test_rejects_nonpositive_lag_zero(self):
        with pytest.raises(SingularMatrixError):
            levinson_solve([0.0, 0.0], 1)

    def test_rejects_short_acf(self):
        with pytest.raises(ValueError):
            levinson_solve([1.0, 0.5], 2)


class TestSpdSolve:
    def test_identity(self):
        assert np.array_equal(spd_solve(np.eye(2), [3.0, 4.0]), [3.0, 4.0])

    def test_diagonal(self):
        out = spd_solve(np.diag([2.0, 4.0]), [2.0, 4.0])
        np.testing.assert_allclose(out, [1.0, 1.0], rtol=0, atol=1e-15)

    def test_random_spd_residual(self):
        rng_like = gaussian_noise(1.0, 64, seed=23).reshape(8, 8)
        matrix = rng_like @ rng_like.T + 8 * np.eye(8)
        matrix = (matrix + matrix.T) / 2.0  # exact symmetry
        rhs = gaussian_noise(1.0, 8, seed=24)
        solution = spd_solve(matrix, rhs)
        residual = np.linalg.norm(matrix @ solution - rhs)
        assert residual <= 1e-8 * np.linalg.norm(rhs)

    def test_rejects_indefinite(self):
        with pytest.raises(SingularMatrixError):
            spd_solve(np.array([[1.0, 2.0], [2.0, 1.0]]), [1.0, 1.0])

    def test_rejects_asymmetric(self):
        with pytest.raises(ValueError):
            spd_solve(np.array([[1.0, 0.1], [0.0, 1.0]]), [1.0, 1.0])

    def test_agrees_with_levinson_on_toeplitz_systems(self):
        for seed in range(4):
            seq = biased_acf(gaussian_noise(1.0, 160, seed=seed), 10)
            coeffs, _ = levinson_solve(seq, 10)
            dense = spd_solve(toeplitz(seq.lags[:10]), -seq.lags[1:11])
            np.testing.assert_allclose(coeffs, dense, atol=1e-8 * max(1.0, np.abs(dense).max()))


class TestQuadraticForm:
    def test_identity_gives_dimension(self):
        solve = spd_factorize(np.eye(6))
        for freq in (0.0, 0.123, 0.4999):
            assert hermitian_quadratic_form(solve, freq, 6) == pytest.approx(6.0)

    def test_scalar_matrix(self):
        solve = spd_factorize(2.0 * np.eye(4))
        assert hermitian_quadratic_form(solve, 0.3, 4) == pytest.approx(2.0)

    def test_matches_complex_brute_force(self):
        seq = exact_acf(ExactAcfSpec(5.0, 5.0, 0.2, 0.3, max_lag=5))
        matrix = toeplitz(seq.lags[:5])
        solve = spd_factorize(matrix)
        inverse = np.linalg.inv(matrix)
        steering = np.exp(-2j * np.pi * 0.2 * np.arange(5))
        expected = (steering.conjugate() @ inverse @ steering).real
        value = hermitian_quadratic_form(solve, 0.2, 5)
        assert value == pytest.approx(expected, rel=1e-8)

    def test_strictly_positive_on_grid(self):
        seq = biased_acf(gaussian_noise(1.0, 100, seed=3), 7)
        solve = spd_factorize(toeplitz(seq.lags[:8]))
        for freq in np.linspace(0.0, 0.5, 101):
            assert hermitian_quadratic_form(solve, freq, 8) > 0.0
