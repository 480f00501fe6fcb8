"""Dense symmetric and Toeplitz solvers backing the parametric estimators.

The Toeplitz path (Levinson-Durbin) is implemented directly so its
reflection coefficients and prediction-error powers are observable; the
general symmetric-positive-definite path delegates to a Cholesky
factorization.  Complex arithmetic is confined to the steering-vector
quadratic form and realized as paired real solves, so everything else in
the library stays real-valued.
"""

from typing import Callable

import numpy as np
from scipy.linalg import cho_factor, cho_solve

from .autocorr import as_acf

#: prediction-error powers at or below this multiple of r(0) abort the recursion
LEVINSON_SINGULARITY_FLOOR = 1e-30

#: relative magnitude the discarded imaginary residue may reach before erroring
IMAG_RESIDUE_TOL = 1e-8


class SingularMatrixError(ValueError):
    """A linear system was singular or not positive definite.

    Typical causes are a noiseless signal modeled with too many
    coefficients or an autocorrelation matrix that lost positive
    definiteness; lowering the order or adding noise usually resolves it.
    No automatic regularization is applied.
    """


def levinson_solve(acf, order: int) -> tuple[np.ndarray, float]:
    """Solve the Toeplitz normal equations for AR coefficients.

    Runs the Levinson-Durbin recursion on lags r(0..order) and returns
    ``(coeffs, noise_power)`` where ``coeffs`` are a(1..p) satisfying

        sum_k a(k) r(m - k) = -r(m),   m = 1..p

    and ``noise_power`` is r(0) + sum_k a(k) r(k), the prediction-error
    power (evenness of the autocorrelation supplies the negative lags).

    Raises
    ------
    SingularMatrixError
        If a reflection step would divide by a prediction-error power at
        or below ``LEVINSON_SINGULARITY_FLOOR * r(0)``.
    """
    seq = as_acf(acf)
    order = int(order)
    if order < 1:
        raise ValueError("order must be at least 1")
    if seq.max_lag < order:
        raise ValueError(f"need lags 0..{order}, only 0..{seq.max_lag} available")
    r = seq.lags
    if r[0] <= 0.0:
        raise SingularMatrixError("autocorrelation lag 0 must be positive")

    floor = LEVINSON_SINGULARITY_FLOOR * r[0]
    a = np.zeros(0, dtype=np.float64)
    error_power = r[0]
    for m in range(1, order + 1):
        if error_power <= floor:
            raise SingularMatrixError(
                f"prediction-error power vanished at step {m}; reduce order or add noise"
            )
        acc = r[m]
        if m > 1:
            acc += a @ r[m - 1:0:-1]
        reflection = -acc / error_power
        if m > 1:
            a = np.concatenate([a + reflection * a[::-1], [reflection]])
        else:
            a = np.array([reflection])
        error_power *= 1.0 - reflection * reflection

    noise_power = float(r[0] + a @ r[1: order + 1])
    return a, noise_power


def spd_solve(matrix, rhs) -> np.ndarray:
    """Solve ``matrix @ y = rhs`` for a symmetric positive-definite matrix.

    The matrix must be exactly symmetric (as produced by the Toeplitz and
    covariance constructors); positive definiteness is verified by the
    Cholesky factorization itself.
    """
    return spd_factorize(matrix)(rhs)


def spd_factorize(matrix) -> Callable[[np.ndarray], np.ndarray]:
    """Cholesky-factorize once and return a solver callable.

    The returned callable applies the matrix inverse to vectors or
    stacked column blocks, and is safe to share across threads.

    Raises
    ------
    SingularMatrixError
        If the matrix is not positive definite (a non-positive pivot
        arises during factorization).
    """
    m = np.asarray(matrix, dtype=np.float64)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"matrix must be square, got shape {m.shape}")
    if not np.array_equal(m, m.T):
        raise ValueError("matrix must be symmetric")
    try:
        factor = cho_factor(m, lower=True)
    except np.linalg.LinAlgError as exc:
        raise SingularMatrixError(
            "matrix is not positive definite; reduce order or add noise"
        ) from exc

    def solve(rhs: np.ndarray) -> np.ndarray:
        b = np.asarray(rhs, dtype=np.float64)
        if b.shape[0] != m.shape[0]:
            raise ValueError(f"rhs length {b.shape[0]} does not match dimension {m.shape[0]}")
        return cho_solve(factor, b)

    return solve


def hermitian_quadratic_form(solve: Callable[[np.ndarray], np.ndarray], freq: float, dim: int) -> float:
    """Evaluate e^H R^{-1} e for the complex steering vector at ``freq``.

    ``solve`` must apply R^{-1} (e.g. the callable from
    :func:`spd_factorize`); the steering vector is
    e = (1, exp(-j*w), ..., exp(-j*(dim-1)*w)) with w = 2*pi*freq.  The
    computation splits e into cosine and sine parts so only real solves
    are needed; the imaginary residue vanishes for symmetric R and is
    checked against ``IMAG_RESIDUE_TOL`` before being discarded.
    """
    dim = int(dim)
    if dim < 1:
        raise ValueError("dim must be at least 1")
    angles = 2.0 * np.pi * float(freq) * np.arange(dim)
    c = np.cos(angles)
    s = np.sin(angles)
    u = solve(c)
    v = solve(s)
    real = float(c @ u + s @ v)
    imag = float(s @ u - c @ v)
    if abs(imag) > IMAG_RESIDUE_TOL * max(abs(real), np.finfo(float).tiny):
        raise SingularMatrixError(
            f"quadratic form lost symmetry (imaginary residue {imag:.3e} vs real {real:.3e})"
        )
    return real
