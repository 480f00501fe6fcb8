"""Parametric spectrum estimators: Capon minimum variance and AR models.

The autoregressive estimators share one spectrum formula,

    S(f) = rho / |1 + sum_{k=1}^{p} a(k) exp(-j*2*pi*f*k)|^2,

and differ in how the coefficients are obtained: Yule-Walker solves the
Toeplitz normal equations built from autocorrelation lags, while the
modified covariance method minimizes the summed forward and backward
prediction-error power of the raw samples.  Capon's method instead probes
each frequency with a data-adaptive narrowband filter through the inverse
autocorrelation matrix.
"""

from dataclasses import dataclass

import numpy as np

from .autocorr import as_acf, toeplitz_from_acf
from .linalg import (
    SingularMatrixError,
    hermitian_quadratic_form,
    levinson_solve,
    spd_factorize,
    spd_solve,
)
from .spectrum import SpectrumEstimate
from .validation import as_frequency_grid, as_signal, check_order

AR_METHODS = ("yule_walker", "modified_covariance")

#: ceiling applied to AR spectrum values when the denominator underflows
SPECTRUM_CEILING = 1e30

#: how negative (relative to the lag-0 scale) a noise power may round to
NOISE_POWER_TOL = 1e-9


@dataclass(frozen=True)
class ArModel:
    """Fitted autoregressive model: coefficients a(1..p) plus noise power."""

    order: int
    coeffs: np.ndarray
    noise_power: float
    method: str

    def __post_init__(self):
        coeffs = np.asarray(self.coeffs, dtype=np.float64)
        if coeffs.ndim != 1 or coeffs.size != self.order:
            raise ValueError(f"coeffs must have length order={self.order}")
        if not np.all(np.isfinite(coeffs)) or not np.isfinite(self.noise_power):
            raise ValueError("model parameters must be finite")
        if self.method not in AR_METHODS:
            raise ValueError(f"method must be one of {AR_METHODS}, got {self.method!r}")
        coeffs = coeffs.copy()
        coeffs.flags.writeable = False
        object.__setattr__(self, "coeffs", coeffs)


def _check_noise_power(rho: float, scale: float, method: str) -> float:
    if rho < -NOISE_POWER_TOL * abs(scale):
        raise SingularMatrixError(
            f"{method} noise power {rho:.3e} is negative beyond rounding tolerance; "
            "the input is effectively singular at this order"
        )
    return float(rho)


def yule_walker_fit(acf, order: int) -> ArModel:
    """Fit an AR model from autocorrelation lags via the normal equations.

    Works identically for estimated and exact autocorrelations; lags
    0..order must be available and lag 0 must be positive.
    """
    order = check_order(order)
    seq = as_acf(acf)
    coeffs, rho = levinson_solve(seq, order)
    rho = _check_noise_power(rho, seq.lags[0], "yule_walker")
    return ArModel(order, coeffs, rho, "yule_walker")


def covariance_estimates(x, order: int) -> np.ndarray:
    """Forward-backward covariance estimates C(j, k), j, k = 0..order.

    C(j, k) = 1/(2*(N-p)) * sum_{n=p}^{N-1} [x(n-j)x(n-k) + x(n-p+j)x(n-p+k)]

    with p = order.  Entries (j, k) and (k, j) are stored from the same
    accumulation, so the matrix is exactly symmetric.  Requires N >= 2p.
    """
    arr = as_signal(x)
    p = check_order(order)
    n = arr.size
    if n < 2 * p:
        raise ValueError(f"need at least 2*order = {2 * p} samples, got {n}")
    # column j holds the window x(p-j .. N-1-j) (forward) / x(j .. N-p-1+j) (backward)
    fwd = np.column_stack([arr[p - j: n - j] for j in range(p + 1)])
    bwd = np.column_stack([arr[j: n - p + j] for j in range(p + 1)])
    norm = 2.0 * (n - p)
    cov = np.empty((p + 1, p + 1), dtype=np.float64)
    for j in range(p + 1):
        for k in range(j, p + 1):
            value = (fwd[:, j] @ fwd[:, k] + bwd[:, j] @ bwd[:, k]) / norm
            cov[j, k] = value
            cov[k, j] = value
    return cov


def modcov_fit(x, order: int) -> ArModel:
    """Fit an AR model by minimizing forward plus backward prediction error.

    Solves the (non-Toeplitz) normal equations built from
    :func:`covariance_estimates`.  A noiseless signal modeled with more
    coefficients than it has poles makes the equations rank deficient;
    this is reported as :class:`SingularMatrixError` rather than silently
    regularized.
    """
    cov = covariance_estimates(x, order)
    coeffs = spd_solve(cov[1:, 1:], -cov[1:, 0])
    rho = _check_noise_power(cov[0, 0] + coeffs @ cov[0, 1:], cov[0, 0], "modified_covariance")
    return ArModel(int(order), coeffs, rho, "modified_covariance")


def ar_spectrum(model: ArModel, freqs) -> SpectrumEstimate:
    """Evaluate the AR power spectrum of a fitted model on a grid.

    Values are non-negative whenever the noise power is; a noise power
    that rounded to zero or slightly below is floored at the smallest
    positive double so the spectral shape (set by the denominator) is
    preserved.  Values are capped at ``SPECTRUM_CEILING`` in case the
    denominator underflows at a pole sitting on the unit circle.
    """
    grid = as_frequency_grid(freqs)
    k = np.arange(1, model.order + 1, dtype=np.float64)
    angles = 2.0 * np.pi * np.outer(grid, k)
    re = 1.0 + np.cos(angles) @ model.coeffs
    im = np.sin(angles) @ model.coeffs
    denom = re * re + im * im
    rho = max(model.noise_power, np.finfo(float).tiny)
    with np.errstate(divide="ignore"):
        values = rho / denom
    return SpectrumEstimate(grid, np.minimum(values, SPECTRUM_CEILING), model.method)


def capon_spectrum(acf, dim: int, freqs) -> SpectrumEstimate:
    """Capon (minimum-variance) spectrum from autocorrelation lags.

    Value at f is 1 / (e^H R^{-1} e) with R the dim-by-dim Toeplitz
    autocorrelation matrix and e the steering vector
    (1, exp(-j*w), ..., exp(-j*(dim-1)*w)), w = 2*pi*f.  The steering
    vector is complex, so the positive real spectrum requires the
    conjugate transpose on the left.  R must be positive definite.
    """
    grid = as_frequency_grid(freqs)
    dim = check_order(dim, "dim")
    matrix = toeplitz_from_acf(acf, dim)
    solve = spd_factorize(matrix)
    # Paired real solves for all grid points at once; same arithmetic as
    # hermitian_quadratic_form, batched.
    angles = 2.0 * np.pi * np.outer(np.arange(dim), grid)
    c = np.cos(angles)
    s = np.sin(angles)
    u = solve(c)
    v = solve(s)
    qform = np.sum(c * u + s * v, axis=0)
    residue = np.abs(np.sum(s * u - c * v, axis=0))
    bad = residue > 1e-8 * np.maximum(np.abs(qform), np.finfo(float).tiny)
    if np.any(bad):
        i = int(np.argmax(residue))
        # fall back to the scalar path, which raises with a precise message
        hermitian_quadratic_form(solve, grid[i], dim)
    if np.any(qform <= 0.0):
        raise SingularMatrixError("quadratic form is not positive; matrix is not positive definite")
    return SpectrumEstimate(grid, 1.0 / qform, "capon")
