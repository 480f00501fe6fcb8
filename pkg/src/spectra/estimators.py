"""Scikit-learn style front end for the five power-spectrum estimators.

Each estimator follows the usual conventions: constructor arguments are
stored verbatim, ``fit`` consumes a 1-D sample array and returns ``self``,
fitted state lives in trailing-underscore attributes, and ``get_params`` /
``set_params`` / ``clone`` work through :class:`sklearn.base.BaseEstimator`.
After fitting, ``power(freqs)`` evaluates the spectrum on an arbitrary
grid and ``spectrum(n_freqs)`` returns a tagged :class:`SpectrumEstimate`
on the default uniform grid.

The estimators that only need autocorrelation lags (Blackman-Tukey, Capon,
Yule-Walker) additionally accept a known autocorrelation through
``fit_acf``, which skips the estimation step entirely.

>>> est = ModifiedCovariance(order=4).fit(samples)
>>> est.spectrum().argmax_frequency()
"""

import numpy as np
from sklearn.base import BaseEstimator
from sklearn.exceptions import NotFittedError

from .autocorr import AcfSequence, as_acf, biased_acf
from .nonparametric import LagWindow, blackman_tukey_from_acf, periodogram
from .parametric import ar_spectrum, capon_spectrum, modcov_fit, yule_walker_fit
from .spectrum import DEFAULT_GRID_SIZE, SpectrumEstimate, frequency_grid
from .validation import as_signal


class SpectrumEstimatorBase(BaseEstimator):
    """Common fit/evaluate surface shared by all spectrum estimators."""

    #: canonical tag attached to produced spectra; set by subclasses
    method = ""

    def fit(self, x, y=None):
        raise NotImplementedError

    def power(self, freqs) -> np.ndarray:
        """Spectrum values on an arbitrary grid of frequencies in [0, 0.5]."""
        raise NotImplementedError

    def spectrum(self, n_freqs: int = DEFAULT_GRID_SIZE) -> SpectrumEstimate:
        """Tagged spectrum on the default uniform grid of ``n_freqs`` points."""
        freqs = frequency_grid(n_freqs)
        return SpectrumEstimate(freqs, self.power(freqs), self.method)

    def _check_fitted(self, attribute: str):
        if not hasattr(self, attribute):
            raise NotFittedError(
                f"{type(self).__name__} is not fitted yet; call fit() first"
            )


class Periodogram(SpectrumEstimatorBase):
    """Classical periodogram: squared DFT magnitude over the sample count."""

    method = "periodogram"

    def fit(self, x, y=None):
        self.x_ = as_signal(x)
        return self

    def power(self, freqs) -> np.ndarray:
        self._check_fitted("x_")
        return periodogram(self.x_, freqs).values


class BlackmanTukey(SpectrumEstimatorBase):
    """Lag-windowed autocorrelation transform.

    Parameters
    ----------
    half_width : int
        Largest retained lag M; must be below the sample count when
        fitting from data.
    window : str
        ``"bartlett"`` (default, non-negative spectrum) or ``"rectangular"``.
    """

    method = "blackman_tukey"

    def __init__(self, half_width: int = 10, window: str = "bartlett"):
        self.half_width = half_width
        self.window = window

    def _lag_window(self) -> LagWindow:
        return LagWindow(kind=self.window, half_width=self.half_width)

    def fit(self, x, y=None):
        arr = as_signal(x)
        window = self._lag_window()
        if window.half_width > arr.size - 1:
            raise ValueError(
                f"half_width {window.half_width} requires more than {window.half_width} samples"
            )
        self.acf_ = biased_acf(arr, window.half_width)
        return self

    def fit_acf(self, acf):
        """Use known autocorrelation lags instead of estimating them."""
        seq = as_acf(acf)
        if seq.max_lag < self._lag_window().half_width:
            raise ValueError(f"need lags 0..{self.half_width}, have 0..{seq.max_lag}")
        self.acf_ = seq
        return self

    def power(self, freqs) -> np.ndarray:
        self._check_fitted("acf_")
        return blackman_tukey_from_acf(self.acf_, self._lag_window(), freqs).values


class Capon(SpectrumEstimatorBase):
    """Minimum-variance spectrum through a dim-by-dim autocorrelation matrix."""

    method = "capon"

    def __init__(self, dim: int = 10):
        self.dim = dim

    def fit(self, x, y=None):
        arr = as_signal(x)
        if self.dim > arr.size:
            raise ValueError(f"dim {self.dim} exceeds sample count {arr.size}")
        self.acf_ = biased_acf(arr, self.dim - 1)
        return self

    def fit_acf(self, acf):
        seq = as_acf(acf)
        if seq.max_lag + 1 < self.dim:
            raise ValueError(f"need lags 0..{self.dim - 1}, have 0..{seq.max_lag}")
        self.acf_ = seq
        return self

    def power(self, freqs) -> np.ndarray:
        self._check_fitted("acf_")
        return capon_spectrum(self.acf_, self.dim, freqs).values


class YuleWalker(SpectrumEstimatorBase):
    """Autoregressive spectrum fit from the Toeplitz normal equations."""

    method = "yule_walker"

    def __init__(self, order: int = 10):
        self.order = order

    def fit(self, x, y=None):
        arr = as_signal(x)
        if self.order > arr.size - 1:
            raise ValueError(f"order {self.order} requires more than {self.order} samples")
        return self.fit_acf(biased_acf(arr, self.order))

    def fit_acf(self, acf):
        self.model_ = yule_walker_fit(acf, self.order)
        return self

    def power(self, freqs) -> np.ndarray:
        self._check_fitted("model_")
        return ar_spectrum(self.model_, freqs).values

    @property
    def coeffs_(self) -> np.ndarray:
        self._check_fitted("model_")
        return self.model_.coeffs

    @property
    def noise_power_(self) -> float:
        self._check_fitted("model_")
        return self.model_.noise_power


class ModifiedCovariance(SpectrumEstimatorBase):
    """Autoregressive spectrum minimizing forward+backward prediction error.

    Needs the raw samples (there is no autocorrelation-only path) and at
    least ``2 * order`` of them.
    """

    method = "modified_covariance"

    def __init__(self, order: int = 10):
        self.order = order

    def fit(self, x, y=None):
        self.model_ = modcov_fit(as_signal(x), self.order)
        return self

    def power(self, freqs) -> np.ndarray:
        self._check_fitted("model_")
        return ar_spectrum(self.model_, freqs).values

    @property
    def coeffs_(self) -> np.ndarray:
        self._check_fitted("model_")
        return self.model_.coeffs

    @property
    def noise_power_(self) -> float:
        self._check_fitted("model_")
        return self.model_.noise_power


#: short and long command-line aliases for each estimator class
METHOD_ALIASES = {
    "periodogram": "periodogram",
    "bt": "blackman_tukey",
    "blackman_tukey": "blackman_tukey",
    "capon": "capon",
    "yw": "yule_walker",
    "yule_walker": "yule_walker",
    "modcov": "modified_covariance",
    "modified_covariance": "modified_covariance",
}


def make_estimator(method: str, order: int | None = None) -> SpectrumEstimatorBase:
    """Instantiate an estimator from a method tag or CLI alias.

    ``order`` maps onto whichever size parameter the method uses (window
    half-width, matrix dimension, or AR order) and is ignored by the
    periodogram.
    """
    try:
        tag = METHOD_ALIASES[method]
    except KeyError:
        raise ValueError(f"unknown method {method!r}; choose from {sorted(METHOD_ALIASES)}") from None
    if tag == "periodogram":
        return Periodogram()
    if order is None:
        raise ValueError(f"method {method!r} requires an order")
    if tag == "blackman_tukey":
        return BlackmanTukey(half_width=order)
    if tag == "capon":
        return Capon(dim=order)
    if tag == "yule_walker":
        return YuleWalker(order=order)
    return ModifiedCovariance(order=order)
