"""Autocorrelation sequences and their Toeplitz matrices.

Only the biased lag estimator (normalization 1/N regardless of lag) is
provided: it keeps the implied Toeplitz matrix positive semidefinite,
which the minimum-variance and autoregressive estimators rely on.  The
unbiased variant can break that property and is intentionally absent.
"""

from dataclasses import dataclass, field

import numpy as np
from scipy.linalg import toeplitz

from .validation import as_signal

#: allowed provenance tags for an :class:`AcfSequence`
ACF_SOURCES = ("estimated", "exact")


@dataclass(frozen=True)
class AcfSequence:
    """Autocorrelation lags r(0..max_lag) of a real-valued sequence.

    Real data makes the autocorrelation even, so negative lags are implied:
    r(-k) = r(k).  ``source`` records whether the lags were estimated from
    samples or evaluated from a closed-form model.
    """

    lags: np.ndarray
    source: str = "estimated"

    def __post_init__(self):
        arr = np.asarray(self.lags, dtype=np.float64)
        if arr.ndim != 1 or arr.size == 0:
            raise ValueError("lags must be a non-empty 1-D array")
        if not np.all(np.isfinite(arr)):
            raise ValueError("lags contain non-finite values")
        if self.source not in ACF_SOURCES:
            raise ValueError(f"source must be one of {ACF_SOURCES}, got {self.source!r}")
        arr = arr.copy()
        arr.flags.writeable = False
        object.__setattr__(self, "lags", arr)

    @property
    def max_lag(self) -> int:
        return self.lags.size - 1

    def __len__(self) -> int:
        return self.lags.size

    def __getitem__(self, k: int) -> float:
        """Lag value honouring evenness: negative k maps to |k|."""
        return float(self.lags[abs(k)])


def biased_acf(x, max_lag: int) -> AcfSequence:
    """Biased autocorrelation estimate of a sample sequence.

    Lag k is (1/N) * sum_{n=0}^{N-1-k} x(n) x(n+k) for k = 0..max_lag.

    Parameters
    ----------
    x : array_like
        Real samples, length N >= 1.
    max_lag : int
        Largest lag to estimate; must satisfy 0 <= max_lag <= N-1.

    Raises
    ------
    ValueError
        If ``max_lag`` is negative or not smaller than the sample count.
    """
    arr = as_signal(x)
    n = arr.size
    max_lag = int(max_lag)
    if max_lag < 0:
        raise ValueError("max_lag must be non-negative")
    if max_lag >= n:
        raise ValueError(f"max_lag must be at most N-1 = {n - 1}, got {max_lag}")
    lags = np.empty(max_lag + 1, dtype=np.float64)
    for k in range(max_lag + 1):
        lags[k] = arr[: n - k] @ arr[k:]
    lags /= n
    return AcfSequence(lags, source="estimated")


def as_acf(acf, name: str = "acf") -> AcfSequence:
    """Accept an :class:`AcfSequence` or a raw lag array."""
    if isinstance(acf, AcfSequence):
        return acf
    return AcfSequence(np.asarray(acf, dtype=np.float64), source="estimated")


def toeplitz_from_acf(acf, dim: int) -> np.ndarray:
    """Symmetric Toeplitz matrix with entry (i, j) = r(|i - j|).

    ``dim`` may not exceed the number of available lags (max_lag + 1).
    """
    seq = as_acf(acf)
    dim = int(dim)
    if dim < 1:
        raise ValueError("dim must be at least 1")
    if dim > seq.max_lag + 1:
        raise ValueError(
            f"dim {dim} exceeds available lags (max_lag {seq.max_lag} gives at most {seq.max_lag + 1})"
        )
    return toeplitz(seq.lags[:dim])
