"""Nonparametric spectrum estimators: periodogram and Blackman-Tukey.

Both are cosine transforms of the biased autocorrelation,

    P(f) = w(0) r(0) + 2 * sum_{k=1}^{M} w(k) r(k) cos(2*pi*f*k),

evaluated by direct summation on the requested grid (the even symmetry of
real-signal autocorrelations makes the transform real).  The periodogram
is the unwindowed case with M = N-1 and equals |DFT|^2 / N at every
frequency; Blackman-Tukey trades resolution for variance by truncating
and tapering the lags.
"""

from dataclasses import dataclass

import numpy as np

from .autocorr import AcfSequence, as_acf, biased_acf
from .spectrum import SpectrumEstimate
from .validation import as_frequency_grid, as_signal

WINDOW_KINDS = ("bartlett", "rectangular")


def bartlett_weight(k: int, m: int) -> float:
    """Triangular lag weight: 1 - |k|/m inside the window, 0 outside."""
    if m < 1:
        raise ValueError("m must be at least 1")
    if abs(k) >= m:
        return 0.0
    return 1.0 - abs(k) / m


@dataclass(frozen=True)
class LagWindow:
    """Symmetric lag window applied to autocorrelation lags 0..half_width.

    ``bartlett`` is the triangular taper whose spectral kernel is
    non-negative, keeping the windowed estimate non-negative for any
    input.  ``rectangular`` applies no taper and exists mainly so the
    windowed estimator can be checked against the plain periodogram.
    """

    kind: str = "bartlett"
    half_width: int = 10

    def __post_init__(self):
        if self.kind not in WINDOW_KINDS:
            raise ValueError(f"kind must be one of {WINDOW_KINDS}, got {self.kind!r}")
        if int(self.half_width) < 1:
            raise ValueError("half_width must be at least 1")

    def weights(self) -> np.ndarray:
        """Weights w(0..half_width); the Bartlett edge weight is exactly 0."""
        k = np.arange(self.half_width + 1, dtype=np.float64)
        if self.kind == "bartlett":
            return 1.0 - k / self.half_width
        return np.ones(self.half_width + 1)


def _acf_cosine_transform(lags: np.ndarray, freqs: np.ndarray) -> np.ndarray:
    """Evaluate r(0) + 2*sum r(k) cos(2*pi*f*k) without range validation."""
    values = np.full(freqs.shape, lags[0], dtype=np.float64)
    if lags.size > 1:
        k = np.arange(1, lags.size, dtype=np.float64)
        values += 2.0 * np.cos(2.0 * np.pi * np.outer(freqs, k)) @ lags[1:]
    return values


def periodogram(x, freqs) -> SpectrumEstimate:
    """Periodogram of a sample sequence on the given frequency grid.

    Computed as the cosine transform of the biased autocorrelation at all
    N-1 lags, which equals (1/N) |sum_n x(n) exp(-j*2*pi*f*n)|^2.
    """
    arr = as_signal(x)
    grid = as_frequency_grid(freqs)
    acf = biased_acf(arr, arr.size - 1)
    return SpectrumEstimate(grid, _acf_cosine_transform(acf.lags, grid), "periodogram")


def blackman_tukey_from_acf(acf, window: LagWindow, freqs) -> SpectrumEstimate:
    """Blackman-Tukey estimate evaluated directly from autocorrelation lags.

    Used when the autocorrelation is known exactly rather than estimated
    from samples; requires lags up to the window half-width.
    """
    seq = as_acf(acf)
    grid = as_frequency_grid(freqs)
    m = window.half_width
    if seq.max_lag < m:
        raise ValueError(f"window half_width {m} needs lags 0..{m}, have 0..{seq.max_lag}")
    weighted = window.weights() * seq.lags[: m + 1]
    return SpectrumEstimate(grid, _acf_cosine_transform(weighted, grid), "blackman_tukey")


def blackman_tukey(x, window: LagWindow, freqs) -> SpectrumEstimate:
    """Blackman-Tukey estimate of a sample sequence.

    The biased autocorrelation is estimated to the window half-width M and
    tapered by the window; M must be smaller than the sample count.
    """
    arr = as_signal(x)
    if window.half_width > arr.size - 1:
        raise ValueError(
            f"window half_width {window.half_width} requires at least {window.half_width + 1} samples"
        )
    acf = biased_acf(arr, window.half_width)
    return blackman_tukey_from_acf(acf, window, freqs)
