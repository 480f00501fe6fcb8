"""Hidden-tone detection in audio carriers.

The pipeline mirrors a simple additive steganography scheme: a sinusoid is
summed into an audio carrier (see :func:`spectra.signals.embed_sinusoid`),
and the receiver recovers its frequency by running a spectrum estimator
and picking prominent spectral peaks.  Because real audio is correlated,
non-Gaussian "noise" from the estimators' point of view, recovery quality
depends strongly on the estimator and its order.

A deterministic synthetic carrier (seeded smoothed Gaussian noise,
normalized to unit RMS) stands in for recorded audio in tests and
benchmarks; any user-supplied WAV works through :func:`prepare_carrier`.
"""

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np
from scipy.signal import find_peaks

from .estimators import METHOD_ALIASES, make_estimator
from .rng import SplitMix64
from .spectrum import DEFAULT_GRID_SIZE, SpectrumEstimate, frequency_grid
from .validation import as_frequency_grid, as_signal
from .wavfile import WavAudio

#: default spectral-estimator orders for detection, per method tag
DEFAULT_DETECT_ORDERS = {
    "periodogram": None,
    "blackman_tukey": 10,
    "capon": 10,
    "yule_walker": 20,
    "modified_covariance": 10,
}

#: default peak prominence threshold, as a multiple of the median spectrum value
DEFAULT_PROMINENCE = 5.0

#: weights of the smoothing filter shaping the synthetic carrier
CARRIER_SMOOTHER = (0.25, 0.5, 0.25)

DEFAULT_CARRIER_LENGTH = 1000


class Peak(NamedTuple):
    frequency: float
    power: float
    prominence: float


@dataclass(frozen=True)
class PeakReport:
    """Prominent spectral peaks, strongest first.

    ``order_used`` records the estimator size parameter (None for the
    periodogram) so reports are self-describing.
    """

    peaks: tuple[Peak, ...]
    method: str
    order_used: int | None = None

    def frequencies(self) -> tuple[float, ...]:
        return tuple(p.frequency for p in self.peaks)

    def best_near(self, freq: float, tol: float) -> Peak | None:
        """Strongest reported peak within ``tol`` of ``freq``, if any."""
        for peak in self.peaks:  # peaks are sorted by descending power
            if abs(peak.frequency - freq) <= tol:
                return peak
        return None

    def detects(self, freq: float, tol: float = 0.005) -> bool:
        return self.best_near(freq, tol) is not None


def synthetic_carrier(length: int = DEFAULT_CARRIER_LENGTH, seed: int = 0) -> np.ndarray:
    """Deterministic audio-like carrier: smoothed Gaussian noise at unit RMS.

    White Gaussian samples are passed through the 3-tap smoother
    ``CARRIER_SMOOTHER`` (a gentle low-pass, so neighbouring samples are
    correlated like recorded sound) and scaled to unit RMS.
    """
    length = int(length)
    if length < 1:
        raise ValueError("length must be >= 1")
    taps = np.asarray(CARRIER_SMOOTHER)
    white = SplitMix64(seed).normals(length + taps.size - 1)
    smoothed = (
        taps[0] * white[: length]
        + taps[1] * white[1: length + 1]
        + taps[2] * white[2: length + 2]
    )
    return smoothed / np.sqrt(np.mean(smoothed * smoothed))


def prepare_carrier(audio: WavAudio, length: int = DEFAULT_CARRIER_LENGTH) -> np.ndarray:
    """First ``length`` samples of an audio file, as a plain signal."""
    length = int(length)
    if length < 1:
        raise ValueError("length must be >= 1")
    if len(audio) < length:
        raise ValueError(f"carrier has {len(audio)} samples, need {length}")
    return np.asarray(audio.samples[:length], dtype=np.float64)


def find_spectrum_peaks(
    estimate: SpectrumEstimate,
    prominence: float = DEFAULT_PROMINENCE,
    order_used: int | None = None,
) -> PeakReport:
    """Local spectrum maxima whose prominence clears a relative threshold.

    The threshold is ``prominence`` times the median spectrum value, so
    rescaling the spectrum leaves the reported peak set unchanged.  A flat
    spectrum yields an empty report.
    """
    if prominence <= 0:
        raise ValueError("prominence must be positive")
    values = estimate.values
    floor = max(prominence * float(np.median(values)), np.finfo(float).tiny)
    idx, props = find_peaks(values, prominence=floor)
    strongest_first = np.argsort(values[idx], kind="stable")[::-1]
    peaks = tuple(
        Peak(float(estimate.freqs[i]), float(values[i]), float(p))
        for i, p in zip(idx[strongest_first], props["prominences"][strongest_first])
    )
    return PeakReport(peaks, estimate.method, order_used)


def detect_hidden_tone(
    x,
    method: str = "modified_covariance",
    order: int | None = None,
    freqs=None,
    prominence: float = DEFAULT_PROMINENCE,
) -> PeakReport:
    """Estimate the spectrum of ``x`` and report its prominent peaks.

    ``method`` accepts canonical tags or CLI aliases (``modcov``, ``yw``,
    ``bt``).  When ``order`` is omitted the per-method default from
    ``DEFAULT_DETECT_ORDERS`` applies.  Estimator failures (e.g. singular
    autocorrelation matrices) propagate to the caller.
    """
    arr = as_signal(x)
    tag = METHOD_ALIASES.get(method)
    if tag is None:
        raise ValueError(f"unknown method {method!r}")
    if order is None:
        order = DEFAULT_DETECT_ORDERS[tag]
    grid = frequency_grid(DEFAULT_GRID_SIZE) if freqs is None else as_frequency_grid(freqs)
    estimator = make_estimator(tag, order)
    estimate = SpectrumEstimate(grid, estimator.fit(arr).power(grid), tag)
    return find_spectrum_peaks(estimate, prominence, order_used=order)
