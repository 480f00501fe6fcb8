"""Power-spectrum estimation with an audio hidden-tone detection pipeline.

Five estimators behind one fit/evaluate API: the periodogram and
Blackman-Tukey nonparametric transforms, Capon's minimum-variance filter
bank, and the Yule-Walker and modified-covariance autoregressive fits.
Alongside the estimators: deterministic signal synthesis, 16-bit WAV I/O,
spectral peak detection, and a benchmark harness with Monte-Carlo
detection-rate tables.
"""

from .autocorr import AcfSequence, biased_acf, toeplitz_from_acf
from .estimators import (
    BlackmanTukey,
    Capon,
    METHOD_ALIASES,
    ModifiedCovariance,
    Periodogram,
    SpectrumEstimatorBase,
    YuleWalker,
    make_estimator,
)
from .experiments import (
    CASE_IDS,
    CaseResult,
    DETECTION_TOL,
    ExperimentCase,
    MonteCarloResult,
    benchmark_case,
    emit_results,
    monte_carlo,
    realize_case,
    run_case,
)
from .linalg import SingularMatrixError, hermitian_quadratic_form, levinson_solve, spd_factorize, spd_solve
from .nonparametric import LagWindow, bartlett_weight, blackman_tukey, blackman_tukey_from_acf, periodogram
from .parametric import (
    ArModel,
    ar_spectrum,
    capon_spectrum,
    covariance_estimates,
    modcov_fit,
    yule_walker_fit,
)
from .rng import SplitMix64
from .signals import (
    ExactAcfSpec,
    SinusoidSpec,
    embed_sinusoid,
    exact_acf,
    gaussian_noise,
    synth_sinusoids,
)
from .spectrum import DEFAULT_GRID_SIZE, METHODS, SpectrumEstimate, frequency_grid
from .steg import (
    DEFAULT_DETECT_ORDERS,
    DEFAULT_PROMINENCE,
    Peak,
    PeakReport,
    detect_hidden_tone,
    find_spectrum_peaks,
    prepare_carrier,
    synthetic_carrier,
)
from .wavfile import (
    ClippedSampleWarning,
    MalformedWavError,
    UnsupportedBitDepthError,
    UnsupportedFormatError,
    WavAudio,
    WavError,
    read_wav,
    write_wav,
)

__version__ = "0.1.0"

__all__ = [
    "AcfSequence",
    "ArModel",
    "BlackmanTukey",
    "CASE_IDS",
    "Capon",
    "CaseResult",
    "ClippedSampleWarning",
    "DEFAULT_DETECT_ORDERS",
    "DEFAULT_GRID_SIZE",
    "DEFAULT_PROMINENCE",
    "DETECTION_TOL",
    "ExactAcfSpec",
    "ExperimentCase",
    "LagWindow",
    "METHODS",
    "METHOD_ALIASES",
    "MalformedWavError",
    "ModifiedCovariance",
    "MonteCarloResult",
    "Peak",
    "PeakReport",
    "Periodogram",
    "SingularMatrixError",
    "SinusoidSpec",
    "SpectrumEstimate",
    "SpectrumEstimatorBase",
    "SplitMix64",
    "UnsupportedBitDepthError",
    "UnsupportedFormatError",
    "WavAudio",
    "WavError",
    "YuleWalker",
    "ar_spectrum",
    "bartlett_weight",
    "benchmark_case",
    "biased_acf",
    "blackman_tukey",
    "blackman_tukey_from_acf",
    "capon_spectrum",
    "covariance_estimates",
    "detect_hidden_tone",
    "embed_sinusoid",
    "emit_results",
    "exact_acf",
    "find_spectrum_peaks",
    "frequency_grid",
    "gaussian_noise",
    "hermitian_quadratic_form",
    "levinson_solve",
    "make_estimator",
    "modcov_fit",
    "monte_carlo",
    "periodogram",
    "prepare_carrier",
    "read_wav",
    "realize_case",
    "run_case",
    "spd_factorize",
    "spd_solve",
    "synth_sinusoids",
    "synthetic_carrier",
    "toeplitz_from_acf",
    "write_wav",
    "yule_walker_fit",
]
