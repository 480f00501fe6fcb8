"""Test-signal synthesis: sinusoids in noise, exact autocorrelations, tone embedding.

All frequencies are normalized (cycles/sample) and restricted to [0, 0.5),
the alias-free range for real signals.  A tone written as cos(0.4*pi*n) in
angular units therefore has normalized frequency 0.2.

Every generator is a pure function of its arguments: the same spec and
seed reproduce the same samples bit for bit.
"""

from dataclasses import dataclass

import numpy as np

from .autocorr import AcfSequence
from .rng import SplitMix64
from .validation import as_signal, check_frequency


@dataclass(frozen=True)
class SinusoidSpec:
    """Parameters of a two-tone test signal with additive white Gaussian noise.

    The synthesized samples are

        x(n) = amp_a * cos(2*pi*freq1*n) + amp_b * cos(2*pi*freq2*n) + w(n)

    for n = 0..length-1, where w is zero-mean Gaussian noise of variance
    ``noise_var`` drawn from the seeded deterministic generator.
    """

    amp_a: float
    amp_b: float
    freq1: float
    freq2: float
    noise_var: float = 0.0
    length: int = 128
    seed: int = 0

    def __post_init__(self):
        for name in ("amp_a", "amp_b", "freq1", "freq2", "noise_var"):
            value = getattr(self, name)
            if not np.isfinite(value):
                raise ValueError(f"{name} must be finite, got {value}")
        check_frequency(self.freq1, "freq1")
        check_frequency(self.freq2, "freq2")
        if self.noise_var < 0:
            raise ValueError(f"noise_var must be >= 0, got {self.noise_var}")
        if int(self.length) < 1:
            raise ValueError(f"length must be >= 1, got {self.length}")


@dataclass(frozen=True)
class ExactAcfSpec:
    """Closed-form autocorrelation of two sinusoids in unit white noise.

    Lag k evaluates to

        R(k) = amp_a * cos(2*pi*freq1*k) + amp_b * cos(2*pi*freq2*k) + [k == 0]

    so the lag-0 value is amp_a + amp_b + 1 (the unit impulse models white
    noise of variance exactly 1).
    """

    amp_a: float
    amp_b: float
    freq1: float
    freq2: float
    max_lag: int

    def __post_init__(self):
        for name in ("amp_a", "amp_b", "freq1", "freq2"):
            if not np.isfinite(getattr(self, name)):
                raise ValueError(f"{name} must be finite")
        check_frequency(self.freq1, "freq1")
        check_frequency(self.freq2, "freq2")
        if int(self.max_lag) < 0:
            raise ValueError(f"max_lag must be >= 0, got {self.max_lag}")


def gaussian_noise(var: float, length: int, seed: int) -> np.ndarray:
    """Zero-mean i.i.d. Gaussian samples of the given variance.

    Deterministic per seed; ``var == 0`` yields exact zeros without
    consuming the generator.
    """
    if not np.isfinite(var) or var < 0:
        raise ValueError(f"var must be finite and >= 0, got {var}")
    length = int(length)
    if length < 1:
        raise ValueError(f"length must be >= 1, got {length}")
    if var == 0.0:
        return np.zeros(length, dtype=np.float64)
    return np.sqrt(var) * SplitMix64(seed).normals(length)


def synth_sinusoids(spec: SinusoidSpec) -> np.ndarray:
    """Synthesize the two-tone-plus-noise signal described by ``spec``."""
    n = np.arange(int(spec.length), dtype=np.float64)
    x = spec.amp_a * np.cos(2.0 * np.pi * spec.freq1 * n)
    x += spec.amp_b * np.cos(2.0 * np.pi * spec.freq2 * n)
    if spec.noise_var > 0.0:
        x += gaussian_noise(spec.noise_var, spec.length, spec.seed)
    return x


def exact_acf(spec: ExactAcfSpec) -> AcfSequence:
    """Evaluate the closed-form autocorrelation at lags 0..max_lag."""
    k = np.arange(int(spec.max_lag) + 1, dtype=np.float64)
    lags = spec.amp_a * np.cos(2.0 * np.pi * spec.freq1 * k)
    lags += spec.amp_b * np.cos(2.0 * np.pi * spec.freq2 * k)
    lags[0] += 1.0
    return AcfSequence(lags, source="exact")


def embed_sinusoid(carrier, freq: float, amp: float = 1.0) -> np.ndarray:
    """Add a cosine of the given normalized frequency onto a carrier signal.

    Sample n of the output equals carrier(n) + amp * cos(2*pi*freq*n); the
    carrier itself is not modified.  Embedding with ``-amp`` undoes the
    embedding up to rounding.
    """
    base = as_signal(carrier, "carrier")
    check_frequency(freq)
    if not np.isfinite(amp):
        raise ValueError("amp must be finite")
    n = np.arange(base.size, dtype=np.float64)
    return base + amp * np.cos(2.0 * np.pi * freq * n)
