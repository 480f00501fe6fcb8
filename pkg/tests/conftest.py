import numpy as np
import pytest

from spectra import SinusoidSpec, frequency_grid, synth_sinusoids


@pytest.fixture
def grid():
    return frequency_grid(512)


@pytest.fixture
def two_tone_signal():
    """Noisy two-tone benchmark signal (0.2 / 0.25, N=128)."""
    return synth_sinusoids(SinusoidSpec(1.0, 1.0, 0.2, 0.25, 1e-3, 128, seed=42))


def dft_power(x: np.ndarray, freq: float) -> float:
    """Brute-force |sum x(n) exp(-j2pi f n)|^2 / N, the periodogram oracle."""
    n = np.arange(x.size)
    transform = np.sum(x * np.exp(-2j * np.pi * freq * n))
    return float((transform * transform.conjugate()).real / x.size)
