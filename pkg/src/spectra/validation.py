"""Input validation helpers shared across the estimator API."""

import numpy as np


def as_signal(x, name: str = "x") -> np.ndarray:
    """Coerce to a finite 1-D float64 sample array of length >= 1."""
    arr = np.asarray(x, dtype=np.float64)
    if arr.ndim != 1:
        raise ValueError(f"{name} must be one-dimensional, got shape {arr.shape}")
    if arr.size == 0:
        raise ValueError(f"{name} must contain at least one sample")
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} contains non-finite samples")
    return arr


def as_frequency_grid(freqs, name: str = "freqs") -> np.ndarray:
    """Coerce to a strictly increasing grid of normalized frequencies.

    Frequencies are in cycles/sample and must lie in [0, 0.5], the
    one-sided range for real-valued signals.
    """
    arr = np.asarray(freqs, dtype=np.float64)
    if arr.ndim != 1 or arr.size == 0:
        raise ValueError(f"{name} must be a non-empty 1-D array")
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} contains non-finite values")
    if np.any(arr < 0.0) or np.any(arr > 0.5):
        raise ValueError(f"{name} must lie within [0, 0.5] cycles/sample")
    if arr.size > 1 and np.any(np.diff(arr) <= 0.0):
        raise ValueError(f"{name} must be strictly increasing")
    return arr


def check_frequency(freq: float, name: str = "freq") -> float:
    """Validate a single normalized frequency in [0, 0.5)."""
    f = float(freq)
    if not np.isfinite(f) or not 0.0 <= f < 0.5:
        raise ValueError(f"{name} must lie in [0, 0.5) cycles/sample, got {freq}")
    return f


def check_order(order: int, name: str = "order") -> int:
    value = int(order)
    if value != order or value < 1:
        raise ValueError(f"{name} must be a positive integer, got {order}")
    return value
