"""Shared spectrum value types and the default evaluation grid."""

from dataclasses import dataclass

import numpy as np

from .validation import as_frequency_grid

#: canonical method tags, in the column order used by result emitters
METHODS = (
    "periodogram",
    "blackman_tukey",
    "capon",
    "yule_walker",
    "modified_covariance",
)

DEFAULT_GRID_SIZE = 512


def frequency_grid(count: int = DEFAULT_GRID_SIZE) -> np.ndarray:
    """Uniform grid of ``count`` frequencies covering [0, 0.5).

    Point i sits at 0.5 * i / count cycles/sample.
    """
    count = int(count)
    if count < 1:
        raise ValueError("count must be at least 1")
    return 0.5 * np.arange(count) / count


@dataclass(frozen=True)
class SpectrumEstimate:
    """Power-spectrum values sampled on a frequency grid.

    ``freqs`` and ``values`` are parallel arrays; ``method`` tags which
    estimator produced the values.  Instances are immutable.
    """

    freqs: np.ndarray
    values: np.ndarray
    method: str

    def __post_init__(self):
        freqs = as_frequency_grid(self.freqs)
        values = np.asarray(self.values, dtype=np.float64)
        if values.shape != freqs.shape:
            raise ValueError(
                f"values shape {values.shape} does not match grid shape {freqs.shape}"
            )
        if not np.all(np.isfinite(values)):
            raise ValueError("spectrum values contain non-finite entries")
        if self.method not in METHODS:
            raise ValueError(f"method must be one of {METHODS}, got {self.method!r}")
        freqs = freqs.copy()
        values = values.copy()
        freqs.flags.writeable = False
        values.flags.writeable = False
        object.__setattr__(self, "freqs", freqs)
        object.__setattr__(self, "values", values)

    def __len__(self) -> int:
        return self.freqs.size

    def argmax_frequency(self) -> float:
        """Frequency of the largest spectrum value."""
        return float(self.freqs[int(np.argmax(self.values))])
