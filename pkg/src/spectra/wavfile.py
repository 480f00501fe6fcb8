"""Minimal RIFF/WAVE reader and writer for 16-bit PCM.

The reader accepts PCM (format code 1), 16-bit, mono or stereo files;
stereo input is downmixed by averaging the channels.  Unknown chunks are
skipped, and the ``fmt `` chunk must appear before ``data``.  The writer
always emits the canonical 44-byte-header mono layout, so a write/read
round trip of already-quantized samples is bit exact.

Everything operates on byte strings; callers own all file I/O.
"""

import struct
import warnings
from dataclasses import dataclass

import numpy as np

#: integer full scale: stored sample s maps to s / 32768.0
_SCALE = 32768.0

_HEADER = struct.Struct("<4sI4s")
_CHUNK = struct.Struct("<4sI")
_FMT = struct.Struct("<HHIIHH")


class WavError(ValueError):
    """Base class for WAV container failures."""


class MalformedWavError(WavError):
    """Container structure is broken: bad magic, truncation, missing chunks."""


class UnsupportedFormatError(WavError):
    """The file is valid RIFF but not integer PCM mono/stereo."""


class UnsupportedBitDepthError(WavError):
    """PCM data is not 16 bits per sample."""


class ClippedSampleWarning(UserWarning):
    """Samples outside [-1.0, 1.0) were saturated during quantization."""


@dataclass(frozen=True)
class WavAudio:
    """Mono audio at a given sample rate, as normalized float samples.

    Samples read from disk always lie in [-1.0, 1.0); synthesized audio
    may exceed that range, in which case writing saturates (with a
    warning) rather than wrapping.
    """

    sample_rate: int
    samples: np.ndarray

    def __post_init__(self):
        if int(self.sample_rate) < 1:
            raise ValueError(f"sample_rate must be positive, got {self.sample_rate}")
        arr = np.asarray(self.samples, dtype=np.float64)
        if arr.ndim != 1:
            raise ValueError("samples must be one-dimensional (mono)")
        if not np.all(np.isfinite(arr)):
            raise ValueError("samples contain non-finite values")
        arr = arr.copy()
        arr.flags.writeable = False
        object.__setattr__(self, "samples", arr)

    def __len__(self) -> int:
        return self.samples.size


def read_wav(data: bytes) -> WavAudio:
    """Parse a RIFF/WAVE byte string into normalized mono samples.

    Raises
    ------
    MalformedWavError
        Missing or truncated RIFF/WAVE structure, data before fmt, or a
        data payload that is not whole 16-bit frames.
    UnsupportedFormatError
        Format code other than PCM (1), or more than two channels.
    UnsupportedBitDepthError
        Bit depth other than 16.
    """
    if len(data) < 12:
        raise MalformedWavError(f"file too short for a RIFF header ({len(data)} bytes)")
    riff, _, wave_id = _HEADER.unpack_from(data, 0)
    if riff != b"RIFF" or wave_id != b"WAVE":
        raise MalformedWavError("not a RIFF/WAVE container")

    fmt = None
    pos = 12
    while pos + _CHUNK.size <= len(data):
        chunk_id, size = _CHUNK.unpack_from(data, pos)
        pos += _CHUNK.size
        if pos + size > len(data):
            raise MalformedWavError(f"chunk {chunk_id!r} truncated")
        body = data[pos: pos + size]
        pos += size + (size & 1)  # chunks are word aligned

        if chunk_id == b"fmt ":
            if size < _FMT.size:
                raise MalformedWavError("fmt chunk too short")
            fmt = _FMT.unpack_from(body, 0)
        elif chunk_id == b"data":
            if fmt is None:
                raise MalformedWavError("data chunk appears before fmt chunk")
            return _decode_data(fmt, body)

    if fmt is None:
        raise MalformedWavError("missing fmt chunk")
    raise MalformedWavError("missing data chunk")


def _decode_data(fmt, body: bytes) -> WavAudio:
    audio_format, channels, sample_rate, _, _, bits = fmt
    if audio_format != 1:
        raise UnsupportedFormatError(f"only PCM (format 1) is supported, got format {audio_format}")
    if channels not in (1, 2):
        raise UnsupportedFormatError(f"only mono or stereo is supported, got {channels} channels")
    if bits != 16:
        raise UnsupportedBitDepthError(f"only 16-bit samples are supported, got {bits}")
    if sample_rate < 1:
        raise MalformedWavError(f"invalid sample rate {sample_rate}")
    frame = 2 * channels
    if len(body) % frame:
        raise MalformedWavError("data chunk is not a whole number of frames")
    raw = np.frombuffer(body, dtype="<i2").astype(np.float64) / _SCALE
    if channels == 2:
        raw = raw.reshape(-1, 2).mean(axis=1)
    return WavAudio(sample_rate, raw)


def write_wav(audio: WavAudio) -> bytes:
    """Serialize to a canonical 44-byte-header PCM16 mono file.

    Quantization rounds half away from zero and saturates at
    -32768/32767.  Samples outside [-1.0, 1.0) trigger a
    :class:`ClippedSampleWarning` carrying how many were affected.
    """
    samples = audio.samples
    out_of_range = int(np.count_nonzero((samples < -1.0) | (samples >= 1.0)))
    if out_of_range:
        warnings.warn(
            f"{out_of_range} sample(s) outside [-1.0, 1.0) were clamped",
            ClippedSampleWarning,
            stacklevel=2,
        )
    scaled = samples * _SCALE
    quantized = np.where(scaled >= 0.0, np.floor(scaled + 0.5), np.ceil(scaled - 0.5))
    quantized = np.clip(quantized, -32768.0, 32767.0).astype("<i2")

    payload = quantized.tobytes()
    rate = int(audio.sample_rate)
    header = _HEADER.pack(b"RIFF", 36 + len(payload), b"WAVE")
    header += _CHUNK.pack(b"fmt ", 16)
    header += _FMT.pack(1, 1, rate, rate * 2, 2, 16)
    header += _CHUNK.pack(b"data", len(payload))
    return header + payload
