import struct

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spectra import (
    ClippedSampleWarning,
    MalformedWavError,
    UnsupportedBitDepthError,
    UnsupportedFormatError,
    WavAudio,
    read_wav,
    write_wav,
)


def build_wav(samples, rate=8000, channels=1, fmt=1, bits=16, extra_chunk=None, data_first=False):
    """Hand-assembled WAV bytes, independent of the writer under test."""
    payload = b"".join(struct.pack("<h", s) for s in samples)
    fmt_chunk = b"fmt " + struct.pack("<I", 16) + struct.pack(
        "<HHIIHH", fmt, channels, rate, rate * channels * bits // 8, channels * bits // 8, bits
    )
    data_chunk = b"data" + struct.pack("<I", len(payload)) + payload
    chunks = [data_chunk, fmt_chunk] if data_first else [fmt_chunk, data_chunk]
    if extra_chunk is not None and not data_first:
        chunks.insert(1, extra_chunk)
    body = b"".join(chunks)
    return b"RIFF" + struct.pack("<I", 4 + len(body)) + b"WAVE" + body


class TestRead:
    def test_minimal_file_normalization(self):
        audio = read_wav(build_wav([0, -32768]))
        assert audio.sample_rate == 8000
        np.testing.assert_array_equal(audio.samples, [0.0, -1.0])

    def test_full_scale_positive(self):
        audio = read_wav(build_wav([32767]))
        assert audio.samples[0] == pytest.approx(32767 / 32768)

    def test_truncated_header(self):
        with pytest.raises(MalformedWavError):
            read_wav(build_wav([0, 0])[:30])

    def test_wrong_magic(self):
        data = b"RIFX" + build_wav([0])[4:]
        with pytest.raises(MalformedWavError):
            read_wav(data)

    def test_non_pcm_format(self):
        with pytest.raises(UnsupportedFormatError):
            read_wav(build_wav([0], fmt=3))

    def test_unsupported_bit_depth(self):
        with pytest.raises(UnsupportedBitDepthError):
            read_wav(build_wav([0], bits=24))

    def test_too_many_channels(self):
        with pytest.raises(UnsupportedFormatError):
            read_wav(build_wav([0, 0, 0], channels=3))

    def test_stereo_downmix_averages_channels(self):
        # frames: (1000, 3000) and (-2000, 2000)
        audio = read_wav(build_wav([1000, 3000, -2000, 2000], channels=2))
        np.testing.assert_allclose(audio.samples, [2000 / 32768, 0.0])

    def test_unknown_chunks_are_skipped(self):
        junk = b"LIST" + struct.pack("<I", 5) + b"junk!" + b"\x00"  # odd size + pad
        audio = read_wav(build_wav([123], extra_chunk=junk))
        assert audio.samples[0] == pytest.approx(123 / 32768)

    def test_data_before_fmt_rejected(self):
        with pytest.raises(MalformedWavError):
            read_wav(build_wav([0], data_first=True))

    def test_truncated_data_chunk(self):
        data = build_wav([1, 2, 3, 4])
        with pytest.raises(MalformedWavError):
            read_wav(data[:-3])

    def test_ragged_frame_rejected(self):
        good = build_wav([1, 2])
        # shrink payload by one byte but keep the declared size
        with pytest.raises(MalformedWavError):
            read_wav(good[:-1])


class TestWrite:
    def test_zero_maps_to_zero(self):
        data = write_wav(WavAudio(8000, np.array([0.0])))
        assert struct.unpack("<h", data[44:46]) == (0,)

    def test_negative_full_scale(self):
        data = write_wav(WavAudio(8000, np.array([-1.0])))
        assert struct.unpack("<h", data[44:46]) == (-32768,)

    def test_header_is_canonical_44_bytes(self):
        data = write_wav(WavAudio(44100, np.zeros(10)))
        assert len(data) == 44 + 20
        assert data[:4] == b"RIFF" and data[8:12] == b"WAVE"
        assert data[12:16] == b"fmt " and data[36:40] == b"data"
        fmt = struct.unpack("<HHIIHH", data[20:36])
        assert fmt == (1, 1, 44100, 88200, 2, 16)

    def test_round_half_away_from_zero(self):
        samples = np.array([0.5 / 32768, -0.5 / 32768, 1.49 / 32768, -1.49 / 32768])
        data = write_wav(WavAudio(8000, samples))
        stored = struct.unpack("<4h", data[44:])
        assert stored == (1, -1, 1, -1)

    def test_out_of_range_clamps_with_warning_count(self):
        samples = np.array([1.5, -2.0, 0.0, 1.0])
        with pytest.warns(ClippedSampleWarning, match="3 sample"):
            data = write_wav(WavAudio(8000, samples))
        stored = struct.unpack("<4h", data[44:])
        assert stored == (32767, -32768, 0, 32767)

    def test_in_range_saturation_does_not_warn(self):
        import warnings

        with warnings.catch_warnings():
            warnings.simplefilter("error")
            data = write_wav(WavAudio(8000, np.array([32767.6 / 32768])))
        assert struct.unpack("<h", data[44:]) == (32767,)


class TestRoundTrip:
    def test_quantized_round_trip_is_bit_exact(self):
        stored = np.array([-32768, -1, 0, 1, 12345, 32767])
        audio = WavAudio(16000, stored / 32768.0)
        again = read_wav(write_wav(audio))
        assert again.sample_rate == 16000
        assert np.array_equal(again.samples, audio.samples)

    @given(st.lists(st.integers(-32768, 32767), min_size=1, max_size=64))
    @settings(max_examples=60, deadline=None)
    def test_round_trip_property(self, ints):
        samples = np.array(ints, dtype=np.float64) / 32768.0
        again = read_wav(write_wav(WavAudio(8000, samples)))
        assert np.array_equal(again.samples, samples)

    def test_write_read_write_is_stable(self):
        samples = np.linspace(-0.9, 0.9, 33)
        first = write_wav(WavAudio(8000, samples))
        second = write_wav(WavAudio(8000, read_wav(first).samples))
        assert first == second


class TestWavAudio:
    def test_rejects_bad_rate(self):
        with pytest.raises(ValueError):
            WavAudio(0, np.zeros(4))

    def test_rejects_non_finite(self):
        with pytest.raises(ValueError):
            WavAudio(8000, np.array([np.nan]))

    def test_rejects_stereo_array(self):
        with pytest.raises(ValueError):
            WavAudio(8000, np.zeros((4, 2)))
