"""Spectrum estimation, tone embedding, and hidden-tone detection from the shell.

Subcommands
-----------
synth        synthesize a benchmark signal or a synthetic audio carrier
estimate     run one spectrum estimator over a signal file
embed        add a sinusoid to a carrier (the steganography step)
detect       report prominent spectral peaks (the steganalysis step)
reproduce    run all applicable estimators on a bundled benchmark case
montecarlo   tabulate detection rates over seeded trials of a case

Signals interchange as WAV (16-bit PCM) or one-column CSV of samples, so
every intermediate artifact is inspectable.  Results go to stdout unless
``--out`` is given; diagnostics go to stderr.  Exit codes: 0 success,
1 usage error, 2 data or estimation error.
"""

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import experiments
from .estimators import METHOD_ALIASES, make_estimator
from .linalg import SingularMatrixError
from .signals import embed_sinusoid
from .spectrum import DEFAULT_GRID_SIZE, frequency_grid
from .steg import (
    DEFAULT_CARRIER_LENGTH,
    DEFAULT_PROMINENCE,
    PeakReport,
    detect_hidden_tone,
    prepare_carrier,
    synthetic_carrier,
)
from .wavfile import WavError, read_wav, write_wav, WavAudio

#: sample rate stamped on WAV output when the input carried no rate
DEFAULT_SAMPLE_RATE = 8000

_METHOD_CHOICES = ("periodogram", "bt", "capon", "yw", "modcov")


class UsageError(Exception):
    """Bad flags or flag combinations, detected before any computation."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="spectra", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", metavar="command")

    def add_common(p, grid=True, fmt_default="csv"):
        if grid:
            p.add_argument("--grid", type=int, default=DEFAULT_GRID_SIZE,
                           help=f"frequency grid size (default {DEFAULT_GRID_SIZE})")
        p.add_argument("--format", choices=("csv", "json"), default=fmt_default,
                       help=f"output format (default {fmt_default})")
        p.add_argument("--out", help="output path (default: stdout)")

    p = sub.add_parser("synth", help="synthesize a benchmark signal or carrier")
    p.add_argument("--case", choices=("a1", "a2", "a3"), help="benchmark signal to synthesize")
    p.add_argument("--carrier", choices=("synthetic",), help="synthesize the audio-like carrier instead")
    p.add_argument("--length", type=int, default=DEFAULT_CARRIER_LENGTH,
                   help=f"carrier length in samples (default {DEFAULT_CARRIER_LENGTH})")
    p.add_argument("--seed", type=int, default=0, help="generator seed (default 0)")
    p.add_argument("--out", help="output path (default: stdout)")

    p = sub.add_parser("estimate", help="run one spectrum estimator over a signal")
    p.add_argument("--in", dest="infile", required=True, help="input signal (.wav or one-column .csv)")
    p.add_argument("--method", choices=_METHOD_CHOICES, required=True)
    p.add_argument("--order", type=int, default=10,
                   help="window half-width / matrix dimension / AR order (default 10)")
    add_common(p)

    p = sub.add_parser("embed", help="add a sinusoid to a carrier signal")
    p.add_argument("--in", dest="infile", required=True, help="carrier file (.wav or .csv)")
    p.add_argument("--freq", type=float, required=True, help="tone frequency, cycles/sample")
    p.add_argument("--amp", type=float, default=1.0, help="tone amplitude (default 1.0)")
    p.add_argument("--out", help="output path; .wav keeps WAV, otherwise CSV (default: stdout CSV)")

    p = sub.add_parser("detect", help="report prominent spectral peaks of a signal")
    p.add_argument("--in", dest="infile", required=True, help="input signal (.wav or .csv)")
    p.add_argument("--method", choices=_METHOD_CHOICES, default="modcov",
                   help="estimator (default modcov)")
    p.add_argument("--order", type=int, default=None,
                   help="estimator order (default: 10, or 20 for yw)")
    p.add_argument("--prominence", type=float, default=DEFAULT_PROMINENCE,
                   help=f"peak threshold as a multiple of the median value (default {DEFAULT_PROMINENCE})")
    add_common(p, fmt_default="json")

    p = sub.add_parser("reproduce", help="run all applicable estimators on a bundled case")
    p.add_argument("--case", choices=experiments.CASE_IDS, required=True)
    p.add_argument("--seed", type=int, default=0, help="realization seed (default 0)")
    p.add_argument("--carrier", choices=("synthetic", "file"), default="synthetic",
                   help="carrier source for c-cases (default synthetic)")
    p.add_argument("--in", dest="infile", help="carrier WAV when --carrier file")
    p.add_argument("--prominence", type=float, default=DEFAULT_PROMINENCE)
    add_common(p)

    p = sub.add_parser("montecarlo", help="detection rates over seeded trials of a case")
    p.add_argument("--case", choices=experiments.CASE_IDS, required=True)
    p.add_argument("--trials", type=int, default=100, help="number of trials (default 100)")
    p.add_argument("--seed", type=int, default=0, help="seed of trial 0 (default 0)")
    p.add_argument("--method", choices=_METHOD_CHOICES, action="append",
                   help="restrict to this method (repeatable; default: all applicable)")
    p.add_argument("--carrier", choices=("synthetic", "file"), default="synthetic")
    p.add_argument("--in", dest="infile", help="carrier WAV when --carrier file")
    p.add_argument("--prominence", type=float, default=DEFAULT_PROMINENCE)
    add_common(p)

    return parser


def _read_signal(path: str) -> tuple[np.ndarray, int | None]:
    """Load samples from a WAV or one-column CSV file."""
    data = Path(path).read_bytes()
    if path.lower().endswith(".wav"):
        audio = read_wav(data)
        return np.asarray(audio.samples), audio.sample_rate
    try:
        values = [float(line) for line in data.decode().split() if line.strip()]
    except (UnicodeDecodeError, ValueError) as exc:
        raise ValueError(f"{path}: not a one-column CSV of samples ({exc})") from exc
    if not values:
        raise ValueError(f"{path}: empty signal file")
    return np.asarray(values, dtype=np.float64), None


def _signal_csv(samples: np.ndarray) -> bytes:
    return "".join(f"{float(v)!r}\n" for v in samples).encode()


def _write_output(payload: bytes, out: str | None) -> None:
    if out:
        Path(out).write_bytes(payload)
    else:
        sys.stdout.buffer.write(payload)
        sys.stdout.buffer.flush()


def _peaks_json(report: PeakReport, prominence: float) -> bytes:
    payload = {
        "method": report.method,
        "order": report.order_used,
        "prominence_threshold": prominence,
        "peaks": [
            {"frequency": p.frequency, "power": p.power, "prominence": p.prominence}
            for p in report.peaks
        ],
    }
    return json.dumps(payload, indent=2).encode()


def _peaks_csv(report: PeakReport) -> bytes:
    lines = ["frequency,power,prominence"]
    lines += [f"{p.frequency!r},{p.power!r},{p.prominence!r}" for p in report.peaks]
    return ("\n".join(lines) + "\n").encode()


def _cmd_synth(args) -> bytes:
    if (args.case is None) == (args.carrier is None):
        raise UsageError("synth: exactly one of --case or --carrier is required")
    if args.case is not None:
        case = experiments.benchmark_case(args.case, seed_base=args.seed)
        samples = experiments.realize_case(case, args.seed)
    else:
        samples = synthetic_carrier(args.length, args.seed)
    return _signal_csv(samples)


def _cmd_estimate(args) -> bytes:
    samples, _ = _read_signal(args.infile)
    estimator = make_estimator(args.method, args.order)
    grid = frequency_grid(args.grid)
    values = estimator.fit(samples).power(grid)
    tag = METHOD_ALIASES[args.method]
    if args.format == "json":
        payload = {
            "method": tag,
            "order": None if tag == "periodogram" else args.order,
            "freqs": [float(f) for f in grid],
            "values": [float(v) for v in values],
        }
        return json.dumps(payload, indent=2).encode()
    lines = [f"freq,{tag}"]
    lines += [f"{float(f)!r},{float(v)!r}" for f, v in zip(grid, values)]
    return ("\n".join(lines) + "\n").encode()


def _cmd_embed(args) -> bytes:
    samples, rate = _read_signal(args.infile)
    stego = embed_sinusoid(samples, args.freq, args.amp)
    wav_out = bool(args.out and args.out.lower().endswith(".wav")) or (
        args.out is None and args.infile.lower().endswith(".wav")
    )
    if wav_out:
        return write_wav(WavAudio(rate or DEFAULT_SAMPLE_RATE, stego))
    return _signal_csv(stego)


def _cmd_detect(args) -> bytes:
    samples, _ = _read_signal(args.infile)
    report = detect_hidden_tone(
        samples,
        method=args.method,
        order=args.order,
        freqs=frequency_grid(args.grid),
        prominence=args.prominence,
    )
    if args.format == "csv":
        return _peaks_csv(report)
    return _peaks_json(report, args.prominence)


def _case_carrier(args):
    if args.carrier == "file":
        if not args.infile:
            raise UsageError(f"{args.command}: --carrier file requires --in <path>")
        data = Path(args.infile).read_bytes()
        return prepare_carrier(read_wav(data), experiments.CARRIER_LENGTH)
    if args.infile:
        raise UsageError(f"{args.command}: --in is only valid with --carrier file")
    return None


def _cmd_reproduce(args) -> bytes:
    carrier = _case_carrier(args)
    case = experiments.benchmark_case(args.case, seed_base=args.seed)
    result = experiments.run_case(
        case,
        seed=args.seed,
        carrier=carrier,
        grid_size=args.grid,
        prominence=args.prominence,
    )
    return experiments.emit_results(result, args.format)


def _cmd_montecarlo(args) -> bytes:
    carrier = _case_carrier(args)
    case = experiments.benchmark_case(args.case, seed_base=args.seed)
    methods = tuple(METHOD_ALIASES[m] for m in args.method) if args.method else None
    if methods:
        inapplicable = [m for m in methods if m not in case.methods]
        if inapplicable:
            raise UsageError(
                f"montecarlo: methods {inapplicable} need raw samples and do not apply to case {args.case}"
            )
    if args.trials < 1:
        raise UsageError("montecarlo: --trials must be >= 1")
    result = experiments.monte_carlo(
        case,
        trials=args.trials,
        methods=methods,
        carrier=carrier,
        grid_size=args.grid,
        prominence=args.prominence,
    )
    return experiments.emit_results(result, args.format)


_COMMANDS = {
    "synth": _cmd_synth,
    "estimate": _cmd_estimate,
    "embed": _cmd_embed,
    "detect": _cmd_detect,
    "reproduce": _cmd_reproduce,
    "montecarlo": _cmd_montecarlo,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError("spectra: a subcommand is required (see --help)")
        payload = _COMMANDS[args.command](args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return 1
    except (WavError, SingularMatrixError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _write_output(payload, args.out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
