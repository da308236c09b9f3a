"""Command-line front end.

Subcommands: ``spectrum`` (position/momentum/Hamiltonian eigenvalues),
``wavefunction`` (discrete wave tables), ``fourier`` (transform matrix by
either route), ``verify`` (full invariant suite) and ``limits`` (paraboson
comparison table).

Output is deterministic: identical flags produce byte-identical text.
Floats are printed with 17 significant digits (round-trip safe); complex
values become [re, im] pairs in JSON and paired columns in CSV. Exit codes:
0 success, 1 verification failure, 2 usage error, 3 domain error. The
environment variable SUPEROSC_TOL overrides the default tolerance; an
explicit --tol flag wins over both.
"""

from __future__ import annotations

import argparse
import os
import sys

import numpy as np

from .fourier import fourier_analytic, fourier_spectral
from .oscillator import ModelParams, hamiltonian_matrix, position_spectrum
from .suite import DEFAULT_P_LIST, run_suite
from .wavefunctions import momentum_wavefunction, paraboson_limit_table, position_wavefunction

_DEFAULT_TOL = 1e-10


def _fmt(value: float) -> str:
    return f"{float(value):.17g}"


def _json(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, str):
        return '"' + value.replace("\\", "\\\\").replace('"', '\\"') + '"'
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return _fmt(value)
    if isinstance(value, complex):
        return f"[{_fmt(value.real)},{_fmt(value.imag)}]"
    if isinstance(value, dict):
        return "{" + ",".join(f"{_json(str(k))}:{_json(v)}" for k, v in value.items()) + "}"
    if isinstance(value, (list, tuple, np.ndarray)):
        return "[" + ",".join(_json(v) for v in value) + "]"
    raise TypeError(f"cannot serialize {type(value)!r}")


def _levels(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part != ""]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"invalid level list {text!r}") from exc


def _p_values(text: str) -> tuple[float, ...]:
    try:
        return tuple(float(part) for part in text.split(",") if part != "")
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"invalid p list {text!r}") from exc


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="superosc",
        description="Finite oscillator model: spectra, wave functions, "
                    "Fourier matrix, limits and verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    spectrum = sub.add_parser("spectrum", help="eigenvalue grid of an observable")
    spectrum.add_argument("--j", type=int, required=True)
    spectrum.add_argument("--observable", choices=("q", "p", "H"), default="q")
    _common_output_flags(spectrum)

    wave = sub.add_parser("wavefunction", help="discrete wave-function tables")
    wave.add_argument("--j", type=int, required=True)
    wave.add_argument("--p", type=float, required=True)
    wave.add_argument("--n", type=_levels, default=[0],
                      help="comma-separated level list, e.g. 0,1,2,3")
    wave.add_argument("--kind", choices=("position", "momentum"), default="position")
    _common_output_flags(wave)

    fourier = sub.add_parser("fourier", help="discrete Fourier transform matrix")
    fourier.add_argument("--j", type=int, required=True)
    fourier.add_argument("--p", type=float, required=True)
    fourier.add_argument("--method", choices=("analytic", "spectral"), default="analytic")
    _common_output_flags(fourier)

    verify = sub.add_parser("verify", help="run the full invariant suite")
    verify.add_argument("--j-max", type=int, default=10)
    verify.add_argument("--p-list", type=_p_values, default=DEFAULT_P_LIST)
    verify.add_argument("--tol", type=float, default=None)
    verify.add_argument("--format", choices=("csv", "json"), default="csv")
    verify.add_argument("--output", default=None)

    limits = sub.add_parser("limits", help="paraboson limit comparison table")
    limits.add_argument("--j", type=int, required=True)
    limits.add_argument("--p", type=float, required=True)
    limits.add_argument("--alpha", type=float, required=True)
    limits.add_argument("--n", type=int, default=0,
                        help="even-level index: the table covers level 2n")
    _common_output_flags(limits)

    return parser


def _common_output_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--format", choices=("csv", "json"), default="csv")
    sub.add_argument("--tol", type=float, default=None)
    sub.add_argument("--output", default=None)


def cmd_spectrum(args: argparse.Namespace) -> tuple[int, str]:
    if args.j < 0:
        raise ValueError(f"need j >= 0, got j={args.j}")
    if args.observable == "H":
        values = np.sort(np.diag(hamiltonian_matrix(args.j)))
    else:
        values = position_spectrum(args.j)
    if args.format == "json":
        text = _json({"j": args.j, "observable": args.observable,
                      "values": list(values)}) + "\n"
    else:
        lines = [f"# j={args.j} observable={args.observable}", "value"]
        lines += [_fmt(v) for v in values]
        text = "\n".join(lines) + "\n"
    return 0, text


def _wave_csv(table) -> list[str]:
    complex_amp = np.iscomplexobj(table.amplitudes)
    lines = [f"# j={table.j} p={_fmt(table.p)} n={table.n} kind={table.kind} "
             f"energy={_fmt(table.energy)}"]
    lines.append("grid,amplitude_re,amplitude_im" if complex_amp else "grid,amplitude_re")
    for point, amp in zip(table.grid, table.amplitudes):
        if complex_amp:
            lines.append(f"{_fmt(point)},{_fmt(amp.real)},{_fmt(amp.imag)}")
        else:
            lines.append(f"{_fmt(point)},{_fmt(amp)}")
    return lines


def _wave_json(table) -> dict:
    complex_amp = np.iscomplexobj(table.amplitudes)
    amplitude = [complex(a) for a in table.amplitudes] if complex_amp \
        else [float(a) for a in table.amplitudes]
    return {"j": table.j, "p": table.p, "n": table.n, "kind": table.kind,
            "energy": table.energy, "grid": list(table.grid), "amplitude": amplitude}


def cmd_wavefunction(args: argparse.Namespace) -> tuple[int, str]:
    params = ModelParams(args.j, args.p)
    build = position_wavefunction if args.kind == "position" else momentum_wavefunction
    tables = [build(params, n) for n in args.n]
    if args.format == "json":
        text = _json([_wave_json(t) for t in tables]) + "\n"
    else:
        blocks = ["\n".join(_wave_csv(t)) for t in tables]
        text = "\n\n".join(blocks) + "\n"
    return 0, text


def cmd_fourier(args: argparse.Namespace) -> tuple[int, str]:
    params = ModelParams(args.j, args.p)
    matrix = (fourier_analytic(params) if args.method == "analytic"
              else fourier_spectral(params)).data
    if args.format == "json":
        payload = {"j": args.j, "p": args.p, "method": args.method,
                   "matrix": [[complex(v) for v in row] for row in matrix]}
        text = _json(payload) + "\n"
    else:
        dim = matrix.shape[0]
        lines = [f"# j={args.j} p={_fmt(args.p)} method={args.method}"]
        lines.append(",".join(f"c{c}_re,c{c}_im" for c in range(dim)))
        for row in matrix:
            lines.append(",".join(f"{_fmt(v.real)},{_fmt(v.imag)}" for v in row))
        text = "\n".join(lines) + "\n"
    return 0, text


def cmd_verify(args: argparse.Namespace) -> tuple[int, str]:
    tol = args.tol
    if tol is None:
        tol = float(os.environ.get("SUPEROSC_TOL", _DEFAULT_TOL))
    report = run_suite(j_max=args.j_max, p_list=args.p_list, tol=tol)
    if args.format == "json":
        text = _json(report.to_dict()) + "\n"
    else:
        text = "\n".join(report.lines()) + "\n"
    return (0 if report.passed else 1), text


def cmd_limits(args: argparse.Namespace) -> tuple[int, str]:
    grid_count = min(15, args.j)
    rows = paraboson_limit_table(args.j, args.p, args.alpha, args.n, grid_count)
    if args.format == "json":
        payload = {"j": args.j, "p": args.p, "alpha": args.alpha, "n": args.n,
                   "rows": [list(row) for row in rows]}
        text = _json(payload) + "\n"
    else:
        lines = [f"# j={args.j} p={_fmt(args.p)} alpha={_fmt(args.alpha)} n={args.n}"]
        lines.append("x,discrete,continuum,limit_gap")
        for row in rows:
            lines.append(",".join(_fmt(v) for v in row))
        text = "\n".join(lines) + "\n"
    return 0, text


_COMMANDS = {
    "spectrum": cmd_spectrum,
    "wavefunction": cmd_wavefunction,
    "fourier": cmd_fourier,
    "verify": cmd_verify,
    "limits": cmd_limits,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 0 for --help, 2 for usage errors
        return 0 if exc.code in (0, None) else 2
    try:
        code, text = _COMMANDS[args.command](args)
    except (ValueError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    if args.output:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
