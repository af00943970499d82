"""Command-line interface: ``zamansky <command> [--in FILE] [--out FILE] ...``.

Input and output documents are JSON. Exit codes: 0 success, 2 malformed
input, 3 precondition violation, 4 quadrature non-convergence.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import io
import json
import math
import os
import sys
from typing import Any

import numpy as np

from . import __version__
from .core import (
    ConvergenceError,
    DomainError,
    FourierCoefficients,
    InputError,
    PeriodicFunction,
    analyze,
)
from .corpus import GENERATORS, corpus_entry
from .diagnostics import (
    DEFAULT_ALPHA_MIN,
    DEFAULT_H_COUNT,
    DEFAULT_H_MAX,
    DEFAULT_H_MIN,
    DEFAULT_TOL_ABS,
    DiagnosticConfig,
    DiagnosticReport,
    classify_convergence,
    disc_algebra_test,
    theorem_a_report,
    zamansky_profile,
)
from .quadrature import MAX_PANELS
from .transforms import conj_spectral, truncated_conjugate_estimate, truncated_conjugate_fast

EXIT_OK = 0
EXIT_MALFORMED = 2
EXIT_PRECONDITION = 3
EXIT_NO_CONVERGENCE = 4

DEFAULT_R_VALUES = (0.0, 0.5, 0.9, 0.99, 0.999)


class _Failure(Exception):
    def __init__(self, code, message, payload=None):
        super().__init__(message)
        self.code = code
        self.payload = payload


# ---------------------------------------------------------------- documents

def _reject_constant(name):
    raise InputError(f"non-finite number {name} in input")


def _number(value, what) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise InputError(f"{what} must be a number, got {value!r}")
    value = float(value)
    if not math.isfinite(value):
        raise InputError(f"{what} must be finite")
    return value


def _numbers(values, what) -> list[float]:
    if not isinstance(values, list):
        raise InputError(f"{what} must be a list of numbers")
    return [_number(v, what) for v in values]


def _integer(value, what) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise InputError(f"{what} must be an integer, got {value!r}")
    return value


def parse_document(doc: Any) -> tuple[PeriodicFunction, str, int]:
    """InputDocument -> (function, kind, harmonics to echo for fourier output)."""
    if not isinstance(doc, dict):
        raise InputError("input document must be a JSON object")
    kind = doc.get("kind")
    if kind == "samples":
        values = _numbers(doc.get("values"), "values")
        n = _integer(doc.get("n", len(values)), "n")
        if n != len(values):
            raise InputError(f"n = {n} but {len(values)} values given")
        return analyze(values), kind, 0
    if kind == "fourier":
        cos = _numbers(doc.get("cos", []), "cos")
        sin = _numbers(doc.get("sin", []), "sin")
        if "cos" in doc and "sin" in doc and len(cos) != len(sin):
            raise InputError("cos and sin must have equal length")
        width = max(len(cos), len(sin))
        cos += [0.0] * (width - len(cos))
        sin += [0.0] * (width - len(sin))
        a0 = _number(doc.get("a0", 0.0), "a0")
        n = doc.get("n")
        if n is not None:
            n = _integer(n, "n")
        f = PeriodicFunction.from_coefficients(FourierCoefficients(a0, cos, sin), n)
        return f, kind, width
    raise InputError("document kind must be 'samples' or 'fourier'")


def samples_document(f: PeriodicFunction) -> dict:
    return {"kind": "samples", "n": f.n, "values": f.samples.tolist()}


def fourier_document(f: PeriodicFunction, width: int | None = None) -> dict:
    c = f.coeffs
    if width is None:
        width = c.degree
    width = min(width, c.m)
    return {
        "kind": "fourier",
        "n": f.n,
        "a0": c.a0,
        "cos": c.cos[:width].tolist(),
        "sin": c.sin[:width].tolist(),
    }


def _same_kind(f: PeriodicFunction, kind: str, width: int) -> dict:
    return samples_document(f) if kind == "samples" else fourier_document(f, width)


def digest(doc: Any) -> str:
    canonical = json.dumps(doc, sort_keys=True, separators=(",", ":"), allow_nan=False)
    return "sha256:" + hashlib.sha256(canonical.encode("utf-8")).hexdigest()


def _header(command: str, doc: Any, parameters: dict) -> dict:
    return {
        "tool": "zamansky",
        "version": __version__,
        "command": command,
        "input_digest": digest(doc),
        "parameters": parameters,
    }


def _diagnostic_fields(report: DiagnosticReport) -> dict:
    return {
        "verdict": report.verdict.value,
        "fitted_decay": {"alpha": report.alpha, "constant": report.constant},
        "profile": [{"h": h, "M": m, "D": d} for h, m, d in report.profile.rows()],
        "notes": list(report.notes),
    }


def _csv(header: list[str], rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([repr(float(v)) for v in row])
    return buf.getvalue()


# ---------------------------------------------------------------- commands

def cmd_conjugate(doc, args):
    f, kind, width = parse_document(doc)
    return _same_kind(conj_spectral(f), kind, width)


def cmd_truncate(doc, args):
    f, kind, width = parse_document(doc)
    if args.method == "fast":
        out = fourier_document(truncated_conjugate_fast(f, args.h), width or None)
        out["h"] = args.h
        return out
    values, errors = [], []
    for x in f.grid.points.tolist():
        try:
            result = truncated_conjugate_estimate(f, x, args.h, args.tol, args.max_panels)
        except ConvergenceError as exc:
            payload = {
                "status": "not-converged",
                "x": x,
                "h": args.h,
                "tol": args.tol,
                "estimate": exc.estimate,
                "error_estimate": exc.error,
            }
            raise _Failure(EXIT_NO_CONVERGENCE, str(exc), payload) from exc
        values.append(result.value)
        errors.append(result.error)
    out = {"kind": "samples", "n": f.n, "values": values, "h": args.h}
    out["quadrature"] = {"tol": args.tol, "max_error_estimate": max(errors), "error_estimates": errors}
    return out


def _zamansky_parameters(args) -> dict:
    return {
        "h_max": args.h_max,
        "h_min": args.h_min,
        "h_count": args.h_count,
        "tol_abs": args.tol_abs,
        "alpha_min": args.alpha_min,
    }


def cmd_zamansky(doc, args):
    f, _, _ = parse_document(doc)
    profile = zamansky_profile(f, args.h_count, args.h_max, args.h_min, threads=args.threads)
    report = classify_convergence(profile, args.tol_abs, args.alpha_min)
    if args.csv:
        return _csv(["h", "M", "D"], profile.rows())
    out = _header("zamansky", doc, _zamansky_parameters(args))
    out.update(_diagnostic_fields(report))
    return out


def cmd_theorem_a(doc, args):
    f, _, _ = parse_document(doc)
    report = theorem_a_report(f, args.r, threads=args.threads)
    if args.csv:
        return _csv(["r", "G", "G1", "G2"], report.rows())
    out = _header("theorem-a", doc, {"r": list(args.r)})
    out["profile"] = [
        {"r": r, "G": g, "G1": g1, "G2": g2, "triangle_ok": bool(ok)}
        for (r, g, g1, g2), ok in zip(report.rows(), report.triangle_ok)
    ]
    return out


def cmd_discalg(doc, args):
    f, _, width = parse_document(doc)
    config = DiagnosticConfig(args.h_count, args.h_max, args.h_min, args.tol_abs, args.alpha_min, args.threads)
    report, extension = disc_algebra_test(f, config)
    if args.csv:
        return _csv(["h", "M", "D"], report.profile.rows())
    out = _header("discalg", doc, _zamansky_parameters(args))
    out.update(_diagnostic_fields(report))
    coefficients = extension.coefficients[: (width or f.coeffs.degree) + 1]
    out["extension"] = {"real": coefficients.real.tolist(), "imag": coefficients.imag.tolist()}
    return out


def cmd_corpus(_doc, args):
    params = {}
    for key in ("seed", "degree", "N", "alpha"):
        value = getattr(args, key)
        if value is not None:
            params[key] = value
    params["n"] = args.n
    try:
        entry = corpus_entry(args.name, **params)
    except TypeError as exc:
        raise InputError(f"bad parameters for {args.name}: {exc}") from exc
    if args.name == "holder_cusp":
        out = samples_document(entry.f)
    else:
        out = fourier_document(entry.f)
    meta = {
        "name": entry.name,
        "params": entry.params,
        "expected_verdict": entry.expected_verdict.value,
        "provenance": entry.provenance,
        "exact_conjugate": None,
    }
    if entry.exact_conjugate is not None:
        meta["exact_conjugate"] = fourier_document(entry.exact_conjugate, entry.f.coeffs.degree)
    out["corpus"] = meta
    return out


# ---------------------------------------------------------------- plumbing

def _add_io(p: argparse.ArgumentParser, with_input: bool = True):
    if with_input:
        p.add_argument("--in", dest="input", default="-", help="input document (default: stdin)")
    p.add_argument("--out", dest="output", default="-", help="output path (default: stdout)")


def _add_threads(p):
    p.add_argument("--threads", type=int, default=os.cpu_count(),
                   help="cap on parallel sweep width (default: available cores)")


def _add_zamansky_flags(p):
    p.add_argument("--h-max", type=float, default=DEFAULT_H_MAX)
    p.add_argument("--h-min", type=float, default=DEFAULT_H_MIN)
    p.add_argument("--h-count", type=int, default=DEFAULT_H_COUNT)
    p.add_argument("--tol-abs", type=float, default=DEFAULT_TOL_ABS)
    p.add_argument("--alpha-min", type=float, default=DEFAULT_ALPHA_MIN)
    p.add_argument("--csv", action="store_true", help="emit profile rows as CSV")
    _add_threads(p)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="zamansky", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("conjugate", help="conjugate function via the Fourier multiplier")
    _add_io(p)
    p.set_defaults(func=cmd_conjugate)

    p = sub.add_parser("truncate", help="truncated conjugate integral at a given h")
    _add_io(p)
    p.add_argument("--h", type=float, required=True)
    p.add_argument("--method", choices=("fast", "quadrature"), default="fast")
    p.add_argument("--tol", type=float, default=1e-10)
    p.add_argument("--max-panels", type=int, default=MAX_PANELS)
    p.set_defaults(func=cmd_truncate)

    p = sub.add_parser("zamansky", help="uniform-convergence profile and verdict")
    _add_io(p)
    _add_zamansky_flags(p)
    p.set_defaults(func=cmd_zamansky)

    p = sub.add_parser("theorem-a", help="gap between Abel conjugate and truncated integral at h = 1 - r")
    _add_io(p)
    p.add_argument("--r", type=float, nargs="+", default=list(DEFAULT_R_VALUES))
    p.add_argument("--csv", action="store_true")
    _add_threads(p)
    p.set_defaults(func=cmd_theorem_a)

    p = sub.add_parser("discalg", help="disc-algebra test with analytic extension")
    _add_io(p)
    _add_zamansky_flags(p)
    p.set_defaults(func=cmd_discalg)

    p = sub.add_parser("corpus", help="emit a corpus entry as an input document")
    _add_io(p, with_input=False)
    p.add_argument("name", choices=sorted(GENERATORS))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int)
    p.add_argument("--degree", type=int)
    p.add_argument("--N", type=int)
    p.add_argument("--alpha", type=float)
    p.set_defaults(func=cmd_corpus, no_input=True)
    return parser


def _read(path: str):
    try:
        text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    try:
        return json.loads(text, parse_constant=_reject_constant)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc}") from exc


def _write(path: str, payload):
    if isinstance(payload, str):
        text = payload
    else:
        text = json.dumps(payload, indent=2, allow_nan=False) + "\n"
    if path == "-":
        sys.stdout.write(text)
        sys.stdout.flush()
    else:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        doc = None if getattr(args, "no_input", False) else _read(args.input)
        payload = args.func(doc, args)
    except _Failure as exc:
        print(f"zamansky: {exc}", file=sys.stderr)
        if exc.payload is not None:
            _write(args.output, exc.payload)
        return exc.code
    except InputError as exc:
        print(f"zamansky: malformed input: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    except DomainError as exc:
        print(f"zamansky: precondition violated: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    _write(args.output, payload)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
