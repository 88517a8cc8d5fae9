"""Command-line front end.

    cvm build|invert|det|solve|interpolate --in problem.json [--out result]
    cvm bench [--sizes 64,128,256] [--mode single-root] [--out report.txt]

Problem files are JSON::

    {"roots": [{"lambda": -0.5, "multiplicity": 1}, ...],
     "rhs": [...],                  # solve only, n numbers
     "hermite": [[y00, y01], ...]}  # interpolate only, one list per root

Matrices are written as CSV (``,`` separated, no header), vectors one value
per line.  Every number is printed as the shortest decimal string that
parses back to the same double.  Exit status: 0 on success, 2 for parse or
validation errors, 3 for I/O errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from numbers import Integral, Real

import numpy as np

from . import bench
from .hermite import HermiteData, hermite_interpolate
from .poly import RootSpec, SpecError
from .vandermonde import build_cvm, cvm_det, invert_cvm, solve_cvm


EXIT_OK = 0
EXIT_INVALID = 2
EXIT_IO = 3


class InputError(Exception):
    pass


def format_float(x: float) -> str:
    """Shortest round-trip decimal; integral values lose the trailing ``.0``."""
    s = repr(float(x))
    return s[:-2] if s.endswith(".0") else s


def format_matrix(m) -> str:
    return "".join(",".join(format_float(v) for v in row) + "\n" for row in np.asarray(m))


def format_vector(v) -> str:
    return "".join(format_float(x) + "\n" for x in np.asarray(v).ravel())


def _is_number(v) -> bool:
    return isinstance(v, Real) and not isinstance(v, bool)


def parse_problem(text: str) -> dict:
    """Parse and validate a problem file; returns ``spec`` plus optional sections."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"parse error: invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}")
    if not isinstance(doc, dict):
        raise InputError("parse error: top level must be a JSON object")
    if "roots" not in doc:
        raise InputError("missing required field 'roots'")
    roots = doc["roots"]
    if not isinstance(roots, list) or not roots:
        raise InputError("field 'roots' must be a non-empty list")
    pairs = []
    for i, item in enumerate(roots):
        where = f"roots[{i}]"
        if not isinstance(item, dict):
            raise InputError(f"{where} must be an object with 'lambda' and 'multiplicity'")
        for key in ("lambda", "multiplicity"):
            if key not in item:
                raise InputError(f"{where}.{key} is missing")
        lam, mult = item["lambda"], item["multiplicity"]
        if not _is_number(lam):
            raise InputError(f"{where}.lambda must be a number, got {lam!r}")
        if isinstance(mult, bool) or not isinstance(mult, Integral) or mult < 1:
            raise InputError(f"{where}.multiplicity must be a positive integer, got {mult!r}")
        pairs.append((float(lam), int(mult)))
    try:
        spec = RootSpec.from_pairs(pairs)
    except SpecError as exc:
        raise InputError(f"roots: {exc}") from None

    out = {"spec": spec}
    if "rhs" in doc:
        rhs = doc["rhs"]
        if not isinstance(rhs, list) or not all(_is_number(v) for v in rhs):
            raise InputError("field 'rhs' must be a list of numbers")
        if len(rhs) != spec.n:
            raise InputError(f"field 'rhs' has {len(rhs)} entries, expected n = {spec.n}")
        out["rhs"] = [float(v) for v in rhs]
    if "hermite" in doc:
        rows = doc["hermite"]
        if not isinstance(rows, list) or not all(
                isinstance(row, list) and all(_is_number(v) for v in row) for row in rows):
            raise InputError("field 'hermite' must be a list of lists of numbers")
        try:
            out["hermite"] = HermiteData(spec, rows)
        except SpecError as exc:
            raise InputError(f"field 'hermite': {exc}") from None
    return out


def _require(problem: dict, section: str):
    if section not in problem:
        raise InputError(f"missing required section '{section}'")
    return problem[section]


def _cmd_build(p):
    return format_matrix(build_cvm(p["spec"]))


def _cmd_invert(p):
    return format_matrix(invert_cvm(p["spec"]))


def _cmd_det(p):
    return format_float(cvm_det(p["spec"])) + "\n"


def _cmd_solve(p):
    return format_vector(solve_cvm(p["spec"], _require(p, "rhs")))


def _cmd_interpolate(p):
    return format_vector(hermite_interpolate(_require(p, "hermite")))


COMMANDS = {
    "build": _cmd_build,
    "invert": _cmd_invert,
    "det": _cmd_det,
    "solve": _cmd_solve,
    "interpolate": _cmd_interpolate,
}


def _parse_sizes(text: str) -> list[int]:
    try:
        sizes = [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"sizes must be comma-separated integers, got {text!r}")
    if not sizes or any(s < 1 for s in sizes):
        raise argparse.ArgumentTypeError("sizes must be positive")
    return sizes


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cvm", description="Confluent Vandermonde matrices: build, invert, solve, interpolate.")
    parser.add_argument("command", choices=[*COMMANDS, "bench"])
    parser.add_argument("--in", dest="input", metavar="PATH", help="problem JSON file")
    parser.add_argument("--out", dest="output", metavar="PATH", help="output file (default: stdout)")
    parser.add_argument("--sizes", type=_parse_sizes, default=[64, 128, 256],
                        help="bench only: comma-separated sizes (default 64,128,256)")
    parser.add_argument("--mode", choices=bench.MODES, default="single-root",
                        help="bench only: problem family (default single-root)")
    return parser


def _write(path, text: str) -> None:
    if path is None:
        sys.stdout.write(text)
        sys.stdout.flush()
    else:
        with open(path, "w", newline="\n") as fh:
            fh.write(text)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)

    if args.command == "bench":
        text = bench.format_bench(bench.run_bench(args.sizes, args.mode), args.mode)
    else:
        if args.input is None:
            print(f"cvm {args.command}: --in is required", file=sys.stderr)
            return EXIT_INVALID
        try:
            with open(args.input) as fh:
                raw = fh.read()
        except OSError as exc:
            print(f"cvm {args.command}: cannot read {args.input}: {exc.strerror}", file=sys.stderr)
            return EXIT_IO
        try:
            text = COMMANDS[args.command](parse_problem(raw))
        except InputError as exc:
            print(f"cvm {args.command}: {args.input}: {exc}", file=sys.stderr)
            return EXIT_INVALID

    try:
        _write(args.output, text)
    except OSError as exc:
        print(f"cvm {args.command}: cannot write {args.output}: {exc.strerror}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
