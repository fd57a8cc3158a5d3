"""Command-line interface.

Exit codes: 0 on success, 1 on bad input, 2 when a theorem check fails.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction

from . import serialize
from .analysis import (ChernPair, chern_rank3, conjecture_check, is_uniform, melchior_gap,
                       uniform_chern, verify_all)
from .bergman import csm_cycle
from .corpus import BUILTIN_NAMES, TABLE_ROWS, builtin
from .errors import InvalidInput, MatroidError
from .geography import enumerate_rank3, geography, geography_csv
from .intersection import chern_number, exponent_vectors, validate_exponents
from .lattice import beta, char_poly, rank2_profile
from .matroid import Matroid, members, pg2, uniform

EXIT_OK, EXIT_INPUT, EXIT_VIOLATION = 0, 1, 2


def _add_target(p: argparse.ArgumentParser, required: bool = True):
    g = p.add_mutually_exclusive_group(required=required)
    g.add_argument("--file", metavar="PATH", help="matroid JSON file")
    g.add_argument("--builtin", metavar="NAME", help="one of " + ", ".join(BUILTIN_NAMES))
    g.add_argument("--uniform", nargs=2, type=int, metavar=("R", "N"))
    g.add_argument("--pg2", type=int, metavar="Q")


def _add_output(p: argparse.ArgumentParser, formats=("json",)):
    p.add_argument("--format", choices=formats, default=formats[0])
    p.add_argument("--out", metavar="PATH", help="write output here instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="matroid-chern",
                                     description="Chern numbers of matroids.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="print the JSON encoding of a matroid")
    _add_target(p)
    _add_output(p)

    p = sub.add_parser("invariants", help="flats, characteristic polynomial, beta")
    _add_target(p)
    _add_output(p)

    p = sub.add_parser("csm", help="CSM cycle as a Minkowski weight")
    _add_target(p)
    p.add_argument("--k", type=int, required=True, help="cycle dimension")
    _add_output(p)

    p = sub.add_parser("chern", help="Chern numbers")
    _add_target(p)
    p.add_argument("--engine", action="store_true", help="force the intersection engine")
    p.add_argument("--exponents", metavar="K1,K2,...",
                   help="one exponent vector; default is all of them")
    _add_output(p)

    p = sub.add_parser("verify", help="run the rank-3 theorem checks")
    _add_target(p, required=False)
    p.add_argument("--n", type=int, help="check every simple rank-3 matroid on N points")
    p.add_argument("--conjecture", action="store_true",
                   help="also compare Chern numbers with the uniform matroid")
    p.add_argument("--allow-nine", action="store_true", help="permit n = 9 enumeration")
    _add_output(p)

    p = sub.add_parser("geography", help="achieved (c1^2, c2) pairs of rank-3 matroids")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--coloop-free", action="store_true")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--allow-nine", action="store_true", help="permit n = 9 enumeration")
    _add_output(p, ("csv", "json"))

    p = sub.add_parser("table", help="Chern numbers of the rank-3 reference matroids")
    _add_output(p, ("csv", "json"))
    return parser


def load_target(args) -> Matroid:
    if args.file:
        try:
            return serialize.load(args.file)
        except OSError as exc:
            raise InvalidInput(f"cannot read {args.file}: {exc.strerror}") from exc
    if args.builtin:
        return builtin(args.builtin)
    if args.uniform:
        return uniform(*args.uniform)
    return pg2(args.pg2)


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=False)


def closed_form(M: Matroid, e: tuple) -> int | None:
    """Closed-form Chern number when one applies, else ``None``."""
    if is_uniform(M) and M.is_loopless():
        return uniform_chern(M.rank, M.n, e)
    if M.rank == 3 and M.is_simple():
        pair = chern_rank3(rank2_profile(M))
        return pair.c1sq if e == (2, 0) else pair.c2
    return None


def _cmd_construct(args, out):
    out.write(serialize.dumps(load_target(args)) + "\n")


def _cmd_invariants(args, out):
    M = load_target(args)
    doc = {"n": M.n, "rank": M.rank,
           "flats_per_rank": [len(level) for level in M.flats_by_rank],
           "loops": members(M.loops()), "coloops": members(M.coloops()),
           "simple": M.is_simple()}
    if M.is_loopless():
        doc["char_poly"] = list(char_poly(M).coefficients)
        doc["beta"] = beta(M)
    if M.rank == 3 and M.is_simple():
        p = rank2_profile(M)
        pair = chern_rank3(p)
        doc["line_profile"] = {str(m): t for m, t in p.items()}
        doc["chern"] = {"c1sq": pair.c1sq, "c2": pair.c2}
        doc["melchior_gap"] = melchior_gap(p)
    out.write(_dumps(doc) + "\n")


def _cmd_csm(args, out):
    M = load_target(args)
    out.write(_dumps(csm_cycle(M, args.k).to_json()) + "\n")


def _parse_exponents(text: str) -> tuple:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise InvalidInput(f"exponents must be comma-separated integers, got {text!r}") from None


def _cmd_chern(args, out):
    M = load_target(args)
    d = M.rank - 1
    vectors = ([validate_exponents(d, _parse_exponents(args.exponents))]
               if args.exponents else exponent_vectors(d))
    for e in vectors:
        value = None if args.engine else closed_form(M, tuple(e))
        method = "closed_form"
        if value is None:
            value, method = chern_number(M, e), "intersection"
        out.write(_dumps({"exponents": list(e), "value": value, "method": method}) + "\n")


def _cmd_verify(args, out) -> int:
    if args.n is not None and any((args.file, args.builtin, args.uniform, args.pg2)):
        raise InvalidInput("give either --n or a single matroid, not both")
    if args.n is not None:
        targets = enumerate_rank3(args.n, allow_nine=args.allow_nine)
    elif any((args.file, args.builtin, args.uniform, args.pg2 is not None)):
        targets = [load_target(args)]
    else:
        raise InvalidInput("verify needs --n or a matroid target")
    failed = False
    for M in targets:
        if M.rank != 3 or not M.is_simple():
            raise InvalidInput(f"theorem checks need a simple rank-3 matroid, got {M!r}")
        name = M.label or serialize.dumps(M)
        for report in verify_all(M):
            failed |= not report.holds
            out.write(_dumps({"matroid": name, **report.to_json()}) + "\n")
        if args.conjecture:
            for e in exponent_vectors(2):
                report = conjecture_check(M, e)
                out.write(_dumps({"matroid": name, **report.to_json()}) + "\n")
    return EXIT_VIOLATION if failed else EXIT_OK


def _cmd_geography(args, out):
    records = geography(args.n, coloop_free=args.coloop_free, allow_nine=args.allow_nine,
                        threads=args.threads)
    if args.format == "csv":
        out.write(geography_csv(records))
    else:
        for r in records:
            out.write(_dumps({"n": r.n, "c1sq": r.pair.c1sq, "c2": r.pair.c2,
                              "classes": r.count, "witness": r.witness}) + "\n")


def approx(r: Fraction) -> str:
    """Two-decimal rendering of a nonnegative fraction, rounded half up."""
    hundredths = (r * 200 + 1) // 2
    return f"{hundredths // 100}.{hundredths % 100:02d}"


def table_rows() -> list[tuple[str, ChernPair]]:
    return [(name, chern_rank3(rank2_profile(builtin(key)))) for name, key in TABLE_ROWS]


def _cmd_table(args, out):
    rows = table_rows()
    if args.format == "json":
        for name, pair in rows:
            r = pair.ratio
            out.write(_dumps({"name": name, "c1sq": pair.c1sq, "c2": pair.c2,
                              "ratio": None if r is None else str(r)}) + "\n")
        return
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["name", "c1sq", "c2", "ratio", "approx"])
    for name, pair in rows:
        r = pair.ratio
        writer.writerow([name, pair.c1sq, pair.c2, "-" if r is None else str(r),
                         "-" if r is None else approx(r)])


_COMMANDS = {"construct": _cmd_construct, "invariants": _cmd_invariants, "csm": _cmd_csm,
             "chern": _cmd_chern, "verify": _cmd_verify, "geography": _cmd_geography,
             "table": _cmd_table}


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    out = open(args.out, "w", encoding="utf-8", newline="") if args.out else stdout
    try:
        return _COMMANDS[args.command](args, out) or EXIT_OK
    except MatroidError as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_INPUT
    finally:
        if args.out:
            out.close()


def main():
    sys.exit(run())
