"""Command-line front end.

Exit codes: 0 ok, 1 verification mismatch, 2 usage or parse error,
3 enumeration budget exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .budget import DEFAULT_CODEWORD_CAP, DEFAULT_GROUP_CAP, DEFAULT_SUBSPACE_CAP, BudgetExceeded
from .codes import analyze
from .constructions import GALLERY_ALIASES, ParameterError, gallery
from .field import FieldError, field_from_order
from .invariants import generalized_weights_oracle, rank_distribution_oracle, rho_c, rho_r
from .serialize import CodeFormatError, dumps_code, invariants_to_json, load_code, rank_value_to_json, subspace_from_json
from .verification import CHECKERS, MISMATCH, THEOREM_ALIASES, VerificationJob, run_job

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3

# positional parameter order after the field size, per gallery code
GALLERY_POSITIONALS = {
    "block": ("n", "m", "s", "h", "k"),
    "two-row": ("n", "m", "alpha", "rho", "k"),
    "dually-qoac-form": ("n", "m", "alpha", "rho"),
    "zero-diagonal": ("n", "m", "alpha", "rho"),
    "linked-diagonal": (),
}


class UsageError(Exception):
    pass


def _emit(text: str, out: str | None):
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w") as fh:
            fh.write(text)


def _add_caps(p):
    p.add_argument("--cap-codewords", type=int, default=DEFAULT_CODEWORD_CAP,
                   help="max codewords enumerated per code (default %(default)s)")
    p.add_argument("--cap-subspaces", type=int, default=DEFAULT_SUBSPACE_CAP,
                   help="max subspaces enumerated (default %(default)s)")
    p.add_argument("--cap-group", type=int, default=DEFAULT_GROUP_CAP,
                   help="max isometry group order searched (default %(default)s)")


def _add_sweep(p):
    p.add_argument("--q", type=int, nargs="+", default=[2], help="field sizes (default 2)")
    p.add_argument("--n-min", type=int, default=1)
    p.add_argument("--n-max", type=int, default=3)
    p.add_argument("--m-min", type=int, default=1)
    p.add_argument("--m-max", type=int, default=3)
    p.add_argument("--dim", type=int, nargs="+", help="code dimensions (census only; default all non-multiples of m)")
    p.add_argument("--threads", type=int, default=1, help="worker threads (default 1)")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--seed", type=int, default=0, help="seed for --axiom-mode sampled")
    p.add_argument("--axiom-mode", choices=("exhaustive", "sampled"), default="exhaustive")
    p.add_argument("--samples", type=int, default=2000, help="pairs drawn in sampled axiom mode")
    p.add_argument("--out", help="write the table here instead of stdout")
    _add_caps(p)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rankmetric", description="Rank-metric codes over small finite fields.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="invariants of a code file")
    p.add_argument("path")
    p.add_argument("--rho-c", action="append", default=[], metavar="JSON",
                   help="basis of a subspace of F_q^n, e.g. '[[1,0]]'; repeatable")
    p.add_argument("--rho-r", action="append", default=[], metavar="JSON",
                   help="basis of a subspace of F_q^m; repeatable")
    p.add_argument("--out")
    _add_caps(p)

    theorems = sorted(CHECKERS) + sorted(THEOREM_ALIASES)
    p = sub.add_parser("verify", help="compare closed forms with oracles over a parameter sweep")
    p.add_argument("theorem", choices=theorems)
    _add_sweep(p)

    p = sub.add_parser("census", help="same as: verify thm2.5-audit")
    _add_sweep(p)

    names = sorted(GALLERY_POSITIONALS) + sorted(GALLERY_ALIASES)
    p = sub.add_parser("gallery", help="write a named code as JSON",
                       description="Positional parameters: q n m s h k for block/cshk; "
                                   "q n m alpha rho k for two-row; q n m alpha rho for zero-diagonal; "
                                   "FORM [q n m alpha rho] for dually-qoac-form. Flags override.")
    p.add_argument("name", choices=names)
    p.add_argument("params", nargs="*")
    for flag in ("q", "n", "m", "s", "h", "k", "alpha", "rho"):
        p.add_argument(f"--{flag}", type=int)
    p.add_argument("--out")
    return parser


# -- analyze --------------------------------------------------------------------------------

def _parse_basis(F, ambient, text):
    try:
        rows = json.loads(text)
        if not isinstance(rows, list) or any(len(r) != ambient for r in rows):
            raise ValueError(f"expected a list of length-{ambient} vectors")
        if any(not 0 <= int(x) < F.q for r in rows for x in r):
            raise ValueError("entries must lie in 0..q-1")
        return subspace_from_json(F, ambient, rows)
    except (ValueError, TypeError) as exc:
        raise UsageError(f"bad subspace {text!r}: {exc}") from exc


def cmd_analyze(args) -> int:
    C = load_code(args.path)
    F = C.field
    Js = [_parse_basis(F, C.n, t) for t in args.rho_c]
    Ks = [_parse_basis(F, C.m, t) for t in args.rho_r]
    report = analyze(C, args.cap_codewords).to_json()
    report.update(invariants_to_json(
        weights=generalized_weights_oracle(C, args.cap_subspaces),
        rank_distribution=rank_distribution_oracle(C, args.cap_codewords)))
    report["rho_c"] = [{"basis": [list(v) for v in J.basis], "value": rank_value_to_json(rho_c(C, J))} for J in Js]
    report["rho_r"] = [{"basis": [list(v) for v in K.basis], "value": rank_value_to_json(rho_r(C, K))} for K in Ks]
    _emit(json.dumps(report, indent=1) + "\n", args.out)
    return EXIT_OK


# -- verify / census ------------------------------------------------------------------------

def _job(args, theorem) -> VerificationJob:
    try:
        return VerificationJob(theorem, tuple(args.q), (args.n_min, args.n_max), (args.m_min, args.m_max),
                               tuple(args.dim) if args.dim else None, args.cap_codewords, args.cap_subspaces,
                               args.cap_group, args.seed, args.axiom_mode, args.samples)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def format_rows(rows, fmt: str) -> str:
    if fmt == "json":
        return json.dumps([r.to_json() for r in rows], indent=1) + "\n"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["theorem", "point", "expected", "observed", "status"])
    for r in rows:
        w.writerow([r.theorem, json.dumps(r.point, sort_keys=True), r.expected, r.observed, r.status])
    return buf.getvalue()


def cmd_verify(args, theorem=None) -> int:
    job = _job(args, theorem or args.theorem)
    for q in job.qs:
        try:
            field_from_order(q)
        except FieldError as exc:
            raise UsageError(str(exc)) from exc
    rows = run_job(job, threads=max(1, args.threads))
    _emit(format_rows(rows, args.format), args.out)
    return EXIT_MISMATCH if any(r.status == MISMATCH for r in rows) else EXIT_OK


# -- gallery -------------------------------------------------------------------------------

def _int(text):
    try:
        return int(text)
    except ValueError:
        raise UsageError(f"expected an integer, got {text!r}") from None


def cmd_gallery(args) -> int:
    name = GALLERY_ALIASES.get(args.name, args.name)
    params = {}
    values = list(args.params)
    if name == "dually-qoac-form":
        if not values:
            raise UsageError("dually-qoac-form needs the form letter (a, b, c or d)")
        params["form"] = values.pop(0)
    names = ("q",) + GALLERY_POSITIONALS[name] if name != "linked-diagonal" else ()
    if len(values) > len(names):
        raise UsageError(f"{args.name} takes at most {len(names)} positional parameters {list(names)}")
    params.update({key: _int(v) for key, v in zip(names, values)})
    for flag in ("q", "n", "m", "s", "h", "k", "alpha", "rho"):
        if getattr(args, flag) is not None:
            params[flag] = getattr(args, flag)
    q = params.pop("q", 2)
    try:
        F = field_from_order(q)
        C = gallery(name, F, **params)
    except (ParameterError, FieldError, TypeError) as exc:
        raise UsageError(str(exc)) from exc
    _emit(dumps_code(C), args.out)
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        if args.command == "analyze":
            return cmd_analyze(args)
        if args.command == "verify":
            return cmd_verify(args)
        if args.command == "census":
            return cmd_verify(args, "thm2.5-audit")
        return cmd_gallery(args)
    except (UsageError, CodeFormatError, FieldError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
