"""Command-line front end.

Exit status: 0 success, 1 domain error (invalid set, pencil not definite,
no closed form), 2 usage error, 3 a checked statement failed.
"""

from __future__ import annotations

import argparse
import contextlib
import csv
import io
import json
import sys
from fractions import Fraction
from typing import Iterable

from .conjecture import default_jobs, members, scan_minus_one
from .errors import GPencilError, VerificationFailure
from .exactdet import DEFAULT_NUM_PRIMES, pencil_charpoly, poly_eval_integer, poly_eval_surd, root_multiplicity
from .interlace import SOLVER_SLACK, check_interlacing
from .pencilsolve import generalized_eigenvalues, lcmgcd_small_closed_form, maxmin_closed_form
from .setmatrix import (
    SetKind,
    SetSpec,
    build_gcd_matrix,
    build_lcm_matrix,
    build_max_matrix,
    build_min_matrix,
)

PENCILS = ("lcm-gcd", "max-min")


class UsageError(Exception):
    pass


def parse_number(text: str):
    text = text.strip()
    try:
        return int(text)
    except ValueError:
        pass
    try:
        return Fraction(text) if "/" in text else float(text)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"cannot read {text!r} as a number")


def parse_set(args) -> SetSpec:
    if args.range:
        lo, sep, hi = args.range.partition("..")
        if not sep:
            raise UsageError(f"--range expects a..b, got {args.range!r}")
        try:
            first, last = int(lo), int(hi)
        except ValueError:
            raise UsageError(f"--range bounds must be integers, got {args.range!r}")
        return SetSpec.range(first, last)
    values = [parse_number(v) for v in args.set.split(",") if v.strip()]
    if all(isinstance(v, int) for v in values):
        return SetSpec.integers(values)
    return SetSpec.reals(values)


def pencil_matrices(S: SetSpec, pencil: str):
    if pencil == "max-min":
        return build_max_matrix(S), build_min_matrix(S)
    return build_lcm_matrix(S), build_gcd_matrix(S)


def _jsonable(x):
    if isinstance(x, Fraction):
        return str(x)
    return x


def _matrix_payload(X):
    return [[_jsonable(v) for v in row] for row in X.rows]


class Emitter:
    """Writes one OutputRecord per call in the selected format."""

    def __init__(self, fmt: str, out):
        self.fmt = fmt
        self.out = out
        self._csv_header = None

    def emit(self, command: str, inputs: dict, payload: dict, text: str, rows: Iterable[dict] = (),
             digits=None):
        if self.fmt == "json":
            rec = {"command": command, "inputs": inputs, "payload": payload,
                   "precision": "exact" if digits is None else {"digits": digits}}
            self.out.write(json.dumps(rec) + "\n")
        elif self.fmt == "csv":
            rows = list(rows)
            if not rows:
                return
            buf = io.StringIO()
            writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
            if self._csv_header != list(rows[0]):
                writer.writeheader()
                self._csv_header = list(rows[0])
            writer.writerows(rows)
            self.out.write(buf.getvalue())
        else:
            self.out.write(text.rstrip("\n") + "\n")


def _set_inputs(args, S: SetSpec) -> dict:
    return {"set": [_jsonable(x) for x in S.elements], "pencil": getattr(args, "pencil", None)}


def cmd_build(args, em: Emitter) -> int:
    S = parse_set(args)
    mats = {"M": build_max_matrix(S), "N": build_min_matrix(S)}
    if S.kind is SetKind.INTEGER:
        mats["L"] = build_lcm_matrix(S)
        mats["G"] = build_gcd_matrix(S)
    payload = {name: _matrix_payload(X) for name, X in mats.items()}
    text = "\n\n".join(f"{name} =\n" + "\n".join(" ".join(f"{str(v):>8}" for v in row) for row in X.rows)
                       for name, X in mats.items())
    rows = [{"matrix": name, "i": i + 1, "j": j + 1, "value": _jsonable(v)}
            for name, X in mats.items() for i, r in enumerate(X.rows) for j, v in enumerate(r)]
    em.emit("build", {"set": [_jsonable(x) for x in S.elements]}, payload, text, rows)
    return 0


def cmd_charpoly(args, em: Emitter) -> int:
    S = parse_set(args)
    p = pencil_charpoly(*pencil_matrices(S, args.pencil))
    payload = {"coefficients": list(p.coeffs), "degree": p.degree, "polynomial": str(p)}
    text = f"det(A - x B) = {p}\ncoefficients (ascending): {list(p.coeffs)}"
    rows = [{"power": k, "coefficient": c} for k, c in enumerate(p.coeffs)]
    em.emit("charpoly", _set_inputs(args, S), payload, text, rows)
    return 0


def cmd_eig(args, em: Emitter) -> int:
    S = parse_set(args)
    if args.closed_form:
        spec = maxmin_closed_form(S) if args.pencil == "max-min" else lcmgcd_small_closed_form(S)
        method = "closed-form"
    else:
        spec = generalized_eigenvalues(*pencil_matrices(S, args.pencil))
        method = "jacobi"
    d = args.digits
    shown = [f"{v:.{d}f}" for v in spec.values]
    payload = {"values": list(spec.values), "method": method}
    rows = [{"index": k + 1, "value": f"{v:.{d}f}"} for k, v in enumerate(spec.values)]
    em.emit("eig", _set_inputs(args, S), payload, ", ".join(shown), rows, digits=d)
    return 0


def cmd_multiplicity(args, em: Emitter) -> int:
    S = parse_set(args)
    p = pencil_charpoly(*pencil_matrices(S, args.pencil))
    k = root_multiplicity(p, args.at)
    payload = {"root": args.at, "multiplicity": k, "value": poly_eval_integer(p, args.at)}
    em.emit("multiplicity", _set_inputs(args, S), payload,
            f"multiplicity of {args.at}: {k}", [payload])
    return 0


def cmd_surd_eval(args, em: Emitter) -> int:
    S = parse_set(args)
    p = pencil_charpoly(*pencil_matrices(S, args.pencil))
    v = poly_eval_surd(p, args.radicand)
    payload = {"radicand": v.radicand, "rational": v.rational, "surd": v.surd, "is_zero": v.is_zero()}
    em.emit("surd-eval", {**_set_inputs(args, S), "radicand": args.radicand}, payload,
            f"p(sqrt({v.radicand})) = {v.rational} + ({v.surd})*sqrt({v.radicand})", [payload])
    return 0


def cmd_interlace(args, em: Emitter) -> int:
    S = parse_set(args)
    A, B = pencil_matrices(S, args.pencil)
    spectra = [generalized_eigenvalues(A.leading(k), B.leading(k)) for k in range(1, S.order + 1)]
    failed = False
    for k in range(2, S.order + 1):
        rep = check_interlacing(spectra[k - 1], spectra[k - 2], args.slack)
        failed |= not rep.holds
        payload = {"order": k, "holds": rep.holds, "violations": [list(v) for v in rep.violations],
                   "positive_count": sum(1 for v in spectra[k - 1] if v > args.slack)}
        text = f"order {k}: {'holds' if rep.holds else 'VIOLATED ' + str(rep.violations)}"
        em.emit("interlace", {**_set_inputs(args, S), "slack": args.slack}, payload, text,
                [{"order": k, "holds": rep.holds, "violations": len(rep.violations),
                  "positive_count": payload["positive_count"]}])
    if failed:
        raise VerificationFailure("interlacing violated")
    return 0


def cmd_scan(args, em: Emitter) -> int:
    jobs = args.jobs if args.jobs is not None else default_jobs()
    records = scan_minus_one(args.max_n, num_primes=args.primes, certify=args.certify, seed=args.seed, jobs=jobs)
    inputs = {"max_n": args.max_n, "primes": args.primes, "certify": args.certify, "seed": args.seed}
    disagree = [r.n for r in records if r.in_conjecture_range and not r.agrees]
    if em.fmt == "text":
        mem = members(records)
        lines = [f"-1 is a g-eigenvalue for n in: {', '.join(map(str, mem))}",
                 f"{len(mem)} of {args.max_n} orders; disagreements with the binary-prefix rule "
                 f"(n >= 4): {disagree if disagree else 'none'}"]
        out_of_range = [r.n for r in records if not r.in_conjecture_range and r.has_minus_one]
        if out_of_range:
            lines.append(f"outside the conjecture's range (n <= 3): {out_of_range}")
        em.emit("scan", inputs, {}, "\n".join(lines))
    else:
        for r in records:
            d = r.to_dict()
            em.emit("scan", inputs, d, "", [d])
    if disagree:
        raise VerificationFailure(f"conjecture disagreement at n = {disagree}")
    return 0


def cmd_verify(args, em: Emitter) -> int:
    from .acceptance import run_all

    results = run_all(scan_max_n=args.scan_max_n)
    for r in results:
        em.emit("verify", {"scan_max_n": args.scan_max_n},
                {"criterion": r.number, "title": r.title, "passed": r.passed, "detail": r.detail,
                 "seconds": round(r.seconds, 3)},
                r.line(), [{"criterion": r.number, "passed": r.passed, "title": r.title}])
    failed = [r.number for r in results if not r.passed]
    if failed:
        raise VerificationFailure(f"criteria failed: {failed}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gpencil", description=(
        "Generalized eigenvalues of MAX/MIN and LCM/GCD matrix pencils."))
    parser.add_argument("--format", choices=("text", "json", "csv"), default="text")
    # also accepted after the subcommand name
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help):
        return sub.add_parser(name, help=help, parents=[common])

    def with_set(p, pencil=True):
        g = p.add_mutually_exclusive_group(required=True)
        g.add_argument("--set", help="explicit elements, e.g. 2,3,5 or 1.5,2,7/2")
        g.add_argument("--range", help="consecutive integers a..b, inclusive")
        if pencil:
            p.add_argument("--pencil", choices=PENCILS, default="lcm-gcd")
        return p

    with_set(add("build", help="print M, N (and L, G for integer sets)"), pencil=False)
    with_set(add("charpoly", help="exact det(A - x B)"))
    p = with_set(add("eig", help="generalized eigenvalues"))
    p.add_argument("--closed-form", action="store_true", help="use the closed-form spectrum instead of the solver")
    p.add_argument("--digits", type=int, default=4)
    p = with_set(add("multiplicity", help="multiplicity of an integer root"))
    p.add_argument("--at", type=int, default=-1)
    p = with_set(add("surd-eval", help="exact p(sqrt(m))"))
    p.add_argument("--radicand", type=int, required=True)
    p = with_set(add("interlace", help="check interlacing between consecutive leading orders"))
    p.add_argument("--slack", type=float, default=SOLVER_SLACK)
    p = add("scan", help="test -1 membership for n = 1..max-n")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--primes", type=int, default=DEFAULT_NUM_PRIMES)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--certify", action="store_true")
    p.add_argument("--jobs", type=int, default=None, help="worker processes (default $GPENCIL_JOBS or 1)")
    p = add("verify", help="run every acceptance criterion")
    p.add_argument("--scan-max-n", type=int, default=1000)
    return parser


COMMANDS = {
    "build": cmd_build,
    "charpoly": cmd_charpoly,
    "eig": cmd_eig,
    "multiplicity": cmd_multiplicity,
    "surd-eval": cmd_surd_eval,
    "interlace": cmd_interlace,
    "scan": cmd_scan,
    "verify": cmd_verify,
}


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stderr(err), contextlib.redirect_stdout(out):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    em = Emitter(args.format, out)
    try:
        return COMMANDS[args.command](args, em)
    except UsageError as exc:
        err.write(f"usage error: {exc}\n")
        return 2
    except VerificationFailure as exc:
        err.write(f"verification failed: {exc}\n")
        return 3
    except GPencilError as exc:
        err.write(f"error: {type(exc).__name__}: {exc}\n")
        return 1


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
