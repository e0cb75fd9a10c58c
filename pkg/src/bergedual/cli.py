"""Command-line front end.

Exit codes: 0 when everything checked out, 1 when a sweep met a violation,
2 for usage or parameter errors. Diagnostics go to standard error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Sequence

from . import front as fr
from .braid import chi_berge, normalize_berge
from .errors import BergeDualError
from .families import FAMILIES, PARAM_NAMES, build
from .modmath import Residue, gamma_normalize, mod_inverse, primitive_reps_eisenstein, roots_x2_x_1, sl_class
from .sweep import SIGN_PARAMS, Sweep, irange, write_reports
from .verify import classify, congruence_residual, fdtc_bound

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def parse_sign(text: str) -> int:
    if text in ("+", "+1", "1"):
        return 1
    if text in ("-", "-1"):
        return -1
    raise argparse.ArgumentTypeError(f"expected + or -, got {text!r}")


def parse_range(text: str) -> range:
    """'n' or 'lo:hi', inclusive."""
    try:
        if ":" in text:
            lo, hi = (int(v) for v in text.split(":", 1))
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad range {text!r}; use N or LO:HI") from None
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty range {text!r}: min > max")
    return irange(lo, hi)


def parse_sign_range(text: str) -> tuple[int, ...]:
    if text == "both":
        return (-1, 1)
    return (parse_sign(text),)


_PARAM_FLAGS = ("i", "k", "sign", "delta", "eps", "A", "t", "r", "s", "j")


def _family_params(args: argparse.Namespace) -> tuple[int, ...]:
    names = PARAM_NAMES[args.family]
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"Type {args.family} needs " + " ".join(f"--{n}" for n in missing))
    unused = [n for n in _PARAM_FLAGS if n not in names and getattr(args, n) is not None]
    if unused:
        raise UsageError(f"Type {args.family} does not take " + " ".join(f"--{n}" for n in unused))
    return tuple(getattr(args, n) for n in names)


def cmd_family(args: argparse.Namespace) -> int:
    rec = build(args.family, _family_params(args))
    print(rec.to_line())
    return EXIT_OK


def cmd_classify(args: argparse.Namespace) -> int:
    from .sweep import report_json

    rep = classify(build(args.family, _family_params(args)))
    print(report_json(rep))
    return EXIT_VIOLATION if rep.classification == "violation" else EXIT_OK


def cmd_sweep(args: argparse.Namespace) -> int:
    names = PARAM_NAMES[args.family]
    ranges = {}
    for n in names:
        value = getattr(args, n)
        if value is None and n in SIGN_PARAMS:
            value = (-1, 1)
        if value is None:
            raise UsageError(f"Type {args.family} sweep needs --{n}")
        ranges[n] = value
    unused = [n for n in _PARAM_FLAGS if n not in names and getattr(args, n) is not None]
    if unused:
        raise UsageError(f"Type {args.family} does not take " + " ".join(f"--{n}" for n in unused))
    sw = Sweep(args.family, ranges, jobs=args.jobs)
    if args.output:
        with open(args.output, "w", newline="") as fh:
            write_reports(sw, fh, args.format)
    else:
        write_reports(sw, sys.stdout, args.format)
        sys.stdout.flush()
    print(sw.summary.line(), file=sys.stderr)
    return EXIT_VIOLATION if sw.summary.violations else EXIT_OK


def _invariant_lines(fd: fr.FrontData) -> list[str]:
    return [
        f"w = {fd.w}, c_u = {fd.c_u}, c_d = {fd.c_d}, a = {fd.a}, b = {fd.b}, p = {fd.p}",
        f"tb = {fr.tb(fd)}, rot = {fr.rot(fd)}",
        f"sl = {fr.sl_push(fd)}, p*sl = {fd.p * fr.sl_push(fd)}, sl_neg = {fr.sl_push_negative(fd)}",
    ]


def cmd_front(args: argparse.Namespace) -> int:
    if args.front_cmd == "torus-dual":
        _, fd = fr.torus_dual_front(args.i, args.k)
        sl = fr.sl_push(fd)
        print(f"sl = {sl}, p*sl = {fd.p * sl}, w = {fd.w}")
    elif args.front_cmd == "gn1":
        gf, fd = fr.gn1_front(args.p, args.a, args.b, q=args.q)
        print(f"q = {gf.q}, columns = {' '.join(map(str, fr.gn1_strand_columns(gf)))}")
        print("\n".join(_invariant_lines(fd)))
    else:
        fd = fr.FrontData(args.w, args.cu, args.cd, args.a, args.b, args.p)
        print("\n".join(_invariant_lines(fd)))
    return EXIT_OK


def cmd_braid(args: argparse.Namespace) -> int:
    if args.braid_cmd == "chi":
        print(f"-chi = {chi_berge(args.A, args.B, args.b, args.delta, args.a)}")
    else:
        pf = normalize_berge(args.A, args.B, args.b, args.delta, args.a)
        tail = f" W({pf.tail})" if pf.tail >= 2 else ""
        print(
            f"W({pf.strands})^{pf.power}{tail}: {pf.letter_count()} letters, "
            f"mirrored = {'yes' if pf.mirrored else 'no'}, rewrites = {pf.rewrites}"
        )
    return EXIT_OK


def cmd_qf(args: argparse.Namespace) -> int:
    if args.qf_cmd == "eisenstein":
        reps = " ".join(f"({e.r},{e.s})" for e in primitive_reps_eisenstein(args.p))
        roots = " ".join(str(x.value) for x in roots_x2_x_1(args.p))
        print(f"{reps}; roots {roots}")
    elif args.qf_cmd == "gamma":
        c, d, trace = gamma_normalize(args.a, args.b)
        path = " -> ".join(f"({x},{y})" for x, y in trace.sequence())
        print(f"({c},{d}) in {trace.steps} steps: {path}")
    elif args.qf_cmd == "inverse":
        print(mod_inverse(args.a, args.p).value)
    elif args.qf_cmd == "sl-class":
        print(sl_class(Residue.of(args.a, args.p)).value)
    else:
        print(congruence_residual(args.p, args.a, args.chi).value)
    return EXIT_OK


def cmd_fdtc(args: argparse.Namespace) -> int:
    bound, strict = fdtc_bound(args.p, args.g)
    print(f"bound = {bound}, strict = {'true' if strict else 'false'}")
    return EXIT_OK


def _add_family_flags(sp: argparse.ArgumentParser, ranged: bool) -> None:
    value = parse_range if ranged else int
    sign = parse_sign_range if ranged else parse_sign
    sp.add_argument("family", choices=FAMILIES)
    for n in _PARAM_FLAGS:
        sp.add_argument(f"--{n}", type=sign if n in SIGN_PARAMS else value, default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bergedual", description="Self-linking congruence checks for Berge knot duals.")
    parser.add_argument("-v", "--verbose", action="store_true", help="log cross-check details")
    sub = parser.add_subparsers(dest="cmd", required=True)

    sp = sub.add_parser("family", help="print one record")
    _add_family_flags(sp, ranged=False)
    sp.set_defaults(func=cmd_family)

    sp = sub.add_parser("classify", help="evaluate the congruence for one record")
    _add_family_flags(sp, ranged=False)
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("sweep", help="exhaustive sweep; ranges are N or LO:HI (write --t=-8:8)")
    _add_family_flags(sp, ranged=True)
    sp.add_argument("--format", choices=("jsonl", "csv"), default="jsonl")
    sp.add_argument("--output", "-o", default=None)
    sp.add_argument("--jobs", type=int, default=1)
    sp.set_defaults(func=cmd_sweep)

    sp = sub.add_parser("front", help="front invariants")
    fsub = sp.add_subparsers(dest="front_cmd", required=True)
    f = fsub.add_parser("torus-dual")
    f.add_argument("--i", type=int, required=True)
    f.add_argument("--k", type=int, required=True)
    f = fsub.add_parser("gn1")
    f.add_argument("--p", type=int, required=True)
    f.add_argument("--a", type=int, required=True)
    f.add_argument("--b", type=int, required=True)
    f.add_argument("--q", type=int, default=None)
    f = fsub.add_parser("invariants")
    for name in ("w", "cu", "cd", "a", "b", "p"):
        f.add_argument(f"--{name}", type=int, required=True)
    sp.set_defaults(func=cmd_front)

    sp = sub.add_parser("braid", help="Berge braid W(B)^b W(A+1-a)^delta")
    bsub = sp.add_subparsers(dest="braid_cmd", required=True)
    for name in ("chi", "normalize"):
        b = bsub.add_parser(name)
        b.add_argument("--A", type=int, required=True)
        b.add_argument("--B", type=int, required=True)
        b.add_argument("--b", type=int, required=True)
        b.add_argument("--delta", type=parse_sign, required=True)
        b.add_argument("--a", type=int, choices=(0, 1), required=True)
    sp.set_defaults(func=cmd_braid)

    sp = sub.add_parser("qf", help="modular arithmetic and quadratic forms")
    qsub = sp.add_subparsers(dest="qf_cmd", required=True)
    q = qsub.add_parser("eisenstein")
    q.add_argument("--p", type=int, required=True)
    q = qsub.add_parser("gamma")
    q.add_argument("--a", type=int, required=True)
    q.add_argument("--b", type=int, required=True)
    for name in ("inverse", "sl-class"):
        q = qsub.add_parser(name)
        q.add_argument("--a", type=int, required=True)
        q.add_argument("--p", type=int, required=True)
    q = qsub.add_parser("residual")
    q.add_argument("--p", type=int, required=True)
    q.add_argument("--a", type=int, required=True)
    q.add_argument("--chi", type=int, required=True, help="the value -chi")
    sp.set_defaults(func=cmd_qf)

    sp = sub.add_parser("fdtc", help="fractional Dehn twist coefficient bound")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--g", type=int, required=True)
    sp.set_defaults(func=cmd_fdtc)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s: %(message)s")
    try:
        return args.func(args)
    except (BergeDualError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
