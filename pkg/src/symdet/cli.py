"""Command-line interface: ``symdet <command> ...``.

Decision commands exit 0 for yes, 1 for no, 2 on errors.
"""

from __future__ import annotations

import argparse
import random
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .alternating import alt_build, alt_representable, alt_verify, alt_witness
from .errors import NotRepresentable, SymdetError
from .extract import extract_factorization
from .factor import is_factor, is_factor_traced, sym_det
from .field import FieldSpec
from .poly import Polynomial, default_names, parse_poly
from .quotient import QuotientContext
from .serialize import dumps_matrix, load_matrix, matrix_to_dot, save_matrix
from .symmat import PFAFFIAN_LIMIT, det, pfaffian

EXIT_YES, EXIT_NO, EXIT_ERROR = 0, 1, 2


def _parse_expr(text: str, args) -> Polynomial:
    if args.vars:
        return parse_poly(text, args.field, [v.strip() for v in args.vars.split(",") if v.strip()])
    return parse_poly(text, args.field)


def _parse_ell(text: str, field: FieldSpec, nvars: int) -> tuple:
    vals = [int(v, 0) for v in text.split(",")]
    if len(vals) == 1:
        vals *= nvars
    if len(vals) != nvars:
        raise ValueError(f"--ell has {len(vals)} values for {nvars} variables")
    for v in vals:
        field.check(v)
    return tuple(vals)


def _write(text: str, path):
    if path:
        Path(path).write_text(text)
    else:
        sys.stdout.write(text)


# -- commands ------------------------------------------------------------


def cmd_factor(args) -> int:
    P = _parse_expr(args.expr, args)
    trace = is_factor_traced(P)
    if trace is None:
        print(f"{P}: not factorizable")
        return EXIT_NO
    print(f"{P}: factorizable")
    print(trace.format())
    return EXIT_YES


def cmd_sdr(args) -> int:
    P = _parse_expr(args.expr, args)
    M = sym_det(P)
    if args.output:
        save_matrix(M, args.output)
        print(f"wrote {M.n}x{M.n} SDR of {P} to {args.output}")
    else:
        sys.stdout.write(dumps_matrix(M))
    if args.emit_dot:
        Path(args.emit_dot).write_text(matrix_to_dot(M))
    return EXIT_YES


def cmd_verify(args) -> int:
    M = load_matrix(args.matrix)
    P = parse_poly(args.expr, M.field, M.variables)
    d = det(M)
    ok = d == P
    print(f"det: {d}")
    print(f"expected: {P}")
    print(f"match: {'true' if ok else 'false'}")
    return EXIT_YES if ok else EXIT_NO


def cmd_extract(args) -> int:
    M = load_matrix(args.matrix)
    ell = _parse_ell(args.ell, M.field, len(M.variables))
    ctx = QuotientContext(M.field, M.variables, ell)
    R = extract_factorization(M, ctx)
    for t in R.factors:
        print(f"factor: {t}")
    print(f"constant: {R.constant}")
    ok = R.verify(det(M))
    print(f"verified: {'true' if ok else 'false'}")
    return EXIT_YES if ok else EXIT_NO


def cmd_reduce(args) -> int:
    P = _parse_expr(args.expr, args)
    ell = _parse_ell(args.ell, args.field, P.nvars)
    print(P.mult_reduce(ell))
    return EXIT_YES


def _is_factor_mask(job):
    field, names, mask_terms = job
    return is_factor(Polynomial.from_masks(field, names, mask_terms))


def cmd_census(args) -> int:
    F = args.field
    names = tuple(v.strip() for v in args.vars.split(",")) if args.vars else tuple(default_names(args.m))
    if len(names) != args.m:
        raise ValueError(f"--vars names {len(names)} variables but -m is {args.m}")
    ell = _parse_ell(args.ell, F, args.m)
    ctx = QuotientContext(F, names, ell)
    if args.sample:
        rng = random.Random(args.seed)
        q = F.order
        polys = [
            Polynomial.from_masks(F, names, {m: rng.randrange(q) for m in range(1 << args.m)}) for _ in range(args.sample)
        ]
        flags = _map_is_factor(polys, args.jobs)
        yes = sum(flags)
        print(f"{len(polys)} sampled, {yes} factorizable, {len(polys) - yes} not")
        if args.list:
            for P, f in zip(polys, flags):
                if not f:
                    print(P)
        return EXIT_YES
    elements = ctx.elements()
    closure = {e.rep for e in ctx.linear_closure()}
    inside = sum(1 for e in elements if e.rep in closure)
    print(f"{len(elements)} elements, {inside} factorizable, {len(elements) - inside} not")
    flags = _map_is_factor([e.rep for e in elements], args.jobs)
    agree = all(f == (e.rep in closure) for f, e in zip(flags, elements))
    print(f"decision procedure agrees: {'true' if agree else 'false'}")
    if args.list:
        for e in sorted(elements, key=lambda e: sorted(e.rep.mask_terms())):
            if e.rep not in closure:
                print(e.rep)
    return EXIT_YES if agree else EXIT_NO


def _map_is_factor(polys, jobs):
    if jobs and jobs > 1:
        work = [(P.field, P.variables, P.mask_terms()) for P in polys]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_is_factor_mask, work, chunksize=16))
    return [is_factor(P) for P in polys]


def cmd_alternating(args) -> int:
    P = _parse_expr(args.expr, args)
    ok, Q = alt_representable(P)
    if not ok:
        print(f"{P}: not a square, no alternating representation")
        return EXIT_NO
    print(f"{P}: square of {Q}")
    if args.witness:
        N = load_matrix(args.witness, check=None)
        P = parse_poly(args.expr, N.field, N.variables)
        if det(N) ** 2 != P:
            print("witness: det(N)^2 does not match")
            return EXIT_ERROR
        A = alt_build(N)
    else:
        A = alt_witness(P)
        if A is None:
            print("no witness synthesized; pass --witness N with det(N) = sqrt(P)")
            return EXIT_YES
    if A.n <= PFAFFIAN_LIMIT:
        good = alt_verify(A, P)
    else:
        good = det(A) == P
    print(f"alternating matrix: {A.n}x{A.n}, verified: {'true' if good else 'false'}")
    if args.output:
        save_matrix(A, args.output)
    else:
        sys.stdout.write(dumps_matrix(A))
    return EXIT_YES


def cmd_pfaffian(args) -> int:
    M = load_matrix(args.matrix, check="alternating")
    print(pfaffian(M))
    return EXIT_YES


def cmd_emit_dot(args) -> int:
    M = load_matrix(args.matrix)
    _write(matrix_to_dot(M), args.output)
    return EXIT_YES


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="symdet", description="Symmetric determinantal representations over GF(2^k).")
    ap.add_argument("--field", type=FieldSpec.parse, default=FieldSpec(2), help="p, p^k or p^k:modulus (default 2)")
    ap.add_argument("--vars", help="comma-separated variable names, in index order")
    ap.add_argument("--seed", type=int, default=0, help="seed for sampled runs")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("factor", help="decide factorizability and print the factor trace")
    p.add_argument("expr")
    p.set_defaults(func=cmd_factor)

    p = sub.add_parser("sdr", help="synthesize an SDR as matrix JSON")
    p.add_argument("expr")
    p.add_argument("-o", "--output")
    p.add_argument("--emit-dot", metavar="FILE")
    p.set_defaults(func=cmd_sdr)

    p = sub.add_parser("verify", help="compare det(matrix) with a polynomial")
    p.add_argument("matrix")
    p.add_argument("expr")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("extract", help="factor the projection of det(matrix) in R(ell)")
    p.add_argument("matrix")
    p.add_argument("--ell", required=True, help="x_i^2 values: one literal or a comma list")
    p.set_defaults(func=cmd_extract)

    p = sub.add_parser("reduce", help="replace each x_i^2 by ell_i")
    p.add_argument("expr")
    p.add_argument("--ell", required=True)
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("census", help="count products of linear elements in R(ell)")
    p.add_argument("-m", type=int, required=True, help="number of variables")
    p.add_argument("--ell", default="1")
    p.add_argument("--list", action="store_true", help="print the non-factorizable elements")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--sample", type=int, metavar="N", help="test N random multilinear polynomials instead")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("alternating", help="square test and alternating representation")
    p.add_argument("expr")
    p.add_argument("--witness", metavar="MATRIX")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_alternating)

    p = sub.add_parser("pfaffian", help="Pfaffian of an alternating matrix JSON")
    p.add_argument("matrix")
    p.set_defaults(func=cmd_pfaffian)

    p = sub.add_parser("emit-dot", help="render a symmetric matrix as a DOT graph")
    p.add_argument("matrix")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_emit_dot)
    return ap


GLOBAL_OPTIONS = ("--field", "--vars", "--seed")


def _hoist_globals(argv):
    # global options are also accepted after the subcommand
    front, rest = [], []
    it = iter(argv)
    for a in it:
        name = a.split("=", 1)[0]
        if name in GLOBAL_OPTIONS:
            front.append(a)
            if "=" not in a:
                front.append(next(it, ""))
        else:
            rest.append(a)
    return front + rest


def run(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    parser = build_parser()
    try:
        args = parser.parse_args(_hoist_globals(argv))
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else EXIT_YES
    try:
        return args.func(args)
    except NotRepresentable as exc:
        print(f"no: {exc}")
        return EXIT_NO
    except (SymdetError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
    return EXIT_ERROR


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
