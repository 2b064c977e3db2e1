"""Command-line front end.

Every subcommand prints JSON (or a bare partition string for the small
partition operators) and exits 0 on success, 1 if a requested check
fails, 2 on usage errors and 3 on internal arithmetic errors.  Reports
are deterministic for fixed flags and seed.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .applications import (
    constellation_count,
    constellation_family,
    b_series_coeff,
    hciz_coeff,
    hciz_family,
    hciz_specialized_phi,
    hciz_theta_tilde,
    hurwitz_family,
    hurwitz_number,
    hurwitz_oracle,
    schur_measure_family,
    schur_measure_g,
    verify_application,
)
from .bernstein import bernstein_coeff, bernstein_coeff_adjoint
from .coeffring import CoefficientError, element_json, fraction_json
from .content import phi_coeff, phi_family
from .hierarchy import (
    CoeffOracle,
    FamilyOracle,
    ReconstructionError,
    diagonal_sweep,
    exp_p1_oracle,
    kp_sweep,
    reconstruct,
    subhierarchy_residual,
    toda_equation_residual,
    toda_sweep,
)
from .partitions import Partition, partitions_up_to
from .series import exps_to_partition, power_sum_ring, schur_poly

USAGE_ERROR = 2
CHECK_FAILURE = 1
INTERNAL_ERROR = 3

_VALUE_FLAGS = ("--window", "--x", "--n", "--m", "--nu", "--e-bound")


def _partition(text: str) -> Partition:
    try:
        return Partition.from_text(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _window(text: str) -> tuple[int, int]:
    try:
        lo, hi = (int(tok) for tok in text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError("window must be lo,hi") from exc
    return lo, hi


def _int_set(text: str):
    text = text.strip()
    if not text:
        return frozenset()
    return frozenset(int(tok) for tok in text.split(","))


def _emit(data, path=None):
    text = json.dumps(data, indent=2, sort_keys=True)
    print(text)
    if path:
        with open(path, "w") as fh:
            fh.write(text + "\n")


def doubled_phi_family() -> FamilyOracle:
    one = Partition((1,))

    def g(n, lam):
        c = phi_coeff(n, lam)
        return 2 * c if (n == 0 and lam == one) else c

    return FamilyOracle.from_diagonal(g, "content-type, one coefficient doubled")


def _family(args) -> FamilyOracle:
    name = args.family
    if name == "phi":
        return phi_family()
    if name == "phi-doubled":
        return doubled_phi_family()
    if name == "ones":
        return FamilyOracle.from_diagonal(lambda n, lam: Fraction(1), "all-ones")
    if name == "p1q1":
        one = Partition((1,))
        return FamilyOracle.from_diagonal(
            lambda n, lam: Fraction(1 if n == 0 and lam == one else 0),
            "tau_0 = p1 q1")
    if name == "schur-measure":
        return schur_measure_family(getattr(args, "x", frozenset()))
    if name == "hciz":
        return hciz_family()
    if name == "hurwitz":
        return hurwitz_family(cap=args.cap)
    if name == "constellations":
        return constellation_family(cap=args.cap)
    raise argparse.ArgumentTypeError(f"unknown family {name}")


_FAMILIES = ("phi", "phi-doubled", "ones", "p1q1", "schur-measure", "hciz",
             "hurwitz", "constellations")


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="todatau",
        description="Exact checks and computations for KP / 2-Toda "
                    "coefficient constraints.")
    sub = top.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--json", dest="json_path", default=None,
                       help="also write the JSON output to this path")
        p.add_argument("--jobs", type=int, default=1)

    p = sub.add_parser("raise", help="insert-and-shrink partition operator")
    p.add_argument("--lambda", dest="lam", type=_partition, required=True)
    p.add_argument("--i", type=int, required=True)

    p = sub.add_parser("lower", help="delete-and-grow partition operator")
    p.add_argument("--lambda", dest="lam", type=_partition, required=True)
    p.add_argument("--j", type=int, required=True)

    p = sub.add_parser("conjugate", help="transpose a partition diagram")
    p.add_argument("--lambda", dest="lam", type=_partition, required=True)

    p = sub.add_parser("schur", help="Schur polynomial utilities")
    ssub = p.add_subparsers(dest="schur_command", required=True)
    pe = ssub.add_parser("expand", help="power-sum expansion of s_lambda")
    pe.add_argument("--lambda", dest="lam", type=_partition, required=True)
    pe.add_argument("--cap", type=int, default=None)
    add_common(pe)

    p = sub.add_parser("bernstein",
                       help="coefficient tables of the raising operator")
    p.add_argument("--oracle", choices=("delta", "exp-p1"), default="delta")
    p.add_argument("--nu", type=_partition, default=Partition(),
                   help="support of the delta oracle")
    p.add_argument("--adjoint", action="store_true")
    p.add_argument("--size-bound", type=int, default=4)
    p.add_argument("--e-bound", type=int, default=4)
    add_common(p)

    p = sub.add_parser("check", help="constraint checks")
    csub = p.add_subparsers(dest="check_command", required=True)

    pk = csub.add_parser("kp", help="bilinear coefficient constraints")
    pk.add_argument("--family", choices=("exp-p1", "delta"), default="exp-p1")
    pk.add_argument("--nu", type=_partition, default=Partition((2, 1)))
    pk.add_argument("--L", type=int, default=4)
    add_common(pk)

    pt = csub.add_parser("toda", help="bilinear two-alphabet constraints")
    pt.add_argument("--family", choices=_FAMILIES, default="phi")
    pt.add_argument("--L", type=int, default=2)
    pt.add_argument("--window", type=_window, default=(-1, 1))
    pt.add_argument("--cap", type=int, default=4)
    pt.add_argument("--x", type=_int_set, default=frozenset())
    add_common(pt)

    pd = csub.add_parser("diagonal", help="diagonal product criterion")
    pd.add_argument("--family", choices=_FAMILIES, default="phi")
    pd.add_argument("--L", type=int, default=5)
    pd.add_argument("--window", type=_window, default=(-3, 3))
    pd.add_argument("--raise-bound", type=int, default=None)
    pd.add_argument("--cap", type=int, default=4)
    pd.add_argument("--x", type=_int_set, default=frozenset())
    add_common(pd)

    pq = csub.add_parser("toda-eq", help="the lattice bilinear equation")
    pq.add_argument("--family", choices=_FAMILIES, default="phi")
    pq.add_argument("--m", type=int, default=0)
    pq.add_argument("--cap", type=int, default=4)
    pq.add_argument("--x", type=_int_set, default=frozenset())
    add_common(pq)

    ps = csub.add_parser("sub", help="reduced single-alphabet constraints")
    ps.add_argument("--family", choices=_FAMILIES, default="phi")
    ps.add_argument("--m", type=int, default=0)
    ps.add_argument("--r", type=int, default=1)
    ps.add_argument("--lambda", dest="lam", type=_partition, default=Partition())
    ps.add_argument("--alpha", type=_partition, default=Partition())
    ps.add_argument("--cap", type=int, default=3)
    ps.add_argument("--x", type=_int_set, default=frozenset())
    add_common(ps)

    p = sub.add_parser("phi", help="one symbolic diagonal coefficient")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--lambda", dest="lam", type=_partition, required=True)
    add_common(p)

    p = sub.add_parser("reconstruct",
                       help="rebuild a coefficient from boundary data")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--lambda", dest="lam", type=_partition, required=True)
    add_common(p)

    p = sub.add_parser("constellations", help="permutation tuple counts")
    p.add_argument("--compute", action="store_true")
    p.add_argument("--verify", action="store_true")
    p.add_argument("--alpha", type=_partition, default=Partition((1,)))
    p.add_argument("--beta", type=_partition, default=Partition((1,)))
    p.add_argument("--defects", type=lambda s: [int(x) for x in s.split(",")]
                   if s.strip() else [], default=[])
    p.add_argument("--L", type=int, default=2)
    p.add_argument("--window", type=_window, default=(-1, 1))
    p.add_argument("--cap", type=int, default=4)
    add_common(p)

    p = sub.add_parser("hurwitz", help="double transposition-factorization counts")
    p.add_argument("--compute", action="store_true")
    p.add_argument("--verify", action="store_true")
    p.add_argument("--alpha", type=_partition, default=Partition((1,)))
    p.add_argument("--beta", type=_partition, default=Partition((1,)))
    p.add_argument("--genus", type=int, default=0)
    p.add_argument("--L", type=int, default=2)
    p.add_argument("--window", type=_window, default=(-1, 1))
    p.add_argument("--cap", type=int, default=4)
    add_common(p)

    p = sub.add_parser("schur-measure", help="correlation-sum coefficients")
    p.add_argument("--compute", action="store_true")
    p.add_argument("--verify", action="store_true")
    p.add_argument("--x", type=_int_set, default=frozenset())
    p.add_argument("--n", type=int, default=0)
    p.add_argument("--lambda", dest="lam", type=_partition, default=Partition())
    p.add_argument("--L", type=int, default=4)
    p.add_argument("--window", type=_window, default=(-2, 2))
    add_common(p)

    p = sub.add_parser("hciz", help="character-expansion coefficients")
    p.add_argument("--compute", action="store_true")
    p.add_argument("--verify", action="store_true")
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--lambda", dest="lam", type=_partition, default=Partition())
    p.add_argument("--L", type=int, default=4)
    p.add_argument("--window", type=_window, default=(0, 4))
    add_common(p)

    return top


def _report_exit(report, path) -> int:
    _emit(report.as_json(), path)
    return 0 if report.ok else CHECK_FAILURE


def _run(args) -> int:
    cmd = args.command
    if cmd == "raise":
        print(str(args.lam.up(args.i)))
        return 0
    if cmd == "lower":
        print(str(args.lam.down(args.j)))
        return 0
    if cmd == "conjugate":
        print(str(args.lam.conjugate()))
        return 0
    if cmd == "schur":
        cap = args.cap if args.cap is not None else max(args.lam.size, 1)
        ring = power_sum_ring(cap)
        s = schur_poly(ring, args.lam)
        terms = [{"power_sums": exps_to_partition(ring, e).as_json(),
                  "coeff": fraction_json(c)}
                 for e, c in sorted(s.terms.items())]
        _emit({"partition": args.lam.as_json(), "terms": terms},
              args.json_path)
        return 0
    if cmd == "bernstein":
        oracle = (exp_p1_oracle() if args.oracle == "exp-p1"
                  else CoeffOracle.delta(args.nu))
        transform = bernstein_coeff_adjoint if args.adjoint else bernstein_coeff
        rows = []
        for beta in partitions_up_to(args.size_bound):
            for e in range(-args.e_bound, args.e_bound + 1):
                c = transform(oracle, beta, e)
                if c:
                    rows.append({"beta": beta.as_json(), "e": e,
                                 "coeff": fraction_json(c)})
        _emit({"oracle": oracle.description, "adjoint": args.adjoint,
               "rows": rows}, args.json_path)
        return 0
    if cmd == "check":
        return _run_check(args)
    if cmd == "phi":
        _emit(phi_coeff(args.n, args.lam).as_json(), args.json_path)
        return 0
    if cmd == "reconstruct":
        row = lambda m: phi_coeff(0, Partition((m,)))  # noqa: E731
        col = lambda m: phi_coeff(0, Partition([1] * m))  # noqa: E731
        G = reconstruct(row, col, phi_coeff(0, Partition()),
                        phi_coeff(1, Partition()))
        got = G.diag(args.n, args.lam)
        want = phi_coeff(args.n, args.lam)
        _emit({"n": args.n, "lambda": args.lam.as_json(),
               "reconstructed": got.as_json(), "direct": want.as_json(),
               "match": got == want}, args.json_path)
        return 0 if got == want else CHECK_FAILURE
    if cmd == "constellations":
        if args.compute:
            count = constellation_count(args.alpha, args.beta, args.defects)
            series = b_series_coeff(args.alpha, args.beta, args.defects)
            _emit({"alpha": args.alpha.as_json(), "beta": args.beta.as_json(),
                   "defects": args.defects, "count": count,
                   "series_coeff": fraction_json(series)}, args.json_path)
            return 0
        report = verify_application("constellations", size_bound=args.L,
                                    window=args.window, cap=args.cap,
                                    jobs=args.jobs)
        return _report_exit(report, args.json_path)
    if cmd == "hurwitz":
        if args.compute:
            _emit({"alpha": args.alpha.as_json(), "beta": args.beta.as_json(),
                   "genus": args.genus,
                   "series": fraction_json(
                       hurwitz_number(args.alpha, args.beta, args.genus)),
                   "oracle": fraction_json(
                       hurwitz_oracle(args.alpha, args.beta, args.genus))},
                  args.json_path)
            return 0
        report = verify_application("hurwitz", size_bound=args.L,
                                    window=args.window, cap=args.cap,
                                    jobs=args.jobs)
        return _report_exit(report, args.json_path)
    if cmd == "schur-measure":
        if args.compute:
            _emit({"X": sorted(args.x), "n": args.n,
                   "lambda": args.lam.as_json(),
                   "coeff": fraction_json(
                       schur_measure_g(args.x, args.n, args.lam))},
                  args.json_path)
            return 0
        report = verify_application("schur-measure", size_bound=args.L,
                                    window=args.window, X=args.x,
                                    jobs=args.jobs)
        return _report_exit(report, args.json_path)
    if cmd == "hciz":
        if args.compute:
            _emit({"n": args.n, "lambda": args.lam.as_json(),
                   "coeff": fraction_json(hciz_coeff(args.n, args.lam)),
                   "prefactor": fraction_json(hciz_theta_tilde(max(args.n, 0))),
                   "specialized": fraction_json(
                       hciz_specialized_phi(args.n, args.lam))},
                  args.json_path)
            return 0
        report = verify_application("hciz", size_bound=args.L,
                                    window=args.window, jobs=args.jobs)
        return _report_exit(report, args.json_path)
    raise AssertionError(f"unhandled command {cmd}")


def _run_check(args) -> int:
    which = args.check_command
    if which == "kp":
        oracle = (exp_p1_oracle() if args.family == "exp-p1"
                  else CoeffOracle.delta(args.nu))
        report = kp_sweep(oracle, args.L, jobs=args.jobs)
        return _report_exit(report, args.json_path)
    family = _family(args)
    if which == "toda":
        report = toda_sweep(family, args.L, args.window, jobs=args.jobs)
        return _report_exit(report, args.json_path)
    if which == "diagonal":
        report = diagonal_sweep(family, args.L, args.window,
                                raise_bound=args.raise_bound, jobs=args.jobs)
        return _report_exit(report, args.json_path)
    if which == "toda-eq":
        resid = toda_equation_residual(family, args.m, args.cap)
        ok = not resid
        _emit({"family": family.description, "m": args.m, "cap": args.cap,
               "residual_zero": ok,
               "residual": element_json(resid) if not ok else None},
              args.json_path)
        return 0 if ok else CHECK_FAILURE
    if which == "sub":
        resid = subhierarchy_residual(family, args.m, args.r, args.lam,
                                      args.alpha, args.cap)
        ok = not resid
        _emit({"family": family.description, "m": args.m, "r": args.r,
               "lambda": args.lam.as_json(), "alpha": args.alpha.as_json(),
               "cap": args.cap, "residual_zero": ok,
               "residual": element_json(resid) if not ok else None},
              args.json_path)
        return 0 if ok else CHECK_FAILURE
    raise AssertionError(f"unhandled check {which}")


def _fix_argv(argv):
    """Join value flags with their argument so negative values parse."""
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in _VALUE_FLAGS and i + 1 < len(argv):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def main(argv=None) -> int:
    argv = _fix_argv(sys.argv[1:] if argv is None else list(argv))
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else USAGE_ERROR
    try:
        return _run(args)
    except (CoefficientError, ReconstructionError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INTERNAL_ERROR
    except ValueError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
