"""Enumerative instantiations of the diagonal coefficient machinery.

Four families, each with an independent cross-check route:

* permutation tuple counts (cycle types for the first two factors,
  prescribed defects d - #cycles for the rest, product = identity),
  against the u-variable specialization y_j -> prod (1 + j u_i);
* double Hurwitz numbers: transposition factorizations counted by a
  walk DP over S_d, against the t-specialization y_j -> exp(jt);
* correlation sums of the s_lam(p) s_lam(q) measure: indicator
  coefficients X - n inside the shifted-content set of lam;
* the unitary-integral character expansion: 1/prod(n + content) with at
  most n rows, against the numeric specialization of the symbolic
  coefficients (after trading b for an inverse half-power of y_0).

All counting is elementary (permutations composed directly); no
character theory is used anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations as iter_permutations
from math import factorial

from .coeffring import (
    ZERO,
    Assignment,
    PolyRing,
    specialize,
    truncated_exp,
)
from .content import phi_coeff
from .hierarchy import ConstraintReport, FamilyOracle, diagonal_sweep
from .partitions import (
    Partition,
    partitions_of,
    partitions_up_to,
    solve_down_sizes,
)
from .series import partition_to_exps, power_sum_ring, schur_poly

F = Fraction


# ---------------------------------------------------------------------------
# permutation utilities (tuples p with p[i] = image of i, 0-based)
# ---------------------------------------------------------------------------


def identity_perm(d):
    return tuple(range(d))


def compose(f, g):
    """f after g."""
    return tuple(f[g[i]] for i in range(len(f)))


def invert(f):
    out = [0] * len(f)
    for i, v in enumerate(f):
        out[v] = i
    return tuple(out)


def cycle_type(p) -> Partition:
    seen = [False] * len(p)
    lens = []
    for i in range(len(p)):
        if seen[i]:
            continue
        n = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = p[j]
            n += 1
        lens.append(n)
    return Partition(sorted(lens, reverse=True))


def defect(p) -> int:
    return len(p) - cycle_type(p).length


def symmetric_group(d):
    return list(iter_permutations(range(d)))


_class_cache: dict[int, dict] = {}


def _classes(d):
    """Group elements of S_d keyed by cycle type, plus defect classes."""
    if d not in _class_cache:
        by_type: dict[Partition, list] = {}
        by_defect: dict[int, list] = {}
        for p in symmetric_group(d):
            by_type.setdefault(cycle_type(p), []).append(p)
            by_defect.setdefault(defect(p), []).append(p)
        _class_cache[d] = {"type": by_type, "defect": by_defect}
    return _class_cache[d]


# ---------------------------------------------------------------------------
# permutation tuple counts and the u-variable series route
# ---------------------------------------------------------------------------


def constellation_count(alpha: Partition, beta: Partition, defects,
                        limit: int = 5) -> int:
    """Number of tuples (sigma, gamma, pi_1, ..., pi_r) in S_d with sigma of
    type alpha, gamma of type beta, defect(pi_i) = defects[i] and product
    equal to the identity; exhaustive, so d is capped by ``limit``."""
    d = alpha.size
    if beta.size != d:
        raise ValueError("alpha and beta must have equal size")
    defects = list(defects)
    if d > limit:
        raise ValueError(f"d = {d} exceeds the exhaustive-search limit {limit}")
    if sum(1 for a in defects if a) > 2:
        raise ValueError("at most two nontrivial factors are supported")
    if d == 0:
        return 1 if not any(defects) else 0
    cls = _classes(d)
    sigmas = cls["type"].get(alpha, [])
    gammas = cls["type"].get(beta, [])
    if not defects:
        ident = identity_perm(d)
        return sum(1 for s in sigmas for g in gammas
                   if compose(s, g) == ident)
    middle = [cls["defect"].get(a, []) for a in defects[:-1]]
    last = defects[-1]
    count = 0
    for s in sigmas:
        for g in gammas:
            prefix = [compose(s, g)]
            for stage in middle:
                prefix = [compose(p, pi) for p in prefix for pi in stage]
            for p in prefix:
                if defect(invert(p)) == last:
                    count += 1
    return count


_schur_coeff_cache: dict[int, dict] = {}


def _schur_coeffs(d):
    """For each lam of d, the coefficient of every power-sum monomial p_alpha
    in s_lam."""
    if d not in _schur_coeff_cache:
        ring = power_sum_ring(max(d, 1))
        table = {}
        for lam in partitions_of(d):
            s = schur_poly(ring, lam)
            table[lam] = {alpha: s.coeff(partition_to_exps(ring, alpha))
                          for alpha in partitions_of(d)}
        _schur_coeff_cache[d] = table
    return _schur_coeff_cache[d]


def u_ring(r: int, cap: int) -> PolyRing:
    return PolyRing([(("u", i), 1) for i in range(1, r + 1)], cap)


def constellation_assignment(ring: PolyRing) -> Assignment:
    """a = b = 1, y_j -> prod over the ring's u variables of (1 + j u_i)."""
    def val(j):
        out = ring.one()
        for kind, i in ring.vars:
            if kind == "u":
                out = out * (ring.one() + j * ring.gen("u", i))
        return out

    return Assignment(y=val, a=1, b=1, y0_sqrt=1)


def b_series_coeff(alpha: Partition, beta: Partition, defects,
                   cap: int | None = None) -> Fraction:
    """Coefficient of p_alpha q_beta u_1^{a_1} u_2^{a_2} ... in the level-0
    diagonal series specialized at a = b = 1, y_j -> prod (1 + j u_i);
    equals the tuple count divided by d!."""
    d = alpha.size
    if beta.size != d:
        raise ValueError("alpha and beta must have equal size")
    defects = list(defects)
    r = len(defects)
    if cap is None:
        cap = sum(defects)
    ring = u_ring(r, cap)
    asg = constellation_assignment(ring)
    target = tuple(defects)
    coeffs = _schur_coeffs(d)
    total = F(0)
    for lam in partitions_of(d):
        w = specialize(phi_coeff(0, lam), asg, ring).coeff(target)
        if w:
            total += coeffs[lam][alpha] * coeffs[lam][beta] * w
    return total


# ---------------------------------------------------------------------------
# double Hurwitz numbers
# ---------------------------------------------------------------------------


def genus_factor_count(alpha: Partition, beta: Partition, genus: int) -> int:
    """r = len(alpha) + len(beta) + 2g - 2, the number of transposition
    factors."""
    return alpha.length + beta.length + 2 * genus - 2


def hurwitz_oracle(alpha: Partition, beta: Partition, genus: int) -> Fraction:
    """(|Aut alpha| |Aut beta| / d!) times the number of tuples
    sigma gamma tau_1 ... tau_r = id with tau_i transpositions; the walk
    counts are accumulated by dynamic programming over S_d."""
    d = alpha.size
    if beta.size != d or d < 1:
        raise ValueError("need |alpha| = |beta| >= 1")
    r = genus_factor_count(alpha, beta, genus)
    if r < 0:
        return F(0)
    cls = _classes(d)
    transpositions = cls["defect"].get(1, [])
    walks = {identity_perm(d): 1}
    for _ in range(r):
        nxt: dict = {}
        for x, c in walks.items():
            for tau in transpositions:
                y = compose(x, tau)
                nxt[y] = nxt.get(y, 0) + c
        walks = nxt
    b = 0
    for s in cls["type"].get(alpha, []):
        for g in cls["type"].get(beta, []):
            b += walks.get(invert(compose(s, g)), 0)
    return F(alpha.aut_size() * beta.aut_size() * b, factorial(d))


def hurwitz_assignment(ring: PolyRing) -> Assignment:
    """a = b = 1, y_j -> exp(j t) truncated at the ring cap."""
    t = ring.gen("t")
    cache: dict[int, object] = {}

    def val(j):
        if j not in cache:
            cache[j] = truncated_exp(j * t)
        return cache[j]

    return Assignment(y=val, a=1, b=1, y0_sqrt=1)


def hurwitz_number(alpha: Partition, beta: Partition, genus: int) -> Fraction:
    """Series route: |Aut alpha| |Aut beta| r! times the coefficient of
    p_alpha q_beta t^r in the exp(jt)-specialized level-0 series."""
    d = alpha.size
    if beta.size != d or d < 1:
        raise ValueError("need |alpha| = |beta| >= 1")
    r = genus_factor_count(alpha, beta, genus)
    if r < 0:
        return F(0)
    ring = PolyRing([(("t", 0), 1)], r)
    asg = hurwitz_assignment(ring)
    coeffs = _schur_coeffs(d)
    total = F(0)
    for lam in partitions_of(d):
        w = specialize(phi_coeff(0, lam), asg, ring).coeff((r,))
        if w:
            total += coeffs[lam][alpha] * coeffs[lam][beta] * w
    return alpha.aut_size() * beta.aut_size() * factorial(r) * total


# ---------------------------------------------------------------------------
# correlation sums of the diagonal Schur weight
# ---------------------------------------------------------------------------


def maya_contains(lam: Partition, x: int) -> bool:
    """Is x one of the shifted parts lam_i - i (parts of size 0 included)?"""
    if x <= -lam.length - 1:
        return True
    return any(lam.part(k) - k == x for k in range(1, lam.length + 1))


def maya_contains_by_prefix(lam: Partition, xs, shift: int) -> bool:
    """Same containment test for the whole shifted set, but routed through
    an explicit prefix of the shifted-part sequence."""
    if not xs:
        return True
    depth = max(lam.length, shift - min(xs)) + 1
    prefix = set(lam.maya_prefix(depth))
    return all(x - shift in prefix or x - shift <= -depth - 1 for x in xs)


def schur_measure_g(X, n: int, lam: Partition) -> Fraction:
    """Indicator coefficient: 1 when X - n sits inside the shifted-part set
    of lam."""
    return F(1) if all(maya_contains(lam, x - n) for x in X) else F(0)


def schur_measure_family(X) -> FamilyOracle:
    X = frozenset(X)
    return FamilyOracle.from_diagonal(
        lambda n, lam: schur_measure_g(X, n, lam),
        f"correlation indicators at X = {sorted(X)}")


# ---------------------------------------------------------------------------
# unitary-integral character expansion
# ---------------------------------------------------------------------------


def hciz_theta_tilde(n: int) -> Fraction:
    """1 / (1! 2! ... (n-1)!) for n >= 0."""
    if n < 0:
        raise ValueError("level prefactor defined for n >= 0")
    denom = 1
    for i in range(1, n):
        denom *= factorial(i)
    return F(1, denom)


def hciz_coeff(n: int, lam: Partition) -> Fraction:
    """prod over cells of 1/(n + content) when lam has at most n rows,
    else 0 (in particular 0 for every lam when n < 0)."""
    if lam.length > n:
        return F(0)
    out = F(1)
    for c in lam.contents():
        out /= n + c
    return out


def hciz_specialized_phi(n: int, lam: Partition) -> Fraction:
    """The symbolic coefficient pushed through the numeric pipeline: first
    b -> y_0^(-1/2), then a = 1, y_i -> 1/i for i > 0 and 0 otherwise."""
    mono = phi_coeff(n, lam).sub_b_with_y0_pow(-1)
    ring = PolyRing([], 0)
    asg = Assignment(y=lambda i: F(1, i) if i > 0 else ZERO, a=1)
    return specialize(mono, asg, ring).constant()


def hciz_family() -> FamilyOracle:
    def g(n, lam):
        if n < 0:
            return F(0)
        return hciz_theta_tilde(n) * hciz_coeff(n, lam)

    return FamilyOracle.from_diagonal(g, "character-expansion coefficients")


# ---------------------------------------------------------------------------
# specialized diagonal families and the verification entry point
# ---------------------------------------------------------------------------


def _memoized_diagonal(fn, description):
    memo: dict = {}

    def g(n, lam):
        key = (n, lam.parts)
        if key not in memo:
            memo[key] = fn(n, lam)
        return memo[key]

    return FamilyOracle.from_diagonal(g, description)


def constellation_family(r: int = 2, cap: int = 4) -> FamilyOracle:
    ring = u_ring(r, cap)
    asg = constellation_assignment(ring)
    return _memoized_diagonal(
        lambda n, lam: specialize(phi_coeff(n, lam), asg, ring),
        f"u-specialized content coefficients (r={r}, cap={cap})")


def hurwitz_family(cap: int = 4) -> FamilyOracle:
    ring = PolyRing([(("t", 0), 1)], cap)
    asg = hurwitz_assignment(ring)
    return _memoized_diagonal(
        lambda n, lam: specialize(phi_coeff(n, lam), asg, ring),
        f"exp(jt)-specialized content coefficients (cap={cap})")


def _containment_step_check(X, size_bound, window, raise_bound,
                            report: ConstraintReport):
    """The inductive step behind the correlation-family solution property:
    on every size-equation tuple, containment at the outer levels forces
    containment after the up/down moves."""
    X = frozenset(X)
    n0, n1 = window
    for lam in partitions_up_to(size_bound):
        for mu in partitions_up_to(size_bound):
            for n in range(n0, n1 + 1):
                for m in range(n0, n1 + 1):
                    if not all(maya_contains(lam, x - n + 1) for x in X):
                        continue
                    if not all(maya_contains(mu, x - m - 1) for x in X):
                        continue
                    total = lam.size + mu.size - n + m + 1
                    i = 1
                    while True:
                        su = lam.up_size(i)
                        if su > raise_bound or su > total:
                            break
                        for j in solve_down_sizes(mu, total - su):
                            ok = (all(maya_contains(lam.up(i), x - n) for x in X)
                                  and all(maya_contains(mu.down(j), x - m)
                                          for x in X))
                            report.check(
                                {"check": "containment-step", "lam": str(lam),
                                 "mu": str(mu), "n": n, "m": m, "i": i,
                                 "j": j}, ok, True)
                        i += 1


def verify_application(which: str, size_bound: int = 4,
                       window: tuple[int, int] | None = None,
                       raise_bound: int | None = None, cap: int = 4,
                       X=frozenset(), jobs: int = 1) -> ConstraintReport:
    """Run the diagonal-criterion sweep for one application family."""
    if which == "constellations":
        family = constellation_family(cap=cap)
        window = window or (-2, 2)
    elif which == "hurwitz":
        family = hurwitz_family(cap=cap)
        window = window or (-2, 2)
    elif which == "schur-measure":
        family = schur_measure_family(X)
        window = window or (-2, 2)
    elif which == "hciz":
        family = hciz_family()
        window = window or (0, 4)
    else:
        raise ValueError(f"unknown application {which!r}")
    report = diagonal_sweep(family, size_bound, window,
                            raise_bound=raise_bound, jobs=jobs)
    report.params["application"] = which
    if which == "schur-measure":
        bound = raise_bound
        if bound is None:
            bound = 2 * size_bound + (window[1] - window[0])
        _containment_step_check(X, size_bound, window, bound, report)
        report.params["X"] = sorted(X)
    return report
