"""Coefficient constraints for the KP and 2-Toda hierarchies.

A univariate series sum a_lam s_lam(p) solves KP iff for every pair
(alpha, beta) the signed sum of a(alpha.up(i)) * a(beta.down(j)) over
index pairs with |alpha.up(i)| + |beta.down(j)| = |alpha| + |beta| + 1
vanishes.  A two-alphabet family a^lam_mu(n) solves 2-Toda iff the
analogous bilinear identities relating levels m and k hold; for diagonal
families they collapse to the single product identity
g(n, lam.up(i)) * g(m, mu.down(j)) = g(n-1, lam) * g(m+1, mu) on tuples
satisfying the size equation.  Every check here is an exact ring
identity: "pass" means literal equality.

All index sums are finite because the up/down sizes are strictly
increasing, so each target size is hit by at most one index.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from .coeffring import element_json
from .partitions import Partition, partitions_up_to, solve_down_sizes
from .series import power_sum_ring, schur_perp, schur_poly


class ReconstructionError(Exception):
    """Boundary-data reconstruction hit a zero divisor or missing data."""


class CoeffOracle:
    """Total map Partition -> ring element, with a description tag."""

    def __init__(self, fn, description=""):
        self.fn = fn
        self.description = description

    def __call__(self, lam: Partition):
        return self.fn(lam)

    @classmethod
    def delta(cls, nu: Partition):
        return cls(lambda lam: Fraction(1 if lam == nu else 0),
                   f"delta at {nu or 'eps'}")

    @classmethod
    def from_table(cls, table: dict, description=""):
        return cls(lambda lam: table.get(lam, Fraction(0)), description)


def exp_p1_oracle() -> CoeffOracle:
    """Schur coefficients of exp(p_1): a(lam) = 1 over the hook product
    (the number of standard fillings divided by |lam|!)."""
    return CoeffOracle(lambda lam: Fraction(1, lam.hook_product()), "exp(p1)")


class FamilyOracle:
    """Level-indexed bivariate coefficients a^lam_mu(n); diagonal families
    carry g with a^lam_mu(n) = g(n, lam) * delta_{lam,mu}."""

    def __init__(self, eval_fn, diagonal=False, diag_fn=None, description=""):
        self._eval = eval_fn
        self.diagonal = diagonal
        self._diag = diag_fn
        self.description = description

    @classmethod
    def from_diagonal(cls, g, description=""):
        def ev(n, lam, mu):
            return g(n, lam) if lam == mu else Fraction(0)

        return cls(ev, diagonal=True, diag_fn=g, description=description)

    @classmethod
    def from_bivariate(cls, fn, description=""):
        return cls(fn, diagonal=False, description=description)

    def eval(self, n: int, lam: Partition, mu: Partition):
        return self._eval(n, lam, mu)

    def diag(self, n: int, lam: Partition):
        if not self.diagonal:
            raise ValueError("not a diagonal family")
        return self._diag(n, lam)


class ConstraintReport:
    """Outcome of a constraint sweep: total tuples checked plus the
    failing ones with both sides recorded."""

    def __init__(self, identity: str, params: dict):
        self.identity = identity
        self.params = params
        self.total = 0
        self.failures: list[dict] = []

    def check(self, tup: dict, lhs, rhs) -> bool:
        self.total += 1
        ok = lhs == rhs
        if not ok:
            self.failures.append({"tuple": tup, "lhs": lhs, "rhs": rhs})
        return ok

    @property
    def ok(self) -> bool:
        return not self.failures

    def merge(self, other: "ConstraintReport"):
        self.total += other.total
        self.failures.extend(other.failures)
        return self

    def as_json(self):
        return {
            "identity": self.identity,
            "params": self.params,
            "total": self.total,
            "failures": [
                {"tuple": f["tuple"], "lhs": element_json(f["lhs"]),
                 "rhs": element_json(f["rhs"])}
                for f in self.failures
            ],
        }

    def summary(self) -> str:
        word = "PASS" if self.ok else "FAIL"
        return (f"{word} {self.identity}: {self.total} tuples, "
                f"{len(self.failures)} failures")


# ---------------------------------------------------------------------------
# KP
# ---------------------------------------------------------------------------


def kp_constraint(a: CoeffOracle, alpha: Partition, beta: Partition):
    """Signed bilinear sum for one (alpha, beta) pair; zero iff satisfied."""
    target = alpha.size + beta.size + 1
    acc = Fraction(0)
    i = 1
    while True:
        su = alpha.up_size(i)
        if su > target:
            break
        for j in solve_down_sizes(beta, target - su):
            sign = -1 if (alpha.size - su + i + j) % 2 else 1
            acc = acc + sign * (a(alpha.up(i)) * a(beta.down(j)))
        i += 1
    return acc


def kp_sweep(a: CoeffOracle, size_bound: int, jobs: int = 1) -> ConstraintReport:
    report = ConstraintReport("kp", {"size_bound": size_bound,
                                     "oracle": a.description})
    pool = partitions_up_to(size_bound)

    def work(alpha):
        sub = ConstraintReport("kp", {})
        for beta in pool:
            sub.check({"alpha": str(alpha), "beta": str(beta)},
                      kp_constraint(a, alpha, beta), Fraction(0))
        return sub

    for sub in _map_jobs(work, pool, jobs):
        report.merge(sub)
    return report


# ---------------------------------------------------------------------------
# 2-Toda, general coefficient form
# ---------------------------------------------------------------------------


def toda_constraint(F: FamilyOracle, m: int, k: int, alpha: Partition,
                    beta: Partition, lam: Partition, mu: Partition):
    """Both sides of the bilinear identity tying levels (m, k+1) to
    (m+1, k); returns (lhs, rhs)."""
    lhs_target = lam.size + alpha.size + m - k
    lhs = Fraction(0)
    j = 1
    while True:
        sj = alpha.up_size(j)
        if sj > lhs_target:
            break
        for i in solve_down_sizes(lam, lhs_target - sj):
            sign = -1 if (alpha.size - sj + i + j) % 2 else 1
            lhs = lhs + sign * (F.eval(m, lam.down(i), mu)
                                * F.eval(k + 1, alpha.up(j), beta))
        j += 1
    rhs_target = mu.size + beta.size + k - m
    rhs = Fraction(0)
    s = 1
    while True:
        ss = mu.up_size(s)
        if ss > rhs_target:
            break
        for t in solve_down_sizes(beta, rhs_target - ss):
            sign = -1 if (mu.size - ss + s + t) % 2 else 1
            rhs = rhs + sign * (F.eval(m + 1, lam, mu.up(s))
                                * F.eval(k, alpha, beta.down(t)))
        s += 1
    return lhs, rhs


def toda_sweep(F: FamilyOracle, size_bound: int, window: tuple[int, int],
               jobs: int = 1) -> ConstraintReport:
    n0, n1 = window
    report = ConstraintReport("toda", {"size_bound": size_bound,
                                       "window": [n0, n1],
                                       "family": F.description})
    pool = partitions_up_to(size_bound)
    levels = range(n0, n1 + 1)

    def work(lam):
        sub = ConstraintReport("toda", {})
        for mu in pool:
            for alpha in pool:
                for beta in pool:
                    for m in levels:
                        for k in levels:
                            lhs, rhs = toda_constraint(F, m, k, alpha, beta,
                                                       lam, mu)
                            sub.check(
                                {"m": m, "k": k, "alpha": str(alpha),
                                 "beta": str(beta), "lam": str(lam),
                                 "mu": str(mu)}, lhs, rhs)
        return sub

    for sub in _map_jobs(work, pool, jobs):
        report.merge(sub)
    return report


# ---------------------------------------------------------------------------
# diagonal criterion
# ---------------------------------------------------------------------------


def diagonal_constraint(F: FamilyOracle, lam: Partition, mu: Partition,
                        n: int, m: int, i: int, j: int):
    """Product identity for one tuple; the size equation is a precondition."""
    if lam.size + mu.size != lam.up_size(i) + mu.down_size(j) + n - m - 1:
        raise ValueError("tuple violates the size equation")
    g = F.diag
    lhs = g(n, lam.up(i)) * g(m, mu.down(j))
    rhs = g(n - 1, lam) * g(m + 1, mu)
    return lhs, rhs


def diagonal_sweep(F: FamilyOracle, size_bound: int, window: tuple[int, int],
                   raise_bound: int | None = None, jobs: int = 1) -> ConstraintReport:
    """Check every diagonal-criterion tuple with |lam|, |mu| <= size_bound,
    levels in the window, and |lam.up(i)|, |mu.down(j)| <= raise_bound."""
    n0, n1 = window
    if raise_bound is None:
        raise_bound = 2 * size_bound + (n1 - n0)
    report = ConstraintReport(
        "diagonal", {"size_bound": size_bound, "window": [n0, n1],
                     "raise_bound": raise_bound, "family": F.description})
    pool = partitions_up_to(size_bound)
    levels = range(n0, n1 + 1)

    def work(lam):
        sub = ConstraintReport("diagonal", {})
        for mu in pool:
            for n in levels:
                for m in levels:
                    total = lam.size + mu.size - n + m + 1
                    i = 1
                    while True:
                        su = lam.up_size(i)
                        if su > raise_bound or su > total:
                            break
                        if total - su <= raise_bound:
                            for j in solve_down_sizes(mu, total - su):
                                lhs, rhs = diagonal_constraint(
                                    F, lam, mu, n, m, i, j)
                                sub.check(
                                    {"lam": str(lam), "mu": str(mu), "n": n,
                                     "m": m, "i": i, "j": j}, lhs, rhs)
                        i += 1
        return sub

    for sub in _map_jobs(work, pool, jobs):
        report.merge(sub)
    return report


def _map_jobs(work, items, jobs):
    if jobs and jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(work, items))
    return [work(item) for item in items]


# ---------------------------------------------------------------------------
# operator (differential) forms on truncated expansions
# ---------------------------------------------------------------------------


def family_expand(F: FamilyOracle, n: int, ring, alphabets=("p", "q")):
    """tau_n as a truncated two-alphabet polynomial: sum of coefficients
    times s_lam s_mu over supports within the ring cap."""
    first, second = alphabets
    acc = ring.zero()
    cap = ring.cap
    if F.diagonal:
        for lam in partitions_up_to(cap // 2):
            c = F.diag(n, lam)
            if c:
                acc = acc + c * (schur_poly(ring, lam, first)
                                 * schur_poly(ring, lam, second))
        return acc
    for lam in partitions_up_to(cap):
        for mu in partitions_up_to(cap - lam.size):
            c = F.eval(n, lam, mu)
            if c:
                acc = acc + c * (schur_poly(ring, lam, first)
                                 * schur_poly(ring, mu, second))
    return acc


def kp_definition_residual(a: CoeffOracle, cap: int):
    """The defining bilinear product of the KP hierarchy on a truncated
    expansion: the t^{-1} coefficient of (B tau)(p) times (B-adjoint tau)(q),
    a two-alphabet polynomial that vanishes up to the cap for solutions.

    The t^{-1} extraction reaches coefficients one size above any retained
    output degree, so the expansions run with one degree of headroom."""
    from .bernstein import bernstein_adjoint_direct, bernstein_direct

    ring = power_sum_ring(cap + 1, alphabets=("p", "q"))
    tau_p = ring.zero()
    tau_q = ring.zero()
    for lam in partitions_up_to(ring.cap):
        c = a(lam)
        if c:
            tau_p = tau_p + c * schur_poly(ring, lam, "p")
            tau_q = tau_q + c * schur_poly(ring, lam, "q")
    product = (bernstein_direct(tau_p, alphabet="p")
               * bernstein_adjoint_direct(tau_q, alphabet="q"))
    out = product.coeff(-1)
    if isinstance(out, Fraction):
        return ring.const(out)
    return out.truncate(cap)


def toda_definition_residual(F: FamilyOracle, m: int, k: int, cap: int):
    """The defining bilinear identity of the 2-Toda hierarchy at levels
    (m, k), evaluated on truncated four-alphabet expansions: the t^{k-m}
    coefficient of (B_p tau_m)(B-adjoint_w tau_{k+1}) minus the t^{m-k}
    coefficient of (B-adjoint_q tau_{m+1})(B_z tau_k).

    The level gap shifts the sizes reached by the t extraction, so the
    expansions carry |m - k| degrees of headroom before truncating back."""
    from .bernstein import bernstein_adjoint_direct, bernstein_direct

    ring = power_sum_ring(cap + abs(m - k), alphabets=("p", "q", "w", "z"))
    tau_m = family_expand(F, m, ring, alphabets=("p", "q"))
    tau_k1 = family_expand(F, k + 1, ring, alphabets=("w", "z"))
    tau_m1 = family_expand(F, m + 1, ring, alphabets=("p", "q"))
    tau_k = family_expand(F, k, ring, alphabets=("w", "z"))
    lhs = (bernstein_direct(tau_m, alphabet="p")
           * bernstein_adjoint_direct(tau_k1, alphabet="w")).coeff(k - m)
    rhs = (bernstein_adjoint_direct(tau_m1, alphabet="q")
           * bernstein_direct(tau_k, alphabet="z")).coeff(m - k)
    out = lhs - rhs
    if isinstance(out, Fraction):
        return ring.const(out)
    return out.truncate(cap)


def toda_equation_residual(F: FamilyOracle, m: int, cap: int):
    """tau_{m+1} tau_{m-1} + (d tau_m/dp_1)(d tau_m/dq_1)
    - tau_m d^2 tau_m/dp_1 dq_1, truncated to the cap (zero for solutions)."""
    ring = power_sum_ring(cap + 2, alphabets=("p", "q"))
    tm = family_expand(F, m, ring)
    tplus = family_expand(F, m + 1, ring)
    tminus = family_expand(F, m - 1, ring)
    resid = (tplus * tminus
             + tm.derivative("p", 1) * tm.derivative("q", 1)
             - tm * tm.derivative("p", 1).derivative("q", 1))
    return resid.truncate(cap)


def _index_pairs(down_part: Partition, up_part: Partition, target: int):
    """All (i, j) with |down_part.down(i)| + |up_part.up(j)| == target."""
    out = []
    j = 1
    while True:
        sj = up_part.up_size(j)
        if sj > target:
            break
        for i in solve_down_sizes(down_part, target - sj):
            out.append((i, j))
        j += 1
    return out


def subhierarchy_residual(F: FamilyOracle, m: int, r: int, lam: Partition,
                          alpha: Partition, cap: int, alphabet="p"):
    """Signed sum of (s^perp_{lam.down(i)} tau_m)(s^perp_{alpha.up(j)}
    tau_{m-r+1}) over |lam.down(i)| + |alpha.up(j)| = |lam| + |alpha| + r,
    with the perp operators acting in one alphabet; zero for solutions.
    With r = 1 this is the KP residual of tau_m in that alphabet."""
    if r < 1:
        raise ValueError("r must be >= 1")
    pairs = _index_pairs(lam, alpha, lam.size + alpha.size + r)
    margin = 0
    for i, j in pairs:
        margin = max(margin, lam.down_size(i), alpha.up_size(j))
    ring = power_sum_ring(cap + margin, alphabets=("p", "q"))
    tau_m = family_expand(F, m, ring)
    tau_k = family_expand(F, m - r + 1, ring)
    acc = ring.zero()
    for i, j in pairs:
        sign = -1 if (alpha.size + alpha.up_size(j) + i + j) % 2 else 1
        term = (schur_perp(lam.down(i), tau_m, alphabet)
                * schur_perp(alpha.up(j), tau_k, alphabet))
        acc = acc + sign * term
    return acc.truncate(cap)


def toda_operator_residual(F: FamilyOracle, m: int, k: int, alpha: Partition,
                           beta: Partition, lam: Partition, mu: Partition,
                           cap: int):
    """Difference of the two differential-form sums of the 2-Toda bilinear
    identity, truncated to the cap; zero (up to the cap) for solutions."""
    lhs_pairs = _index_pairs(lam, alpha, lam.size + alpha.size + m - k)
    rhs_pairs = _index_pairs(beta, mu, mu.size + beta.size + k - m)
    margin = 0
    for i, j in lhs_pairs:
        margin = max(margin, lam.down_size(i) + mu.size,
                     alpha.up_size(j) + beta.size)
    for t, s in rhs_pairs:
        margin = max(margin, lam.size + mu.up_size(s),
                     alpha.size + beta.down_size(t))
    ring = power_sum_ring(cap + margin, alphabets=("p", "q"))
    taus = {lvl: family_expand(F, lvl, ring) for lvl in (m, m + 1, k, k + 1)}
    acc = ring.zero()
    for i, j in lhs_pairs:
        sign = -1 if (alpha.size - alpha.up_size(j) + i + j) % 2 else 1
        term = (schur_perp(mu, schur_perp(lam.down(i), taus[m], "p"), "q")
                * schur_perp(beta, schur_perp(alpha.up(j), taus[k + 1], "p"), "q"))
        acc = acc + sign * term
    for t, s in rhs_pairs:
        sign = -1 if (mu.size - mu.up_size(s) + s + t) % 2 else 1
        term = (schur_perp(mu.up(s), schur_perp(lam, taus[m + 1], "p"), "q")
                * schur_perp(beta.down(t), schur_perp(alpha, taus[k], "p"), "q"))
        acc = acc - sign * term
    return acc.truncate(cap)


# ---------------------------------------------------------------------------
# reconstruction from boundary data
# ---------------------------------------------------------------------------


def _as_fn(seq):
    if callable(seq):
        return seq

    def fn(i):
        if i < len(seq):
            return seq[i]
        raise ReconstructionError(f"boundary data exhausted at index {i}")

    return fn


def reconstruct(row, col, g_eps0, g_eps1) -> FamilyOracle:
    """Rebuild a diagonal family from its one-row/one-column level-0 data.

    ``row(m)`` is the coefficient of the single-row partition (m) at level
    0 and ``col(m)`` that of the single-column partition 1^m; ``g_eps0``
    and ``g_eps1`` are the empty-partition coefficients at levels 0 and 1.
    Levels move toward 0 one step at a time, trading the first part (or
    first column) against the boundary data; the remainder partition is
    strictly smaller, so the recursion terminates.  Any division by zero
    raises ReconstructionError.
    """
    row = _as_fn(row)
    col = _as_fn(col)
    if not g_eps0:
        raise ReconstructionError("empty-partition coefficient at level 0 is zero")
    if not row(1):
        raise ReconstructionError("single-box coefficient at level 0 is zero")
    memo: dict[tuple[int, tuple], object] = {}

    def div(num, den, what):
        if not den:
            raise ReconstructionError(f"zero divisor while computing {what}")
        try:
            return num / den
        except ZeroDivisionError as exc:
            raise ReconstructionError(f"zero divisor while computing {what}") from exc

    def g(n: int, lam: Partition):
        key = (n, lam.parts)
        if key in memo:
            return memo[key]
        if n == 0:
            if lam.length == 0:
                out = g_eps0
            elif lam.length == 1:
                out = row(lam.part(1))
            elif lam.part(1) == 1:
                out = col(lam.length)
            else:
                eta = Partition(lam.parts[1:])
                out = div(row(lam.part(1)) * g(-1, eta), g(-1, Partition()),
                          f"level 0 value at {lam}")
        elif n == 1 and lam.length == 0:
            out = g_eps1
        elif n >= 1:
            eta = Partition(lam.parts[1:])
            out = div(row(lam.part(1) + n) * g(n - 1, eta), g(-1, Partition()),
                      f"level {n} value at {lam or 'eps'}")
        else:
            s = lam.length
            eta = Partition(p - 1 for p in lam.parts)
            out = div(col(s - n) * g(n + 1, eta), g_eps1,
                      f"level {n} value at {lam or 'eps'}")
        memo[key] = out
        return out

    return FamilyOracle.from_diagonal(g, "reconstructed from boundary data")
