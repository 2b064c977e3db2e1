"""Polynomial algebra in the power-sum generators.

All series live in a ``PolyRing`` whose variables are power sums p_k
(weight k), optionally alongside a second alphabet q_k.  The complete
polynomials h_i obey the Newton-style recurrence i*h_i = sum p_k h_{i-k};
Schur polynomials are the h-determinants; the inner product makes them
orthonormal, which on power-sum monomials means <p_lam, p_mu> =
delta * z_lam with z_lam = prod j^{m_j} m_j!.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .coeffring import CapError, PolyRing, TruncatedPoly
from .partitions import Partition, partitions_up_to


def power_sum_ring(cap: int, alphabets=("p",), extra=()) -> PolyRing:
    """Ring with generators k=1..cap for each alphabet (weight k), plus
    weight-1 extras like ("t", 0) or ("u", i)."""
    variables = [((kind, k), k) for kind in alphabets for k in range(1, cap + 1)]
    variables.extend((v, 1) for v in extra)
    return PolyRing(variables, cap)


def h_poly(ring: PolyRing, i: int, alphabet="p", negate=False) -> TruncatedPoly:
    """Complete polynomial h_i in the given alphabet (h_i(-p) if negate)."""
    if i < 0:
        return ring.zero()
    if i > ring.cap:
        raise CapError(f"h_{i} exceeds cap {ring.cap}")
    cache = ring.cache(("h", alphabet, negate))
    if i in cache:
        return cache[i]
    sign = -1 if negate else 1
    for n in range(len(cache), i + 1):
        if n == 0:
            cache[0] = ring.one()
            continue
        acc = ring.zero()
        for k in range(1, n + 1):
            acc = acc + sign * ring.gen(alphabet, k) * cache[n - k]
        cache[n] = acc * Fraction(1, n)
    return cache[i]


def schur_poly(ring: PolyRing, lam: Partition, alphabet="p") -> TruncatedPoly:
    """Schur polynomial as the determinant det(h_{lam_i - i + j})."""
    if lam.size > ring.cap:
        raise CapError(f"s_{lam} exceeds cap {ring.cap}")
    cache = ring.cache(("schur", alphabet))
    if lam in cache:
        return cache[lam]
    n = lam.length
    if n == 0:
        out = ring.one()
    else:
        rows = [[h_poly(ring, lam.part(r) - r + c, alphabet)
                 for c in range(1, n + 1)] for r in range(1, n + 1)]
        out = _det(ring, rows)
    cache[lam] = out
    return out


def _det(ring, rows):
    """Determinant by column-by-column minor expansion over row subsets."""
    n = len(rows)
    minors = {(): ring.one()}
    for col in range(n):
        nxt = {}
        for used, val in minors.items():
            if not val:
                continue
            for r in range(n):
                if r in used:
                    continue
                entry = rows[r][col]
                if not entry:
                    continue
                above = sum(1 for s in used if s < r)
                sign = -1 if (above + len(used)) % 2 else 1
                key = tuple(sorted(used + (r,)))
                term = (sign * val) * entry
                nxt[key] = nxt.get(key, ring.zero()) + term
        minors = nxt
    return minors.get(tuple(range(n)), ring.zero())


def z_factor(lam: Partition) -> int:
    """Size of the centralizer of a permutation of cycle type lam."""
    out = 1
    mult: dict[int, int] = {}
    for p in lam.parts:
        mult[p] = mult.get(p, 0) + 1
    for j, m in mult.items():
        out *= j ** m * factorial(m)
    return out


def exps_to_partition(ring: PolyRing, exps, alphabet="p") -> Partition:
    """Cycle type of a power-sum monomial: exponent e of p_k gives k^e."""
    parts = []
    for v, e in zip(ring.vars, exps):
        if e and v[0] == alphabet:
            parts.extend([v[1]] * e)
    return Partition(sorted(parts, reverse=True))


def partition_to_exps(ring: PolyRing, lam: Partition, alphabet="p") -> tuple:
    exps = [0] * len(ring.vars)
    for p in lam.parts:
        exps[ring.index[(alphabet, p)]] += 1
    return tuple(exps)


def p_monomial(ring: PolyRing, lam: Partition, alphabet="p") -> TruncatedPoly:
    """The power-sum monomial p_lam."""
    return ring.monomial(partition_to_exps(ring, lam, alphabet))


def _split_exps(ring, exps):
    """Split an exponent vector into per-alphabet power-sum cycle types;
    errors if any non-power-sum variable appears."""
    parts: dict[str, list[int]] = {}
    for v, e in zip(ring.vars, exps):
        if not e:
            continue
        kind, idx = v
        if idx < 1:
            raise CapError(f"variable {ring.var_name(v)} has no inner-product weight")
        parts.setdefault(kind, []).extend([idx] * e)
    return {k: Partition(sorted(v, reverse=True)) for k, v in parts.items()}


def inner_product(f: TruncatedPoly, g: TruncatedPoly):
    """<f, g> = sum over power-sum monomials of f_m * g_m * prod z; exact."""
    if not f.ring.compatible(g.ring):
        raise CapError("inner product needs a shared ring")
    acc = 0
    for e, c in f.terms.items():
        d = g.terms.get(e)
        if d is None:
            continue
        z = 1
        for lam in _split_exps(f.ring, e).values():
            z *= z_factor(lam)
        acc = acc + c * d * z
    return acc if acc else Fraction(0)


def to_schur_basis(f: TruncatedPoly, alphabet="p") -> dict[Partition, object]:
    """Expand f (univariate in the given alphabet) over Schur polynomials."""
    out: dict[Partition, object] = {}
    for lam in partitions_up_to(f.ring.cap):
        s = schur_poly(f.ring, lam, alphabet)
        c = inner_product(f, s)
        if c:
            out[lam] = c
    return out


def to_schur_basis_pq(f: TruncatedPoly):
    """Expand a two-alphabet polynomial over s_lam(p) s_mu(q) pairs."""
    ring = f.ring
    out: dict[tuple[Partition, Partition], object] = {}
    # group the terms of f by (p cycle type, q cycle type)
    grouped: dict[tuple[Partition, Partition], object] = {}
    for e, c in f.terms.items():
        split = _split_exps(ring, e)
        key = (split.get("p", Partition()), split.get("q", Partition()))
        grouped[key] = grouped.get(key, 0) + c
    # coefficient of s_lam s_mu = sum over monomials of c * S(lam)_a * S(mu)_b * z_a z_b
    schur_rows: dict[str, dict[Partition, dict[Partition, Fraction]]] = {}
    for kind in ("p", "q"):
        rows = {}
        for lam in partitions_up_to(ring.cap):
            s = schur_poly(ring, lam, kind)
            rows[lam] = {exps_to_partition(ring, e, kind): c
                         for e, c in s.terms.items()}
        schur_rows[kind] = rows
    for lam in partitions_up_to(ring.cap):
        for mu in partitions_up_to(ring.cap - lam.size):
            acc = 0
            for (alpha, beta), c in grouped.items():
                ca = schur_rows["p"][lam].get(alpha)
                cb = schur_rows["q"][mu].get(beta)
                if ca and cb:
                    acc = acc + c * (ca * cb * z_factor(alpha) * z_factor(beta))
            if acc:
                out[(lam, mu)] = acc
    return out


def schur_table_json(table: dict) -> list:
    """JSON form of a Schur-coefficient table, deterministically ordered."""
    from .coeffring import element_json

    out = []
    for lam in sorted(table, key=lambda l: l.sort_key()):
        out.append({"partition": lam.as_json(),
                    "coeff": element_json(table[lam])})
    return out


def perp_apply(f: TruncatedPoly, g: TruncatedPoly, alphabet="p") -> TruncatedPoly:
    """Adjoint of multiplication by f: substitute p_k -> k d/dp_k in f and
    apply the resulting differential operator to g."""
    if not f.ring.compatible(g.ring):
        raise CapError("perp needs a shared ring")
    ring = g.ring
    out = ring.zero()
    for e, c in f.terms.items():
        term = g
        for v, exp in zip(ring.vars, e):
            if not exp:
                continue
            kind, k = v
            if kind != alphabet:
                raise CapError(f"perp polynomial uses foreign variable {ring.var_name(v)}")
            for _ in range(exp):
                term = k * term.derivative(kind, k)
                if not term:
                    break
            if not term:
                break
        out = out + c * term
    return out


def schur_perp(lam: Partition, g: TruncatedPoly, alphabet="p") -> TruncatedPoly:
    return perp_apply(schur_poly(g.ring, lam, alphabet), g, alphabet)


def translate(f: TruncatedPoly, target: PolyRing, src="p", shift="q") -> TruncatedPoly:
    """Shift of alphabet: substitute p_k -> p_k + q_k, landing in target."""
    mapping = {}
    for v in f.ring.vars:
        kind, k = v
        if kind == src:
            mapping[v] = target.gen(src, k) + target.gen(shift, k)
    return f.substitute(mapping, target)
