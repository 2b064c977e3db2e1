"""The Bernstein raising operator, its adjoint, and their coefficient form.

The direct operators are evaluated through complete polynomials:
exp(sum t^k p_k / k) = sum_r h_r(p) t^r and, since the perp generators
commute, exp(-sum t^{-k} p_k^perp / k) = sum_s (h_s(-p))^perp t^{-s}.
On a truncated polynomial both sums are finite, so applying the operator
is a finite double loop.  The coefficient transforms act directly on
Schur-coefficient oracles: the t^e s_beta coefficient of the operator
output picks up a(beta.down(k)) for the unique k matching the exponent
(and a(alpha.up(m)) with an extra sign for the adjoint).

The scalar factor Gamma(q;t) = exp(sum t^i q_i / i) and its inverse are
the same h-sums in the q values; it intertwines the operators with the
alphabet shift p -> p + q, which is the commutation checked in the tests.
"""

from __future__ import annotations

from fractions import Fraction

from .coeffring import CapError, PolyRing, TruncatedPoly
from .hierarchy import CoeffOracle
from .partitions import Partition, solve_down_sizes, solve_up_sizes
from .series import h_poly, perp_apply


class TLaurent:
    """Finite Laurent polynomial in t with ring-element coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        self.coeffs = {}
        if coeffs:
            for e, c in coeffs.items():
                if c:
                    self.coeffs[e] = c

    def coeff(self, e: int):
        return self.coeffs.get(e, Fraction(0))

    def support(self):
        return sorted(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, TLaurent):
            return NotImplemented
        if self.coeffs.keys() != other.coeffs.keys():
            return False
        return all(self.coeffs[e] == other.coeffs[e] for e in self.coeffs)

    def __add__(self, other):
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            nc = out.get(e, 0) + c
            if nc:
                out[e] = nc
            else:
                out.pop(e, None)
        return TLaurent(out)

    def __mul__(self, other):
        out: dict = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                nc = out.get(e, 0) + c1 * c2
                if nc:
                    out[e] = nc
                else:
                    out.pop(e, None)
        return TLaurent(out)

    def scale(self, c):
        return TLaurent({e: c * v for e, v in self.coeffs.items()})

    def clip(self, window: int):
        return TLaurent({e: c for e, c in self.coeffs.items()
                         if -window <= e <= window})

    def map_coeffs(self, fn):
        return TLaurent({e: fn(c) for e, c in self.coeffs.items()})

    def __repr__(self):
        bits = [f"t^{e}: {self.coeffs[e]!r}" for e in self.support()]
        return "TLaurent{" + ", ".join(bits) + "}"


def _window_for(f: TruncatedPoly, window: int | None) -> int:
    need = f.ring.cap + f.max_degree()
    if window is None:
        return need
    if window < need:
        raise CapError(f"window {window} < cap + degree = {need}")
    return window


def bernstein_direct(f: TruncatedPoly, window: int | None = None,
                     alphabet="p") -> TLaurent:
    """Apply the raising operator to a truncated polynomial; the result is
    a finite Laurent polynomial in t with coefficients in f's ring."""
    window = _window_for(f, window)
    return _bernstein(f, window, alphabet, perp_negate=True, mult_negate=False)


def bernstein_adjoint_direct(f: TruncatedPoly, window: int | None = None,
                             alphabet="p") -> TLaurent:
    """The adjoint operator: multiplication and perp exponentials with the
    opposite signs."""
    window = _window_for(f, window)
    return _bernstein(f, window, alphabet, perp_negate=False, mult_negate=True)


def _bernstein(f, window, alphabet, perp_negate, mult_negate) -> TLaurent:
    ring = f.ring
    out = TLaurent()
    pieces = {}
    for s in range(0, f.max_degree() + 1):
        g = perp_apply(h_poly(ring, s, alphabet, negate=perp_negate), f,
                       alphabet)
        if g:
            pieces[s] = g
    for s, g in pieces.items():
        for r in range(0, ring.cap + 1):
            e = r - s
            if -window <= e <= window:
                term = h_poly(ring, r, alphabet, negate=mult_negate) * g
                if term:
                    out = out + TLaurent({e: term})
    return out


def bernstein_coeff(a: CoeffOracle, beta: Partition, e: int):
    """t^e s_beta coefficient of the raising operator applied to the series
    with Schur coefficients a: (-1)^{k-1} a(beta.down(k)) for the unique k
    with |beta| - |beta.down(k)| = e (zero if none)."""
    acc = Fraction(0)
    for k in solve_down_sizes(beta, beta.size - e):
        sign = -1 if (k - 1) % 2 else 1
        acc = acc + sign * a(beta.down(k))
    return acc


def bernstein_coeff_adjoint(a: CoeffOracle, alpha: Partition, e: int):
    """t^e s_alpha coefficient of the adjoint operator output:
    (-1)^{|alpha| - |alpha.up(m)| + m - 1} a(alpha.up(m)) for the unique m
    with |alpha| - |alpha.up(m)| = e."""
    acc = Fraction(0)
    for m in solve_up_sizes(alpha, alpha.size - e):
        sign = -1 if (alpha.size - alpha.up_size(m) + m - 1) % 2 else 1
        acc = acc + sign * a(alpha.up(m))
    return acc


def gamma_scalar(values, window: int, ring: PolyRing,
                 inverse: bool = False) -> TLaurent:
    """exp(sum t^i v_i / i) as a Laurent polynomial with coefficients in
    ``ring``; ``values`` maps i >= 1 to a ring element (or scalar)."""
    if callable(values):
        val = values
    else:
        table = dict(values)
        val = lambda i: table.get(i, 0)  # noqa: E731
    sign = -1 if inverse else 1
    h = [ring.one()]
    for n in range(1, window + 1):
        acc = ring.zero()
        for k in range(1, n + 1):
            v = val(k)
            if isinstance(v, (int, Fraction)):
                v = ring.const(v)
            if v:
                acc = acc + (sign * Fraction(1)) * (v * h[n - k])
        h.append(acc * Fraction(1, n))
    return TLaurent({n: h[n] for n in range(window + 1) if h[n]})
