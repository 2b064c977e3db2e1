"""Content-type coefficient monomials.

``Y(m, k)`` is the product of y_m, y_{m-1}, ..., y_{m-k+1} for k >= 1
(1 for k = 0, and the inverse interval for k <= -1).  ``content_product``
attaches y_{n+content} to every cell of a partition; ``theta`` is the
level prefactor a b^n y_0^(n/2) times a telescoping Y product; their
product ``phi_coeff`` is the canonical diagonal family of 2-Toda
coefficients, exact as a single Laurent monomial.

Note the n < 0 branch of ``theta``: the product runs i = 1..-n over
Y(-i,-i)^{-1}.  This is the unique choice for which the ratio identity
theta_{m+1}/theta_m = b y_0^(1/2) Y(m,m) holds at every m (telescoping),
which the rest of the constraint machinery requires.
"""

from __future__ import annotations

from .coeffring import YMonomial
from .hierarchy import FamilyOracle
from .partitions import Partition


def Y(m: int, k: int) -> YMonomial:
    """Interval product of y symbols ending at index m, signed length k."""
    if k == 0:
        return YMonomial.one()
    if k < 0:
        return Y(m - k, -k).inverse()
    exps: dict[int, int] = {}
    halves = 0
    for j in range(1, k + 1):
        i = m + 1 - j
        if i == 0:
            halves += 2
        else:
            exps[i] = exps.get(i, 0) + 1
    return YMonomial(1, y0_halves=halves, y=exps)


def content_product(lam: Partition, n: int, rowwise: bool = False) -> YMonomial:
    """prod over cells of y_{n + content}; the rowwise flag computes it as
    prod_i Y(lam_i - i + n, lam_i) instead (the two must agree)."""
    if rowwise:
        out = YMonomial.one()
        for i, part in enumerate(lam.parts, start=1):
            out = out * Y(part - i + n, part)
        return out
    exps: dict[int, int] = {}
    halves = 0
    for c in lam.contents():
        i = n + c
        if i == 0:
            halves += 2
        else:
            exps[i] = exps.get(i, 0) + 1
    return YMonomial(1, y0_halves=halves, y=exps)


def theta(n: int) -> YMonomial:
    """Level prefactor a b^n y_0^(n/2) times the telescoping Y product."""
    out = YMonomial(1, a=1, b=n, y0_halves=n)
    if n > 0:
        for i in range(1, n):
            out = out * Y(i, i)
    elif n < 0:
        for i in range(1, -n + 1):
            out = out * Y(-i, -i).inverse()
    return out


_phi_cache: dict[tuple[int, tuple], YMonomial] = {}


def phi_coeff(n: int, lam: Partition) -> YMonomial:
    """Diagonal coefficient g_lam(n) = theta(n) * content_product(lam, n)."""
    key = (n, lam.parts)
    out = _phi_cache.get(key)
    if out is None:
        out = theta(n) * content_product(lam, n)
        _phi_cache[key] = out
    return out


def phi_family() -> FamilyOracle:
    """The content-type diagonal family as an oracle."""
    return FamilyOracle.from_diagonal(phi_coeff, "content-type series")
