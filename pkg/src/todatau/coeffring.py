"""Exact coefficient arithmetic.

Three layers, all over ``fractions.Fraction``:

* ``YMonomial``: a rational scalar times a Laurent monomial in the formal
  symbols a, b and y_i (i any integer).  The y_0 exponent is tracked in
  half-integer units (an integer count of halves), because the level
  prefactors of the diagonal series live in y_0^(n/2).
* ``YPolynomial``: a finite sum of such monomials (needed as soon as
  constraint residuals are accumulated).
* ``TruncatedPoly``: a sparse multivariate polynomial over a ``PolyRing``
  with weighted variables and a hard degree cap; arithmetic is computed in
  the quotient by terms of weighted degree above the cap, so truncated
  inverses and exponentials are exact up to the cap.

``specialize`` maps monomials into a ``TruncatedPoly`` ring through an
``Assignment`` of values to a, b and the y_i.
"""

from __future__ import annotations

from fractions import Fraction


class CoefficientError(Exception):
    """Base class for exact-arithmetic failures."""


class SingularSpecialization(CoefficientError):
    """A negative exponent met an index assigned ZERO (or a non-unit)."""


class FractionalExponent(CoefficientError):
    """A half-integer y_0 exponent survived with no square-root value."""


class VariableMismatch(CoefficientError):
    """Operands live in incompatible polynomial rings."""


class CapError(CoefficientError):
    """Requested data above the ring's degree cap."""


def frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def fraction_json(x) -> str:
    x = frac(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def fraction_from_json(s: str) -> Fraction:
    return Fraction(s)


# ---------------------------------------------------------------------------
# Laurent monomials and polynomials in a, b, y_i
# ---------------------------------------------------------------------------


def _merge_y(y1, y2, flip=1):
    out = dict(y1)
    for i, e in y2:
        ne = out.get(i, 0) + flip * e
        if ne:
            out[i] = ne
        else:
            del out[i]
    return tuple(sorted(out.items()))


class YMonomial:
    """scalar * a^ea * b^eb * y_0^(halves/2) * prod y_i^e_i (zero is canonical)."""

    __slots__ = ("scalar", "a", "b", "y0_halves", "y")

    def __init__(self, scalar=1, a=0, b=0, y0_halves=0, y=()):
        scalar = frac(scalar)
        if scalar == 0:
            self.scalar = Fraction(0)
            self.a = self.b = self.y0_halves = 0
            self.y = ()
            return
        self.scalar = scalar
        self.a = a
        self.b = b
        self.y0_halves = y0_halves
        if isinstance(y, dict):
            y = y.items()
        pairs = tuple(sorted((i, e) for i, e in y if e))
        for i, _ in pairs:
            if i == 0:
                raise ValueError("y_0 belongs in y0_halves, not in the y map")
        self.y = pairs

    # -- constructors ---------------------------------------------------

    @classmethod
    def one(cls):
        return cls(1)

    @classmethod
    def zero(cls):
        return cls(0)

    @classmethod
    def y_var(cls, i, exp=1):
        if i == 0:
            return cls(1, y0_halves=2 * exp)
        return cls(1, y={i: exp})

    def signature(self):
        return (self.a, self.b, self.y0_halves, self.y)

    # -- predicates -------------------------------------------------------

    def __bool__(self):
        return self.scalar != 0

    def is_scalar(self):
        return not (self.a or self.b or self.y0_halves or self.y)

    # -- arithmetic --------------------------------------------------------

    def __mul__(self, other):
        if isinstance(other, YMonomial):
            s = self.scalar * other.scalar
            if s == 0:
                return _Y_ZERO
            return YMonomial(s, self.a + other.a, self.b + other.b,
                             self.y0_halves + other.y0_halves,
                             _merge_y(self.y, other.y))
        if isinstance(other, YPolynomial):
            return other.__rmul__(self)
        if isinstance(other, (int, Fraction)):
            return YMonomial(self.scalar * other, self.a, self.b,
                             self.y0_halves, self.y)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            other = YMonomial(other)
        if not isinstance(other, YMonomial):
            return NotImplemented
        if other.scalar == 0:
            raise ZeroDivisionError("division by the zero monomial")
        return YMonomial(self.scalar / other.scalar, self.a - other.a,
                         self.b - other.b, self.y0_halves - other.y0_halves,
                         _merge_y(self.y, other.y, flip=-1))

    def __pow__(self, e: int):
        if self.scalar == 0:
            if e <= 0:
                raise ZeroDivisionError("0 to a non-positive power")
            return _Y_ZERO
        return YMonomial(self.scalar ** e, self.a * e, self.b * e,
                         self.y0_halves * e,
                         tuple((i, ex * e) for i, ex in self.y))

    def inverse(self):
        return self ** -1

    def __neg__(self):
        return YMonomial(-self.scalar, self.a, self.b, self.y0_halves, self.y)

    def __add__(self, other):
        return YPolynomial.from_terms([self]) + other

    __radd__ = __add__

    def __sub__(self, other):
        return YPolynomial.from_terms([self]) - other

    def __rsub__(self, other):
        return (-self) + other

    def sub_b_with_y0_pow(self, halves_per_b: int) -> "YMonomial":
        """Replace b by y_0 raised to halves_per_b half-units (b -> y_0^(h/2))."""
        if not self:
            return self
        return YMonomial(self.scalar, self.a, 0,
                         self.y0_halves + self.b * halves_per_b, self.y)

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, YMonomial):
            return (self.scalar == other.scalar
                    and self.signature() == other.signature())
        if isinstance(other, (int, Fraction)):
            return self.is_scalar() and self.scalar == other
        if isinstance(other, YPolynomial):
            return other == self
        return NotImplemented

    def __hash__(self):
        return hash((self.scalar, self.a, self.b, self.y0_halves, self.y))

    # -- display --------------------------------------------------------------

    def __repr__(self):
        if not self:
            return "YMonomial(0)"
        bits = []
        for sym, e in (("a", self.a), ("b", self.b)):
            if e:
                bits.append(f"{sym}^{e}" if e != 1 else sym)
        if self.y0_halves:
            h = self.y0_halves
            bits.append(f"y0^{h // 2}" if h % 2 == 0 else f"y0^{h}/2")
        for i, e in self.y:
            name = f"y{i}" if i > 0 else f"y({i})"
            bits.append(f"{name}^{e}" if e != 1 else name)
        if self.scalar != 1 or not bits:
            bits.insert(0, str(self.scalar))
        return "*".join(bits)

    def as_json(self):
        return {
            "scalar": fraction_json(self.scalar),
            "a": self.a,
            "b": self.b,
            "y0_halves": self.y0_halves,
            "y": {str(i): e for i, e in self.y},
        }


_Y_ZERO = YMonomial(0)


class YPolynomial:
    """Finite sum of YMonomials, keyed by exponent signature."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for sig, c in terms.items():
                c = frac(c)
                if c:
                    self.terms[sig] = c

    @classmethod
    def from_terms(cls, monomials):
        out = cls()
        for m in monomials:
            if isinstance(m, (int, Fraction)):
                m = YMonomial(m)
            if not m:
                continue
            sig = m.signature()
            c = out.terms.get(sig, Fraction(0)) + m.scalar
            if c:
                out.terms[sig] = c
            else:
                out.terms.pop(sig, None)
        return out

    def monomials(self):
        return [YMonomial(c, *sig[:3], sig[3])
                for sig, c in sorted(self.terms.items())]

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = YMonomial(other)
        if isinstance(other, YMonomial):
            other = YPolynomial.from_terms([other])
        if not isinstance(other, YPolynomial):
            return NotImplemented
        out = YPolynomial()
        out.terms = dict(self.terms)
        for sig, c in other.terms.items():
            nc = out.terms.get(sig, Fraction(0)) + c
            if nc:
                out.terms[sig] = nc
            else:
                out.terms.pop(sig, None)
        return out

    __radd__ = __add__

    def __neg__(self):
        out = YPolynomial()
        out.terms = {sig: -c for sig, c in self.terms.items()}
        return out

    def __sub__(self, other):
        return self + (-other if not isinstance(other, (int, Fraction))
                       else YMonomial(-frac(other)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return YPolynomial()
            out = YPolynomial()
            out.terms = {sig: c * other for sig, c in self.terms.items()}
            return out
        if isinstance(other, YMonomial):
            other = YPolynomial.from_terms([other])
        if not isinstance(other, YPolynomial):
            return NotImplemented
        out = YPolynomial()
        acc = out.terms
        for s1, c1 in self.terms.items():
            for s2, c2 in other.terms.items():
                sig = (s1[0] + s2[0], s1[1] + s2[1], s1[2] + s2[2],
                       _merge_y(s1[3], s2[3]))
                nc = acc.get(sig, Fraction(0)) + c1 * c2
                if nc:
                    acc[sig] = nc
                else:
                    acc.pop(sig, None)
        return out

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, YPolynomial):
            return self.terms == other.terms
        if isinstance(other, YMonomial):
            if not other:
                return not self.terms
            return self.terms == {other.signature(): other.scalar}
        if isinstance(other, (int, Fraction)):
            return self == YMonomial(other)
        return NotImplemented

    def __repr__(self):
        if not self.terms:
            return "YPolynomial(0)"
        return " + ".join(repr(m) for m in self.monomials())

    def as_json(self):
        out = []
        for m in self.monomials():
            d = m.as_json()
            d["coeff"] = d.pop("scalar")
            out.append(d)
        return out


# ---------------------------------------------------------------------------
# Truncated graded polynomial rings
# ---------------------------------------------------------------------------


def _coeff_is_zero(c):
    return not c


class PolyRing:
    """Commutative polynomial ring with weighted variables and a degree cap.

    Variables are identified by (kind, index) pairs, e.g. ("p", 3) or
    ("t", 0); every variable must have weight >= 1 so that truncated
    inversion terminates.
    """

    __slots__ = ("vars", "weights", "cap", "index", "caches")

    def __init__(self, variables, cap):
        self.vars = tuple((kind, idx) for (kind, idx), _w in variables)
        self.weights = tuple(w for _v, w in variables)
        if any(w < 1 for w in self.weights):
            raise ValueError("all variable weights must be >= 1")
        if cap < 0:
            raise ValueError("cap must be nonnegative")
        self.cap = cap
        self.index = {v: k for k, v in enumerate(self.vars)}
        if len(self.index) != len(self.vars):
            raise ValueError("duplicate variables")
        self.caches = {}

    def cache(self, name):
        return self.caches.setdefault(name, {})

    def compatible(self, other) -> bool:
        return (self is other
                or (self.vars == other.vars and self.weights == other.weights
                    and self.cap == other.cap))

    def degree(self, exps) -> int:
        return sum(w * e for w, e in zip(self.weights, exps))

    def var_name(self, v) -> str:
        kind, idx = v
        return kind if idx == 0 else f"{kind}{idx}"

    def zero(self):
        return TruncatedPoly(self, {})

    def one(self):
        return self.const(1)

    def const(self, c):
        if isinstance(c, (int, Fraction)):
            c = frac(c)
        if _coeff_is_zero(c):
            return self.zero()
        return TruncatedPoly(self, {(0,) * len(self.vars): c})

    def gen(self, kind, idx=0):
        v = (kind, idx)
        if v not in self.index:
            raise VariableMismatch(f"no variable {self.var_name(v)} in ring")
        exps = [0] * len(self.vars)
        exps[self.index[v]] = 1
        return TruncatedPoly(self, {tuple(exps): Fraction(1)})

    def monomial(self, exps, coeff=1):
        exps = tuple(exps)
        if len(exps) != len(self.vars):
            raise VariableMismatch("exponent vector length mismatch")
        if self.degree(exps) > self.cap:
            return self.zero()
        if isinstance(coeff, (int, Fraction)):
            coeff = frac(coeff)
        if _coeff_is_zero(coeff):
            return self.zero()
        return TruncatedPoly(self, {exps: coeff})

    def __repr__(self):
        names = ",".join(self.var_name(v) for v in self.vars)
        return f"PolyRing([{names}], cap={self.cap})"


class TruncatedPoly:
    """Sparse polynomial in a PolyRing; terms above the cap are discarded.

    Coefficients are Fractions by default but any commutative coefficient
    object supporting +, *, unary - and truth testing works (YMonomial and
    YPolynomial in particular).
    """

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms

    def _check(self, other):
        if not self.ring.compatible(other.ring):
            raise VariableMismatch(f"{self.ring} vs {other.ring}")

    # -- inspection -------------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def coeff(self, exps):
        return self.terms.get(tuple(exps), Fraction(0))

    def constant(self):
        return self.coeff((0,) * len(self.ring.vars))

    def max_degree(self) -> int:
        deg = self.ring.degree
        return max((deg(e) for e in self.terms), default=0)

    def __eq__(self, other):
        if isinstance(other, TruncatedPoly):
            self._check(other)
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == self.ring.const(other).terms
        return NotImplemented

    def __hash__(self):
        return hash((self.ring.vars, tuple(sorted(
            (e, repr(c)) for e, c in self.terms.items()))))

    # -- ring operations ----------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.const(other)
        if not isinstance(other, TruncatedPoly):
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            nc = out.get(e, 0) + c
            if _coeff_is_zero(nc):
                out.pop(e, None)
            else:
                out[e] = nc
        return TruncatedPoly(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedPoly(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.const(other)
        if not isinstance(other, TruncatedPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, TruncatedPoly):
            self._check(other)
            ring = self.ring
            cap = ring.cap
            deg = ring.degree
            out = {}
            adeg = [(e, deg(e), c) for e, c in self.terms.items()]
            bdeg = [(e, deg(e), c) for e, c in other.terms.items()]
            for e1, d1, c1 in adeg:
                for e2, d2, c2 in bdeg:
                    if d1 + d2 > cap:
                        continue
                    e = tuple(x + y for x, y in zip(e1, e2))
                    nc = out.get(e, 0) + c1 * c2
                    if _coeff_is_zero(nc):
                        out.pop(e, None)
                    else:
                        out[e] = nc
            return TruncatedPoly(self.ring, out)
        # anything else scales the coefficients
        return self._scale(other)

    def _scale(self, c):
        if isinstance(c, (int, Fraction)):
            c = frac(c)
        if _coeff_is_zero(c):
            return self.ring.zero()
        out = {}
        for e, old in self.terms.items():
            nc = c * old
            if not _coeff_is_zero(nc):
                out[e] = nc
        return TruncatedPoly(self.ring, out)

    def __rmul__(self, other):
        return self._scale(other)

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        out = self.ring.one()
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base if e > 1 else base
            e >>= 1
        return out

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero scalar")
            return self._scale(Fraction(1) / frac(other))
        if isinstance(other, TruncatedPoly):
            return self * other.inverse()
        return NotImplemented

    def truncate(self, degree_bound: int):
        deg = self.ring.degree
        return TruncatedPoly(self.ring, {
            e: c for e, c in self.terms.items() if deg(e) <= degree_bound})

    def inverse(self):
        """Multiplicative inverse in the capped quotient ring; the constant
        term must itself be invertible."""
        c = self.constant()
        if _coeff_is_zero(c):
            raise SingularSpecialization("inverting a series with zero constant term")
        if isinstance(c, (int, Fraction)):
            cinv = Fraction(1) / frac(c)
        elif isinstance(c, YMonomial):
            cinv = c.inverse()
        else:
            raise SingularSpecialization(f"cannot invert constant term {c!r}")
        # f = c(1 - g), valuation(g) >= 1:  1/f = (1 + g + g^2 + ...)/c
        g = self.ring.one() - self._scale(cinv)
        acc = self.ring.one()
        for _ in range(self.ring.cap):
            acc = self.ring.one() + g * acc
        return acc._scale(cinv)

    def derivative(self, kind, idx=0):
        pos = self.ring.index.get((kind, idx))
        if pos is None:
            raise VariableMismatch(f"no variable {kind}{idx}")
        out = {}
        for e, c in self.terms.items():
            if e[pos]:
                ne = list(e)
                ne[pos] -= 1
                nc = e[pos] * c
                if not _coeff_is_zero(nc):
                    out[tuple(ne)] = nc
        return TruncatedPoly(self.ring, out)

    def substitute(self, mapping, target):
        """Ring map: each variable goes to mapping[var] (a poly or scalar in
        ``target``); unmapped variables go to the same-named generator."""
        images = {}
        for v in self.ring.vars:
            if v in mapping:
                img = mapping[v]
                if isinstance(img, (int, Fraction)):
                    img = target.const(img)
                images[v] = img
            else:
                images[v] = target.gen(*v)
        out = target.zero()
        powcache: dict[tuple, TruncatedPoly] = {}
        for e, c in self.terms.items():
            term = target.const(1)
            for pos, exp in enumerate(e):
                if not exp:
                    continue
                v = self.ring.vars[pos]
                key = (v, exp)
                if key not in powcache:
                    powcache[key] = images[v] ** exp
                term = term * powcache[key]
            out = out + term._scale(c)
        return out

    # -- display ----------------------------------------------------------

    def __repr__(self):
        if not self.terms:
            return "0"
        deg = self.ring.degree
        bits = []
        for e in sorted(self.terms, key=lambda x: (deg(x), x)):
            c = self.terms[e]
            mono = "*".join(
                (self.ring.var_name(v) if k == 1 else f"{self.ring.var_name(v)}^{k}")
                for v, k in zip(self.ring.vars, e) if k)
            if mono:
                bits.append(f"({c})*{mono}")
            else:
                bits.append(f"({c})")
        return " + ".join(bits)

    def as_json(self):
        deg = self.ring.degree
        return {
            "vars": [self.ring.var_name(v) for v in self.ring.vars],
            "cap": self.ring.cap,
            "terms": [
                {"exps": list(e), "coeff": element_json(self.terms[e])}
                for e in sorted(self.terms, key=lambda x: (deg(x), x))
            ],
        }


def truncated_exp(x: TruncatedPoly) -> TruncatedPoly:
    """exp of a polynomial with zero constant term, exact up to the cap."""
    if not _coeff_is_zero(x.constant()):
        raise CapError("truncated_exp needs zero constant term")
    out = x.ring.one()
    term = x.ring.one()
    for n in range(1, x.ring.cap + 1):
        term = term * x * Fraction(1, n)
        if not term:
            break
        out = out + term
    return out


# ---------------------------------------------------------------------------
# Specialization of Y-monomials into truncated rings
# ---------------------------------------------------------------------------

ZERO = object()  # marker: "this index is assigned the value 0"


class Assignment:
    """Values for a, b and the y_i, feeding ``specialize``.

    ``y`` is a callable index -> value (or the ZERO marker); ``y0_sqrt``,
    when given, is used as the exact value of y_0^(1/2) so that
    half-integer exponents specialize.
    """

    def __init__(self, y, a=None, b=None, y0_sqrt=None):
        if isinstance(y, dict):
            table = y
            y = lambda i: table.get(i, ZERO)  # noqa: E731
        self.y = y
        self.a = a
        self.b = b
        self.y0_sqrt = y0_sqrt

    def value(self, i):
        return self.y(i)


def _value_pow(ring, value, e):
    if value is ZERO:
        raise SingularSpecialization("ZERO raised to a power here is a caller bug")
    if isinstance(value, (int, Fraction)):
        v = frac(value)
        if v == 0:
            if e > 0:
                return ring.zero()
            raise SingularSpecialization("negative power of 0")
        return ring.const(v ** e)
    if not isinstance(value, TruncatedPoly):
        raise CoefficientError(f"unusable assignment value {value!r}")
    return value ** e


def specialize(x, asg: Assignment, ring: PolyRing) -> TruncatedPoly:
    """Apply the ring homomorphism defined by ``asg`` to a YMonomial or
    YPolynomial, landing in ``ring``."""
    if isinstance(x, YPolynomial):
        out = ring.zero()
        for m in x.monomials():
            out = out + specialize(m, asg, ring)
        return out
    if isinstance(x, (int, Fraction)):
        return ring.const(x)
    if not isinstance(x, YMonomial):
        raise CoefficientError(f"cannot specialize {x!r}")
    if not x:
        return ring.zero()
    acc = ring.const(x.scalar)
    for name, exp, value in (("a", x.a, asg.a), ("b", x.b, asg.b)):
        if exp:
            if value is None:
                raise CoefficientError(f"assignment has no value for {name}")
            acc = acc * _value_pow(ring, value, exp)
    h = x.y0_halves
    if h:
        if asg.y0_sqrt is not None:
            acc = acc * _value_pow(ring, asg.y0_sqrt, h)
        elif h % 2:
            raise FractionalExponent(
                "half-integer y_0 exponent with no square-root value")
        else:
            v = asg.value(0)
            if v is ZERO:
                if h > 0:
                    return ring.zero()
                raise SingularSpecialization("negative power of y_0 = 0")
            acc = acc * _value_pow(ring, v, h // 2)
    for i, e in x.y:
        v = asg.value(i)
        if v is ZERO:
            if e > 0:
                return ring.zero()
            raise SingularSpecialization(f"negative power of y_{i} = 0")
        acc = acc * _value_pow(ring, v, e)
    return acc


def element_json(x):
    """JSON form of any coefficient-ring element."""
    if isinstance(x, (int, Fraction)):
        return fraction_json(x)
    return x.as_json()
