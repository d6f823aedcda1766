"""Laurent polynomials in y (y^mu = x) over cyclotomic coefficients,
reduced rational functions, and extraction of root-of-unity linear factors.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .cyclotomic import Cyclotomic, coerce, from_literal, one, rat, to_literal, zeta, zero
from .ntheory import euler_phi, lcm


class LaurentPoly:
    """Immutable sparse Laurent polynomial; exponents are y-exponents."""

    __slots__ = ("mu", "_c", "_hash")

    def __init__(self, coeffs: dict, mu: int = 1, _clean: bool = False):
        if mu < 1:
            raise ValueError("mu must be a positive integer")
        if not _clean:
            fixed = {}
            for e, v in coeffs.items():
                v = coerce(v)
                if v is NotImplemented:
                    raise TypeError(f"bad coefficient {coeffs[e]!r}")
                if v:
                    fixed[int(e)] = fixed.get(int(e), zero) + v
            coeffs = {e: v for e, v in fixed.items() if v}
        self._c = coeffs
        self.mu = mu
        self._hash = None

    # -- constructors -------------------------------------------------------

    @staticmethod
    def from_x_coeffs(coeffs, mu: int = 1) -> "LaurentPoly":
        """Dense list of x-coefficients, ascending from x^0."""
        return LaurentPoly({i * mu: c for i, c in enumerate(coeffs)}, mu)

    @staticmethod
    def x_power(k: int, mu: int = 1) -> "LaurentPoly":
        return LaurentPoly({k * mu: one}, mu, _clean=True)

    @staticmethod
    def y_power(e: int, mu: int = 1) -> "LaurentPoly":
        return LaurentPoly({e: one}, mu, _clean=True)

    @staticmethod
    def const(v, mu: int = 1) -> "LaurentPoly":
        v = coerce(v)
        return LaurentPoly({0: v} if v else {}, mu, _clean=True)

    # -- introspection --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self._c

    @property
    def coeffs(self) -> dict:
        return dict(self._c)

    def coeff(self, e: int) -> Cyclotomic:
        return self._c.get(e, zero)

    def min_exp(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial has no exponents")
        return min(self._c)

    def max_exp(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial has no exponents")
        return max(self._c)

    def span(self) -> int:
        return self.max_exp() - self.min_exp() if self._c else 0

    def lowest_coeff(self) -> Cyclotomic:
        return self._c[self.min_exp()]

    def leading_coeff(self) -> Cyclotomic:
        return self._c[self.max_exp()]

    def is_x_polynomial(self) -> bool:
        """True when every exponent is divisible by mu (genuinely a function of x)."""
        return all(e % self.mu == 0 for e in self._c)

    def conductor_lcm(self) -> int:
        out = 1
        for v in self._c.values():
            out = lcm(out, v.conductor)
        return out

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other: "LaurentPoly"):
        if self.mu != other.mu:
            raise ValueError(f"mixed mu: {self.mu} vs {other.mu}")

    def __add__(self, other):
        if not isinstance(other, LaurentPoly):
            other = LaurentPoly.const(other, self.mu)
        self._check(other)
        out = dict(self._c)
        for e, v in other._c.items():
            s = out.get(e)
            s = v if s is None else s + v
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return LaurentPoly(out, self.mu, _clean=True)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -v for e, v in self._c.items()}, self.mu, _clean=True)

    def __sub__(self, other):
        if not isinstance(other, LaurentPoly):
            other = LaurentPoly.const(other, self.mu)
        return self + (-other)

    def __rsub__(self, other):
        return LaurentPoly.const(other, self.mu) - self

    def __mul__(self, other):
        if not isinstance(other, LaurentPoly):
            v = coerce(other)
            if v is NotImplemented:
                return NotImplemented
            if not v:
                return LaurentPoly({}, self.mu, _clean=True)
            return LaurentPoly({e: c * v for e, c in self._c.items()}, self.mu, _clean=True)
        self._check(other)
        out: dict = {}
        for ea, va in self._c.items():
            for eb, vb in other._c.items():
                e = ea + eb
                s = out.get(e)
                s = va * vb if s is None else s + va * vb
                if s:
                    out[e] = s
                else:
                    del out[e]
        return LaurentPoly(out, self.mu, _clean=True)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers: use RationalFunction")
        out = LaurentPoly.const(one, self.mu)
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def shift(self, e: int) -> "LaurentPoly":
        """Multiply by y^e."""
        return LaurentPoly({k + e: v for k, v in self._c.items()}, self.mu, _clean=True)

    # -- evaluation -----------------------------------------------------------

    def eval_y(self, point) -> Cyclotomic:
        point = coerce(point)
        if self.is_zero():
            return zero
        lo = self.min_exp()
        if lo < 0:
            return self.shift(-lo).eval_y(point) * point.inverse() ** (-lo)
        out = zero
        # Horner over the dense range
        for e in range(self.max_exp(), -1, -1):
            out = out * point + self._c.get(e, zero)
        return out

    def eval_x(self, point) -> Cyclotomic:
        if not self.is_x_polynomial():
            raise ValueError("polynomial has fractional x-exponents")
        return LaurentPoly({e // self.mu: v for e, v in self._c.items()}, 1, _clean=True).eval_y(point)

    # -- protocol -------------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            other = LaurentPoly.const(other, self.mu)
        return self.mu == other.mu and self._c == other._c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.mu, tuple(sorted(self._c.items()))))
        return self._hash

    def __repr__(self):
        if not self._c:
            return "0"
        var = "x" if self.mu == 1 else "y"
        parts = []
        for e in sorted(self._c):
            v = self._c[e]
            sv = str(v) if (v.is_rational() or e == 0) else f"({v})"
            if e == 0:
                parts.append(sv)
            else:
                pw = var if e == 1 else f"{var}^{e}"
                parts.append(pw if v == one else f"{sv}*{pw}")
        return " + ".join(parts)


# -- polynomial division and gcd ---------------------------------------------


def poly_divmod(a: LaurentPoly, b: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    """Division with remainder; both must have nonnegative exponents."""
    if b.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    a._check(b)
    if not a.is_zero() and a.min_exp() < 0 or b.min_exp() < 0:
        raise ValueError("poly_divmod expects ordinary polynomials")
    q: dict = {}
    r = a
    db = b.max_exp()
    lb_inv = b.leading_coeff().inverse()
    while not r.is_zero() and r.max_exp() >= db:
        e = r.max_exp() - db
        c = r.leading_coeff() * lb_inv
        q[e] = c
        r = r - b.shift(e) * c
    return LaurentPoly(q, a.mu, _clean=True), r


def poly_divexact(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Exact Laurent division (remainder must vanish)."""
    if a.is_zero():
        return a
    sa, sb = a.min_exp(), b.min_exp()
    q, r = poly_divmod(a.shift(-sa), b.shift(-sb))
    if not r.is_zero():
        raise ArithmeticError("inexact polynomial division")
    return q.shift(sa - sb)


def poly_gcd(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Monic gcd in the polynomial ring after clearing y-powers."""
    a._check(b)
    if a.is_zero():
        x, y = b, a
    else:
        x, y = a.shift(-a.min_exp()), (b if b.is_zero() else b.shift(-b.min_exp()))
    while not y.is_zero():
        _, r = poly_divmod(x, y)
        x, y = y, (r if r.is_zero() else r.shift(-r.min_exp()))
    if x.is_zero():
        return x
    return x * x.leading_coeff().inverse()


# -- reduced rational functions ------------------------------------------------


class RationalFunction:
    """num/den with den an ordinary polynomial, constant coefficient 1, gcd(num, den) = 1."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: LaurentPoly, den: LaurentPoly, _clean: bool = False):
        if not _clean:
            reduced = ratfun_reduce(num, den)
            num, den = reduced.num, reduced.den
        self.num = num
        self.den = den
        self._hash = None

    @property
    def mu(self) -> int:
        return self.num.mu

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den == LaurentPoly.const(one, self.den.mu)

    def as_polynomial(self) -> LaurentPoly:
        if not self.is_polynomial():
            raise ValueError(f"{self} is not a Laurent polynomial")
        return self.num

    def __add__(self, other):
        other = _rf_coerce(other, self.mu)
        return ratfun_reduce(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den, _clean=True)

    def __sub__(self, other):
        return self + (-_rf_coerce(other, self.mu))

    def __rsub__(self, other):
        return _rf_coerce(other, self.mu) - self

    def __mul__(self, other):
        other = _rf_coerce(other, self.mu)
        return ratfun_reduce(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunction":
        return ratfun_reduce(self.den, self.num)

    def __truediv__(self, other):
        return self * _rf_coerce(other, self.mu).inverse()

    def __rtruediv__(self, other):
        return _rf_coerce(other, self.mu) / self

    def eval_y(self, point) -> Cyclotomic:
        d = self.den.eval_y(point)
        if not d:
            raise ZeroDivisionError(f"pole at {point}")
        return self.num.eval_y(point) / d

    def eval_x(self, point) -> Cyclotomic:
        d = self.den.eval_x(point)
        if not d:
            raise ZeroDivisionError(f"pole at {point}")
        return self.num.eval_x(point) / d

    def __eq__(self, other):
        other = _rf_coerce(other, self.mu)
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __repr__(self):
        return f"({self.num}) / ({self.den})" if not self.is_polynomial() else repr(self.num)


def _rf_coerce(v, mu: int) -> RationalFunction:
    if isinstance(v, RationalFunction):
        return v
    if isinstance(v, LaurentPoly):
        return RationalFunction(v, LaurentPoly.const(one, v.mu))
    return RationalFunction(LaurentPoly.const(v, mu), LaurentPoly.const(one, mu))


def ratfun_reduce(num: LaurentPoly, den: LaurentPoly) -> RationalFunction:
    """Reduced, normalized quotient of Laurent polynomials."""
    num._check(den)
    if den.is_zero():
        raise ZeroDivisionError("zero denominator")
    mu = num.mu
    if num.is_zero():
        return RationalFunction(num, LaurentPoly.const(one, mu), _clean=True)
    en, ed = num.min_exp(), den.min_exp()
    n, d = num.shift(-en), den.shift(-ed)
    g = poly_gcd(n, d)
    if not g.is_zero() and g.max_exp() > 0:
        n, d = poly_divexact(n, g), poly_divexact(d, g)
    c = d.lowest_coeff().inverse()
    return RationalFunction((n * c).shift(en - ed), d * c, _clean=True)


def derivative_at_one(f: LaurentPoly) -> Cyclotomic:
    """d f / d x evaluated at x = 1; f must be a genuine function of x."""
    if not f.is_x_polynomial():
        raise ValueError("derivative_at_one requires integral x-exponents")
    out = zero
    for e, v in f.coeffs.items():
        out = out + v * Fraction(e, f.mu)
    return out


# -- unit-part factorization ----------------------------------------------------


@dataclass(frozen=True)
class UnitFactorization:
    scalar: Cyclotomic
    y_power: int
    unit_factors: tuple  # ((omega, multiplicity), ...)
    non_unit: LaurentPoly

    def reassemble(self) -> LaurentPoly:
        mu = self.non_unit.mu
        out = (self.non_unit * self.scalar).shift(self.y_power)
        for omega, mult in self.unit_factors:
            factor = LaurentPoly({1: one, 0: -omega}, mu)
            for _ in range(mult):
                out = out * factor
        return out

    def is_unit(self) -> bool:
        return self.non_unit == LaurentPoly.const(one, self.non_unit.mu)


@lru_cache(maxsize=4096)
def _factor_cached(f: LaurentPoly, max_order: int) -> UnitFactorization:
    mu = f.mu
    y_power = f.min_exp()
    g = f.shift(-y_power)
    factors: list = []
    cond = g.conductor_lcm()
    phi_c = euler_phi(cond)
    for m in range(1, max_order + 1):
        if g.max_exp() == 0:
            break
        # a root of order m forces at least phi(lcm(cond, m))/phi(cond) conjugate roots
        if euler_phi(lcm(cond, m)) > phi_c * g.max_exp():
            continue
        for j in range(m):
            if m > 1 and (j == 0 or gcd(j, m) != 1):
                continue
            omega = zeta(m, j)
            mult = 0
            while g.max_exp() > 0 and not g.eval_y(omega):
                g = poly_divexact(g, LaurentPoly({1: one, 0: -omega}, mu))
                mult += 1
            if mult:
                factors.append((omega, mult))
    scalar = g.lowest_coeff()
    non_unit = g * scalar.inverse()
    return UnitFactorization(scalar, y_power, tuple(factors), non_unit)


def factor_unit_part(f: LaurentPoly, max_order: int | None = None) -> UnitFactorization:
    """Split f into scalar * y^k * prod (y - omega)^m * non_unit, each omega a root of unity.

    The root search evaluates at every root of unity of order up to max_order
    (default derived from the degree span and coefficient conductor; callers
    with group context pass an explicit bound such as 2|W|).
    """
    if f.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    if max_order is None:
        max_order = 2 * max(f.span(), 1) * lcm(2, f.conductor_lcm())
    return _factor_cached(f, max_order)


# -- serialization ----------------------------------------------------------------


def laurent_to_doc(f: LaurentPoly):
    return {"mu": f.mu, "terms": [[e, to_literal(v)] for e, v in sorted(f.coeffs.items())]}


def laurent_from_doc(doc) -> LaurentPoly:
    if not isinstance(doc, dict) or "terms" not in doc:
        raise ValueError(f"malformed laurent literal: {doc!r}")
    mu = int(doc.get("mu", 1))
    out: dict = {}
    for e, lit in doc["terms"]:
        out[int(e)] = out.get(int(e), zero) + from_literal(lit)
    return LaurentPoly(out, mu)
