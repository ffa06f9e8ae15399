"""A2 Calogero-Sutherland operator in the z-variables and its eigenpolynomials.

z1 = x1 + x2 + x3 and z2 = x1x2 + x1x3 + x2x3 are the fundamental and
antifundamental characters; the monomial z1^a z2^b has leading weight (a, b).
"""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from functools import lru_cache

import sympy

from .laurent import (
    XLaurent,
    decompose_in_monomials,
    dominant_terms,
    monomial_symfn_x,
    multiply,
    power,
)
from .weights import Weight, as_weight, order_key, weights_below


class ResonanceError(ArithmeticError):
    """Two comparable weights share an eigenvalue, so the triangular solve breaks down."""

    def __init__(self, kappa, top, lower):
        self.kappa, self.top, self.lower = kappa, top, lower
        super().__init__(
            f"resonance at kappa={kappa}: eps{tuple(top)} == eps{tuple(lower)}"
        )


class ZPoly:
    """Sparse polynomial in z1, z2 with exact coefficients. Treat as immutable."""

    __slots__ = ("_c",)

    def __init__(self, coeffs=None):
        self._c = {}
        for e, v in (coeffs or {}).items():
            if v != 0:
                if e[0] < 0 or e[1] < 0:
                    raise ValueError(f"negative exponent {e}")
                self._c[(int(e[0]), int(e[1]))] = Fraction(v)

    @classmethod
    def const(cls, c) -> "ZPoly":
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, a: int, b: int, c=1) -> "ZPoly":
        return cls({(a, b): c})

    @property
    def coeffs(self) -> dict:
        return dict(self._c)

    def __getitem__(self, e):
        return self._c.get(tuple(e), Fraction(0))

    def __iter__(self):
        return iter(self._c.items())

    def __len__(self):
        return len(self._c)

    def is_zero(self):
        return not self._c

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = ZPoly.const(other)
        return isinstance(other, ZPoly) and self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __repr__(self):
        return "ZPoly(" + ", ".join(f"{e}: {v}" for e, v in self.terms()) + ")"

    def terms(self):
        """(exponent, coefficient) pairs, exponents lexicographically descending."""
        return sorted(self._c.items(), reverse=True)

    def _add(self, other, sign):
        if not isinstance(other, ZPoly):
            other = ZPoly.const(other)
        out = dict(self._c)
        for e, v in other._c.items():
            out[e] = out.get(e, 0) + sign * v
        return ZPoly(out)

    def __add__(self, other):
        return self._add(other, 1)

    __radd__ = __add__

    def __sub__(self, other):
        return self._add(other, -1)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return ZPoly({e: -v for e, v in self._c.items()})

    def __mul__(self, other):
        if not isinstance(other, ZPoly):
            return ZPoly({e: other * v for e, v in self._c.items()})
        out = defaultdict(Fraction)
        for (a1, b1), v1 in self._c.items():
            for (a2, b2), v2 in other._c.items():
                out[(a1 + a2, b1 + b2)] += v1 * v2
        return ZPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        result = ZPoly.const(1)
        for _ in range(n):
            result = result * self
        return result

    def d1(self) -> "ZPoly":
        return ZPoly({(a - 1, b): a * v for (a, b), v in self._c.items() if a})

    def d2(self) -> "ZPoly":
        return ZPoly({(a, b - 1): b * v for (a, b), v in self._c.items() if b})


Z1 = ZPoly.monomial(1, 0)
Z2 = ZPoly.monomial(0, 1)


def coupling(k) -> Fraction:
    return Fraction(k)


def _delta_images(a: int, b: int, kappa: Fraction):
    """Delta^kappa z1^a z2^b as ((a', b'), factor) pairs; the first is diagonal."""
    yield (a, b), a * (a - 1) + b * (b - 1) + a * b + (3 * kappa + 1) * (a + b)
    if a >= 2:
        yield (a - 2, b + 1), -3 * a * (a - 1)
    if b >= 2:
        yield (a + 1, b - 2), -3 * b * (b - 1)
    if a >= 1 and b >= 1:
        yield (a - 1, b - 1), -9 * a * b


def apply_delta(k, f: ZPoly) -> ZPoly:
    kappa = coupling(k)
    out = defaultdict(Fraction)
    for (a, b), v in f:
        for e, c in _delta_images(a, b, kappa):
            out[e] += c * v
    return ZPoly(out)


def epsilon(k, w) -> Fraction:
    kappa = coupling(k)
    m1, m2 = w
    return m1 * m1 + m2 * m2 + m1 * m2 + 3 * kappa * (m1 + m2)


@lru_cache(maxsize=None)
def _gegenbauer(kappa: Fraction, w: Weight) -> ZPoly:
    basis = weights_below(w)
    inside = set(basis)
    eps_w = epsilon(kappa, w)
    coeff = {w: Fraction(1)}
    pushed = defaultdict(Fraction)
    for nu in reversed(basis):
        if nu != w:
            gap = epsilon(kappa, nu) - eps_w
            if gap == 0:
                raise ResonanceError(kappa, w, nu)
            coeff[nu] = -pushed[nu] / gap
        c = coeff[nu]
        if c == 0:
            continue
        for i, (e, f) in enumerate(_delta_images(nu.p, nu.q, kappa)):
            if i == 0:
                continue
            target = Weight(*e)
            assert target in inside, f"Delta left the dominance cone at {target}"
            pushed[target] += f * c
    return ZPoly({tuple(v): c for v, c in coeff.items()})


def gegenbauer(k, w) -> ZPoly:
    """Monic eigenpolynomial P^kappa_w of Delta^kappa with leading monomial z^w."""
    return _gegenbauer(coupling(k), as_weight(w))


_M1, _M2, _K = sympy.symbols("m1 m2 kappa")
_S = _M1 + _M2
_A_EXPR = (_M1 * (_M1 - 1) * _M2 * (_S + _K - 1) * (_S + _K)) / (
    (_M1 + _K - 1) * (_M1 + _K) * (_S + 2 * _K - 1) * (_S + 2 * _K)
)
_B_EXPR = -(_M2 * (_M2 - 1) * (_S + _K)) / ((_M2 + _K - 1) * (_M2 + _K))


@lru_cache(maxsize=None)
def _cancelled(which: str, kappa: Fraction):
    expr = _A_EXPR if which == "A" else _B_EXPR
    num, den = sympy.fraction(sympy.cancel(expr.subs(_K, sympy.Rational(kappa.numerator, kappa.denominator))))
    return num, den


def _evaluate(which, kappa, m1, m2) -> Fraction:
    num, den = _cancelled(which, kappa)
    d = den.subs({_M1: m1, _M2: m2})
    if d == 0:
        raise ZeroDivisionError(f"{which}_{{{m1},{m2}}}({kappa}) has a vanishing denominator")
    r = sympy.Rational(num.subs({_M1: m1, _M2: m2}) / d)
    return Fraction(int(r.p), int(r.q))


def deriv_coefficients(k, w) -> tuple[Fraction, Fraction]:
    """(A, B) of the z1-derivative rule, zero where the target index is invalid."""
    kappa = coupling(k)
    m1, m2 = as_weight(w)
    a = Fraction(0) if m1 < 2 or m2 < 1 else _evaluate("A", kappa, m1, m2)
    b = Fraction(0) if m2 < 2 else _evaluate("B", kappa, m1, m2)
    return a, b


def derivative_rhs(k, w) -> ZPoly:
    kappa = coupling(k)
    m1, m2 = as_weight(w)
    a, b = deriv_coefficients(kappa, w)
    out = ZPoly()
    if m1 >= 1:
        out = out + m1 * gegenbauer(kappa + 1, (m1 - 1, m2))
    if a:
        out = out + a * gegenbauer(kappa + 1, (m1 - 2, m2 - 1))
    if b:
        out = out + b * gegenbauer(kappa + 1, (m1, m2 - 2))
    return out


def verify_derivative_identity(k, w) -> bool:
    return gegenbauer(k, w).d1() == derivative_rhs(k, w)


_Z1X = monomial_symfn_x((1, 0))
_Z2X = monomial_symfn_x((0, 1))


@lru_cache(maxsize=None)
def z_monomial_x(a: int, b: int) -> XLaurent:
    return multiply(power(_Z1X, a), power(_Z2X, b))


def z_to_x(g: ZPoly, check_integral: bool = True) -> XLaurent:
    out = defaultdict(Fraction)
    for (a, b), v in g:
        for e, c in z_monomial_x(a, b):
            out[e] += v * c
    if check_integral and all(v.denominator == 1 for _, v in g):
        if any(v.denominator != 1 for v in out.values()):
            raise ArithmeticError("integer z-polynomial produced a fractional x-coefficient")
    return XLaurent({e: int(v) if v.denominator == 1 else v for e, v in out.items()})


def x_to_z(f: XLaurent) -> ZPoly:
    """The z-polynomial equal to a Weyl-invariant Laurent polynomial."""
    decompose_in_monomials(f)
    rem = f
    out = {}
    dom = dominant_terms(rem)
    last = None
    while dom:
        top = max(dom, key=order_key)
        # each subtraction only adds dominance-lower terms, so the top strictly falls
        if last is not None and order_key(top) >= order_key(last):
            raise RuntimeError("conversion to z-variables did not terminate")
        last = top
        c = dom[top]
        out[tuple(top)] = c
        rem = rem - z_monomial_x(top.p, top.q).scale(c)
        dom = dominant_terms(rem)
    return ZPoly(out)
