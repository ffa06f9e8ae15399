"""Brute-force ground truth in the x-variables.

Weyl-invariant functions of x1, x2, x3 with x1*x2*x3 = 1 are stored as sparse
Laurent polynomials in x1, x2 only; the monomial x1^a x2^b x3^c becomes
x1^(a-c) x2^(b-c).
"""

from __future__ import annotations

from collections import defaultdict
from functools import lru_cache
from itertools import permutations
from .weights import Weight, dominance_lt, order_key, orbit_tuples, stabilizer_order


class NotWeylInvariant(ValueError):
    pass


class InexactDivision(ArithmeticError):
    """Polynomial division left a remainder; indicates an internal bug."""


def _exp(t) -> tuple[int, int]:
    a, b, c = t
    return (a - c, b - c)


class XLaurent:
    """Sparse Laurent polynomial in x1, x2. Treat instances as immutable."""

    __slots__ = ("_c",)

    def __init__(self, coeffs=None):
        self._c = {e: v for e, v in (coeffs or {}).items() if v != 0}

    @classmethod
    def const(cls, c) -> "XLaurent":
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, e1: int, e2: int, c=1) -> "XLaurent":
        return cls({(e1, e2): c})

    @property
    def coeffs(self) -> dict:
        return dict(self._c)

    def __getitem__(self, e) -> int:
        return self._c.get(tuple(e), 0)

    def __len__(self):
        return len(self._c)

    def __iter__(self):
        return iter(self._c.items())

    def is_zero(self) -> bool:
        return not self._c

    def __eq__(self, other):
        if isinstance(other, (int,)):
            other = XLaurent.const(other)
        return isinstance(other, XLaurent) and self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __repr__(self):
        terms = sorted(self._c.items(), reverse=True)
        return "XLaurent(" + ", ".join(f"{e}: {v}" for e, v in terms) + ")"

    def _add(self, other, sign):
        if not isinstance(other, XLaurent):
            other = XLaurent.const(other)
        out = dict(self._c)
        for e, v in other._c.items():
            out[e] = out.get(e, 0) + sign * v
        return XLaurent(out)

    def __add__(self, other):
        return self._add(other, 1)

    __radd__ = __add__

    def __sub__(self, other):
        return self._add(other, -1)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return XLaurent({e: -v for e, v in self._c.items()})

    def scale(self, c) -> "XLaurent":
        return XLaurent({e: c * v for e, v in self._c.items()})

    def __mul__(self, other):
        if isinstance(other, XLaurent):
            return multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, n: int):
        return power(self, n)

    def evaluate(self, x1, x2):
        return sum(v * x1**a * x2**b for (a, b), v in self._c.items())


def multiply(f: XLaurent, g: XLaurent) -> XLaurent:
    if len(f) < len(g):
        f, g = g, f
    out = defaultdict(int)
    gi = list(g._c.items())
    for (a1, b1), v1 in f._c.items():
        for (a2, b2), v2 in gi:
            out[(a1 + a2, b1 + b2)] += v1 * v2
    return XLaurent(out)


def power(f: XLaurent, n: int) -> XLaurent:
    if n < 0:
        raise ValueError("negative power")
    result = XLaurent.const(1)
    base = f
    while n:
        if n & 1:
            result = multiply(result, base)
        n >>= 1
        if n:
            base = multiply(base, base)
    return result


def divide_exact(f: XLaurent, g: XLaurent) -> XLaurent:
    """Quotient f / g in the Laurent ring, lex order on (e1, e2)."""
    if g.is_zero():
        raise ZeroDivisionError("division by zero Laurent polynomial")
    if f.is_zero():
        return XLaurent()
    lead_g = max(g._c)
    cg = g._c[lead_g]
    # quotient exponents are confined to this box when the division is exact
    lo1 = min(a for a, _ in f._c) - min(a for a, _ in g._c)
    hi1 = max(a for a, _ in f._c) - max(a for a, _ in g._c)
    lo2 = min(b for _, b in f._c) - min(b for _, b in g._c)
    hi2 = max(b for _, b in f._c) - max(b for _, b in g._c)
    rem = dict(f._c)
    quot = {}
    gi = list(g._c.items())
    while rem:
        lead = max(rem)
        e = (lead[0] - lead_g[0], lead[1] - lead_g[1])
        c, r = divmod(rem[lead], cg)
        if r or not (lo1 <= e[0] <= hi1 and lo2 <= e[1] <= hi2):
            raise InexactDivision(f"remainder at exponent {lead}")
        quot[e] = c
        for (a, b), v in gi:
            k = (a + e[0], b + e[1])
            nv = rem.get(k, 0) - c * v
            if nv:
                rem[k] = nv
            else:
                rem.pop(k, None)
    return XLaurent(quot)


@lru_cache(maxsize=None)
def monomial_symfn_x(w) -> XLaurent:
    """Sum of the distinct monomials in the Weyl orbit of w."""
    return XLaurent({_exp(t): 1 for t in orbit_tuples(w)})


@lru_cache(maxsize=None)
def adjoint_character_x() -> XLaurent:
    x1 = XLaurent.monomial(1, 0)
    x2 = XLaurent.monomial(0, 1)
    x3 = XLaurent.monomial(-1, -1)
    return (x1 + x2) * (x1 + x3) * (x2 + x3)


@lru_cache(maxsize=None)
def adjoint_power(n: int) -> XLaurent:
    """chi_{1,1}^n, built incrementally so successive powers share work."""
    if n == 0:
        return XLaurent.const(1)
    return multiply(adjoint_power(n - 1), adjoint_character_x())


def _sign(perm) -> int:
    s = 1
    perm = list(perm)
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                s = -s
    return s


def weyl_numerator_x(w) -> XLaurent:
    """The 3x3 alternant with rows (x_i^(p+q+2), x_i^(q+1), 1)."""
    p, q = w
    cols = (p + q + 2, q + 1, 0)
    out = defaultdict(int)
    for perm in permutations(range(3)):
        t = tuple(cols[perm[i]] for i in range(3))
        out[_exp(t)] += _sign(perm)
    return XLaurent(out)


@lru_cache(maxsize=None)
def weyl_character_x(w) -> XLaurent:
    return divide_exact(weyl_numerator_x(w), weyl_numerator_x((0, 0)))


def dominant_terms(f: XLaurent) -> dict[Weight, int]:
    """Coefficients of x1^(p+q) x2^q for every dominant (p, q)."""
    return {Weight(a - b, b): v for (a, b), v in f if a >= b >= 0}


def weight_of_exponent(e) -> Weight:
    """Dominant weight of the Weyl orbit containing x1^e1 x2^e2."""
    u = sorted((e[0], e[1], 0), reverse=True)
    return Weight(u[0] - u[1], u[1] - u[2])


def decompose_in_monomials(f: XLaurent) -> dict[Weight, int]:
    dom = dominant_terms(f)
    for e, v in f:
        w = weight_of_exponent(e)
        if dom.get(w, 0) != v:
            raise NotWeylInvariant(
                f"coefficient {v} at x^{e} differs from {dom.get(w, 0)} on orbit of {w}"
            )
    expected = sum(len(orbit_tuples(w)) for w in dom)
    if expected != len(f):
        raise NotWeylInvariant(f"{len(f)} terms but the dominant part spans {expected} orbit monomials")
    return dom


def decompose_in_characters(f: XLaurent) -> dict[Weight, int]:
    decompose_in_monomials(f)
    rem = f
    out = {}
    dom = dominant_terms(rem)
    if not dom:
        return out
    h = max(p + q for p, q in dom)
    budget = (h + 1) * (h + 2) // 2
    while dom:
        if budget <= 0:
            raise RuntimeError("character peeling did not terminate")
        budget -= 1
        top = max(dom, key=order_key)
        c = dom[top]
        out[top] = c
        rem = rem - weyl_character_x(top).scale(c)
        dom = dominant_terms(rem)
        if any(dominance_lt(top, w) or w == top for w in dom):
            raise RuntimeError(f"peeling {top} left a higher weight behind")
    return out


def recombine_monomials(m: dict) -> XLaurent:
    out = XLaurent()
    for w, c in m.items():
        out = out + monomial_symfn_x(tuple(w)).scale(c)
    return out


def recombine_characters(m: dict) -> XLaurent:
    out = XLaurent()
    for w, c in m.items():
        out = out + weyl_character_x(tuple(w)).scale(c)
    return out


def orbit_size(w) -> int:
    return 6 // stabilizer_order(w)


def total_weight_count(m: dict) -> int:
    return sum(c * orbit_size(w) for w, c in m.items())


__all__ = [
    "XLaurent",
    "NotWeylInvariant",
    "InexactDivision",
    "multiply",
    "power",
    "divide_exact",
    "monomial_symfn_x",
    "adjoint_character_x",
    "adjoint_power",
    "weyl_numerator_x",
    "weyl_character_x",
    "decompose_in_monomials",
    "decompose_in_characters",
    "recombine_monomials",
    "recombine_characters",
    "dominant_terms",
    "weight_of_exponent",
    "total_weight_count",
    "orbit_size",
]
