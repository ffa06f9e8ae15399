"""Exact scalar helpers: binomials, Franel numbers, polynomials in n, rational row reduction.

Integers are plain Python ``int`` and rationals are :class:`fractions.Fraction`;
both are arbitrary precision and normalize on construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Iterable, Sequence

__all__ = [
    "binomial",
    "franel",
    "NPoly",
    "rref",
    "solve_exact",
]


def binomial(n: int, k: int) -> int:
    """C(n, k), zero whenever k < 0 or k > n."""
    if n < 0:
        raise ValueError(f"binomial needs n >= 0, got {n}")
    if k < 0 or k > n:
        return 0
    k = min(k, n - k)
    result = 1
    # result stays integral at every step: it equals C(n-k+i, i)
    for i in range(1, k + 1):
        result = result * (n - k + i) // i
    return result


@lru_cache(maxsize=None)
def franel(n: int) -> int:
    """Sum of cubes of the binomial coefficients in row n."""
    if n < 0:
        raise ValueError(f"franel needs n >= 0, got {n}")
    return sum(binomial(n, k) ** 3 for k in range(n + 1))


@dataclass(frozen=True)
class NPoly:
    """Polynomial in one variable ``n`` with exact coefficients, lowest degree first."""

    coeffs: tuple = ()

    def __post_init__(self):
        c = list(self.coeffs)
        while c and c[-1] == 0:
            c.pop()
        c = [int(x) if isinstance(x, Fraction) and x.denominator == 1 else x for x in c]
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def n(cls) -> "NPoly":
        return cls((0, 1))

    @classmethod
    def const(cls, c) -> "NPoly":
        return cls((c,))

    @staticmethod
    def _lift(other) -> "NPoly":
        if isinstance(other, NPoly):
            return other
        if isinstance(other, (int, Rational)):
            return NPoly((other,))
        return NotImplemented

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, n):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * n + c
        return acc

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        m = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (m - len(self.coeffs))
        b = other.coeffs + (0,) * (m - len(other.coeffs))
        return NPoly(tuple(x + y for x, y in zip(a, b)))

    __radd__ = __add__

    def __neg__(self):
        return NPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        if not self.coeffs or not other.coeffs:
            return NPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            for j, y in enumerate(other.coeffs):
                out[i + j] += x * y
        return NPoly(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = NPoly((1,))
        for _ in range(k):
            result = result * self
        return result

    def shift(self, s: int) -> "NPoly":
        """The polynomial n -> self(n + s)."""
        result = NPoly()
        step = NPoly((s, 1))
        for c in reversed(self.coeffs):
            result = result * step + c
        return result

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for d in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[d]
            if c == 0:
                continue
            mono = "" if d == 0 else ("n" if d == 1 else f"n^{d}")
            if mono and c == 1:
                s = mono
            elif mono and c == -1:
                s = "-" + mono
            else:
                s = f"{c}{'*' + mono if mono else ''}"
            parts.append(s)
        return " + ".join(parts).replace("+ -", "- ")


def rref(rows: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Q. Returns (matrix, pivot columns)."""
    m = [[Fraction(x) for x in row] for row in rows]
    if not m:
        return m, []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def solve_exact(a: Sequence[Sequence], b: Iterable):
    """Solve a x = b exactly.

    Returns ``(x, kernel)`` where x is the particular solution with every free
    variable set to zero and ``kernel`` is a basis of the null space, or
    ``None`` when the system is inconsistent.
    """
    b = list(b)
    ncols = len(a[0]) if a else 0
    aug = [list(row) + [rhs] for row, rhs in zip(a, b)]
    m, pivots = rref(aug)
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for i, c in enumerate(pivots):
        x[c] = m[i][ncols]
    free = [c for c in range(ncols) if c not in pivots]
    kernel = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for i, c in enumerate(pivots):
            v[c] = -m[i][f]
        kernel.append(v)
    return x, kernel
