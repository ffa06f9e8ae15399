"""Dominant weights of SU(3): root lattice, orbit stabilizers, dominance order."""

from __future__ import annotations

from itertools import permutations
from typing import NamedTuple


class Weight(NamedTuple):
    """p * lambda_1 + q * lambda_2."""

    p: int
    q: int

    def __str__(self):
        return f"({self.p},{self.q})"

    def swap(self) -> "Weight":
        return Weight(self.q, self.p)

    def canonical(self) -> "Weight":
        """Representative with p >= q of the pair {(p,q), (q,p)}."""
        return self if self.p >= self.q else self.swap()


def as_weight(w) -> Weight:
    w = Weight(*w)
    if w.p < 0 or w.q < 0:
        raise ValueError(f"dominant weight needs p, q >= 0, got {tuple(w)}")
    return w


def in_root_lattice(w) -> bool:
    p, q = w
    return (p + 2 * q) % 3 == 0


def stabilizer_order(w) -> int:
    """6 divided by the size of the Weyl orbit."""
    p, q = w
    if p == 0 and q == 0:
        return 6
    if p == 0 or q == 0:
        return 2
    return 1


def orbit_tuples(w) -> set[tuple[int, int, int]]:
    """Distinct S3 images of the exponent tuple (p+q, q, 0)."""
    p, q = w
    return set(permutations((p + q, q, 0)))


def dimension(w) -> int:
    p, q = w
    return (p + 1) * (q + 1) * (p + q + 2) // 2


def root_coordinates(a, b) -> tuple[int, int] | None:
    """(c1, c2) with b - a = c1*alpha_1 + c2*alpha_2, or None if not integral."""
    dp, dq = b[0] - a[0], b[1] - a[1]
    n1, n2 = 2 * dp + dq, dp + 2 * dq
    if n1 % 3 or n2 % 3:
        return None
    return n1 // 3, n2 // 3


def dominance_lt(a, b) -> bool:
    """True iff b - a is a nonzero non-negative integer combination of simple roots."""
    if tuple(a) == tuple(b):
        return False
    c = root_coordinates(a, b)
    return c is not None and c[0] >= 0 and c[1] >= 0


def dominance_le(a, b) -> bool:
    return tuple(a) == tuple(b) or dominance_lt(a, b)


def order_key(w) -> tuple[int, int, int]:
    # p+q rises by one along each simple root, so this key extends dominance
    p, q = w
    return (p + q, p * p + p * q + q * q, -p)


def weights_below(top) -> list[Weight]:
    """All dominant weights dominance-below-or-equal ``top``, in increasing order."""
    top = as_weight(top)
    h = top.p + top.q
    out = [
        Weight(p, q)
        for p in range(h + 1)
        for q in range(h + 1 - p)
        if dominance_le((p, q), top)
    ]
    out.sort(key=order_key)
    return out


def dominant_weights_in_power(n: int) -> list[Weight]:
    """Dominant weights of the n-th tensor power of the adjoint, lowest first."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    return weights_below((n, n))
