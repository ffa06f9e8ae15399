"""Weight-indexed symmetric functions: monomial products, closed-form weight
multiplicities, and the triangular solve for irreducible multiplicities."""

from __future__ import annotations

import enum
from collections import defaultdict
from dataclasses import dataclass, field
from functools import lru_cache

from .exact_arith import binomial
from .weights import (
    Weight,
    as_weight,
    dominant_weights_in_power,
    in_root_lattice,
    order_key,
    stabilizer_order,
)


class Basis(enum.Enum):
    MONOMIAL = "monomial"
    CHARACTER = "character"


class InconsistentSystem(ArithmeticError):
    pass


@dataclass(frozen=True)
class SymFn:
    """Finite expansion of a Weyl-invariant function in one of the two bases."""

    basis: Basis
    coeffs: dict = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for w, c in self.coeffs.items():
            w = as_weight(w)
            if c != 0:
                clean[w] = c
        object.__setattr__(self, "coeffs", clean)

    def __getitem__(self, w) -> int:
        return self.coeffs.get(Weight(*w), 0)

    def items(self):
        """(weight, coefficient) pairs, lowest weight first."""
        return sorted(self.coeffs.items(), key=lambda kv: order_key(kv[0]))

    def __eq__(self, other):
        if isinstance(other, SymFn):
            return self.basis == other.basis and self.coeffs == other.coeffs
        if isinstance(other, dict):
            return self.coeffs == {Weight(*k): v for k, v in other.items() if v != 0}
        return NotImplemented

    def __len__(self):
        return len(self.coeffs)


def _tuple_weight(u) -> Weight:
    a, b, c = sorted(u, reverse=True)
    return Weight(a - b, b - c)


def _tuple_g(u) -> int:
    distinct = len(set(u))
    return {3: 1, 2: 2, 1: 6}[distinct]


@lru_cache(maxsize=None)
def _mono_product(w1: Weight, w2: Weight) -> tuple:
    p, q = w1
    r, s = w2
    tuples = [
        (p + q + r + s, q + s, 0),
        (p + q + s, q + r + s, 0),
        (p + q + r + s, q, s),
        (p + q + s, q, r + s),
        (p + q, q + r + s, s),
        (p + q, q + s, r + s),
    ]
    acc = defaultdict(int)
    for u in tuples:
        acc[_tuple_weight(u)] += _tuple_g(u)
    denom = stabilizer_order(w1) * stabilizer_order(w2)
    out = {}
    for w, c in acc.items():
        k, r_ = divmod(c, denom)
        if r_:
            raise ArithmeticError(f"M{w1}*M{w2}: non-integral coefficient {c}/{denom} at {w}")
        out[w] = k
    return tuple(sorted(out.items(), key=lambda kv: order_key(kv[0])))


def mono_product(w1, w2) -> SymFn:
    """M_{w1} * M_{w2} expanded in monomial symmetric functions."""
    return SymFn(Basis.MONOMIAL, dict(_mono_product(as_weight(w1), as_weight(w2))))


@lru_cache(maxsize=None)
def a_multiplicity(w, n: int) -> int:
    """Multiplicity of the weight w in the n-th tensor power of the adjoint."""
    p, q = w
    if not in_root_lattice((p, q)):
        return 0
    if p < q:
        p, q = q, p
    l = (p + 2 * q) // 3
    return sum(
        binomial(n, j) * binomial(n, j + q - l) * binomial(n, j + q - 2 * l)
        for j in range(n + 1)
    )


def a_table(n: int) -> SymFn:
    return SymFn(Basis.MONOMIAL, {w: a_multiplicity(w, n) for w in dominant_weights_in_power(n)})


def psi00_squared() -> SymFn:
    return SymFn(
        Basis.MONOMIAL,
        {(0, 0): -6, (1, 1): 2, (2, 2): 1, (3, 0): -2, (0, 3): -2},
    )


@lru_cache(maxsize=None)
def _psi00_psi(w: Weight) -> tuple:
    p, q = w
    acc = defaultdict(int)

    def tilde(c, d, sign):
        acc[Weight(c, d)] += sign * stabilizer_order((c, d))

    tilde(p + 2, q + 2, 1)
    tilde(p + 3, q, -1)
    tilde(p, q + 3, -1)
    tilde(p, q, -1)
    if p - 1 >= 0:
        tilde(p - 1, q + 2, 1)
    if q - 1 >= 0:
        tilde(p + 2, q - 1, 1)
    if p == 0:
        tilde(1, q + 1, 1)
    if q == 0:
        tilde(p + 1, 1, 1)
    return tuple((k, v) for k, v in acc.items() if v)


def psi00_psi(w) -> SymFn:
    """psi_{0,0} * psi_w in the monomial basis."""
    return SymFn(Basis.MONOMIAL, dict(_psi00_psi(as_weight(w))))


@lru_cache(maxsize=None)
def _b_solve(n: int) -> tuple:
    support = dominant_weights_in_power(n)
    lhs = defaultdict(int)
    for nu1, c1 in psi00_squared().items():
        for nu2 in support:
            a = a_multiplicity(nu2, n)
            for alpha, c in _mono_product(nu1, nu2):
                lhs[alpha] += c1 * a * c
    b = {}
    rhs = defaultdict(int)  # contributions of already solved b's, per target weight
    for mu in reversed(support):
        alpha = Weight(mu.p + 2, mu.q + 2)
        psi = dict(_psi00_psi(mu))
        pivot = psi[alpha]
        if pivot == 0:
            raise InconsistentSystem(f"vanishing pivot for {mu}")
        val, r = divmod(lhs[alpha] - rhs[alpha], pivot)
        if r:
            raise InconsistentSystem(f"non-integral b at {mu}")
        b[mu] = val
        for beta, c in psi.items():
            rhs[beta] += c * val
    for alpha in set(lhs) | set(rhs):
        if lhs[alpha] != rhs[alpha]:
            raise InconsistentSystem(f"equation at {alpha} not satisfied")
    return tuple((w, v) for w, v in b.items() if v)


def b_multiplicities(n: int, validate: bool = False) -> SymFn:
    """Irreducible multiplicities b_mu(n) from the triangular monomial system.

    With ``validate`` the result is compared against character peeling of the
    brute-force expansion of chi_{1,1}^n.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    out = SymFn(Basis.CHARACTER, dict(_b_solve(n)))
    if validate:
        from .laurent import adjoint_power, decompose_in_characters

        oracle = decompose_in_characters(adjoint_power(n))
        if out != oracle:
            raise InconsistentSystem(f"triangular solve disagrees with peeling at n={n}")
    return out


# b-formulas as (weight of a, coefficient) lists; symmetric partners handled by b_{q,p} = b_{p,q}
B_FORMULAS = {
    Weight(0, 0): [((0, 0), 1), ((1, 1), -2), ((3, 0), 2), ((2, 2), -1)],
    Weight(1, 1): [((1, 1), 1), ((3, 0), -2), ((4, 1), 2), ((3, 3), -1)],
    Weight(3, 0): [((3, 0), 1), ((2, 2), -1), ((4, 1), -1), ((6, 0), 1), ((3, 3), 1), ((5, 2), -1)],
    Weight(2, 2): [((2, 2), 1), ((4, 1), -2), ((5, 2), 2), ((4, 4), -1)],
    Weight(4, 1): [((4, 1), 1), ((6, 0), -1), ((3, 3), -1), ((7, 1), 1), ((4, 4), 1), ((6, 3), -1)],
    Weight(6, 0): [((6, 0), 1), ((5, 2), -1), ((7, 1), -1), ((6, 3), 1), ((9, 0), 1), ((8, 2), -1)],
    Weight(3, 3): [((3, 3), 1), ((5, 2), -2), ((6, 3), 2), ((5, 5), -1)],
}


def b_formula_value(w, n: int) -> int:
    w = Weight(*w)
    if w not in B_FORMULAS and w.swap() in B_FORMULAS:
        w = w.swap()
    if w not in B_FORMULAS:
        raise KeyError(f"no closed b-formula for {w}")
    return sum(c * a_multiplicity(v, n) for v, c in B_FORMULAS[w])


def b_formula_check(w, n: int) -> bool:
    return b_formula_value(w, n) == b_multiplicities(n)[w]


@lru_cache(maxsize=None)
def _step(w: Weight) -> tuple:
    acc = defaultdict(int)
    acc[w] += 2
    for dp in range(-3, 4):
        for dq in range(-3, 4):
            nu = Weight(w.p + dp, w.q + dq)
            if nu.p < 0 or nu.q < 0:
                continue
            c = dict(_mono_product(Weight(1, 1), nu)).get(w, 0)
            if c:
                acc[nu.canonical()] += c
    return tuple(sorted(((k, v) for k, v in acc.items() if v), key=lambda kv: order_key(kv[0])))


def step_coefficients(w) -> list[tuple[Weight, int]]:
    """Pairs (nu, c) with a_w(n) = sum c * a_nu(n-1), nu folded onto p >= q."""
    w = as_weight(w)
    if not in_root_lattice(w):
        raise ValueError(f"{w} is not in the root lattice")
    return list(_step(w))
