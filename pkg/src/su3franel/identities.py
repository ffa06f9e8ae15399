"""Machine checks of the Franel-number identities carried by weight multiplicities.

Covers the Calogero-Sutherland relation for powers of the adjoint character,
the two coefficient-matching relations, the catalogue of multiplicities written
in Franel numbers, a data-driven fitting solver, and the chain of identities
that ends in the Franel recurrence.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

import sympy

from .calogero import Z1, Z2, ZPoly, apply_delta, deriv_coefficients, x_to_z, z_to_x
from .exact_arith import NPoly, franel, solve_exact
from .laurent import adjoint_power, decompose_in_characters, multiply, weyl_character_x
from .symfunc import a_multiplicity, b_multiplicities
from .weights import Weight, as_weight, dominant_weights_in_power

N = NPoly.n()


@dataclass(frozen=True)
class FranelExpression:
    """prefactor(n) * a_w(n) = sum(coeff(n) * F_{n+shift})."""

    name: str
    weight: Weight
    prefactor: NPoly
    terms: tuple  # of (shift, NPoly)

    def __post_init__(self):
        if self.prefactor.is_zero():
            raise ValueError("prefactor must not vanish identically")

    @property
    def shifts(self) -> list[int]:
        return [s for s, _ in self.terms]

    @property
    def degree(self) -> int:
        return max(c.degree for _, c in self.terms)

    def rhs(self, n: int):
        return sum(c(n) * franel(n + s) for s, c in self.terms)

    def holds_at(self, n: int) -> bool:
        return self.prefactor(n) * a_multiplicity(self.weight, n) == self.rhs(n)

    def multiplicity(self, n: int) -> Fraction:
        """a_w(n) reconstructed from Franel numbers alone."""
        return Fraction(self.rhs(n), self.prefactor(n))


def _expr(name, w, prefactor, *coeffs) -> FranelExpression:
    terms = tuple((s, NPoly._lift(c)) for s, c in enumerate(coeffs))
    return FranelExpression(name, Weight(*w), NPoly._lift(prefactor), terms)


@lru_cache(maxsize=None)
def _catalog() -> tuple:
    n = N
    return (
        _expr("a00", (0, 0), 1, 1),
        _expr("a11", (1, 1), 6, -2, 1),
        _expr("a30", (3, 0), 6 * (n + 1), -2 * (n + 1), -(7 * n + 9), n + 2),
        _expr("a22", (2, 2), 6 * (n + 1), 6 * (n + 1), 4 * (2 * n + 3), -(n + 3)),
        _expr(
            "a33", (3, 3), 6 * (n + 2),
            -2 * (n + 2), 9 * (n + 2), 3 * (5 * n + 12), -(2 * n + 7),
        ),
        _expr(
            "a44", (4, 4), 6 * (n + 1) * (n + 2) * (n + 3),
            6 * (n + 1) * (n + 2) * (n + 3),
            16 * (n + 2) * (n + 3) * (2 * n + 3),
            4 * (n + 3) * (7 * n**2 + 27 * n + 30),
            4 * (n**3 + 2 * n**2 - 2 * n + 9),
            -(n**3 + 6 * n**2 + 11 * n + 18),
        ),
        _expr(
            "a55", (5, 5), 6 * (n + 2) * (n + 3) * (n + 4),
            -2 * (n + 2) * (n + 3) * (n + 4),
            25 * (n + 2) * (n + 3) * (n + 4),
            25 * (n + 3) * (n + 4) * (5 * n + 12),
            5 * (n + 4) * (16 * n**2 + 93 * n + 141),
            -5 * (n + 6) * (4 * n**2 + 23 * n + 24),
            (n + 8) * (n**2 + 6 * n + 3),
        ),
        _expr(
            "D41", (4, 1), 12 * (n + 1) * (n + 2),
            -4 * (n + 1) * (n + 2),
            -2 * (n + 2) * (3 * n + 5),
            -(7 * n**2 + 21 * n + 12),
            (n + 1) * (n + 3),
        ),
        _expr(
            "D52", (5, 2), 12 * (n + 1) * (n + 2) * (n + 3),
            -4 * (n + 1) * (n + 2) * (n + 3),
            -2 * (n + 2) * (n + 3) * (27 * n + 35),
            -(n + 3) * (41 * n**2 + 157 * n + 156),
            14 * n**3 + 111 * n**2 + 244 * n + 99,
            -n * (n + 4) * (n + 5),
        ),
        _expr(
            "D60", (6, 0), 6 * (n + 1) * (n + 2) * (n + 3),
            6 * (n + 1) * (n + 2) * (n + 3),
            12 * (n + 2) * (n + 3) * (2 * n + 3),
            (n + 3) * (13 * n**2 + 49 * n + 54),
            -2 * (5 * n**3 + 36 * n**2 + 74 * n + 31),
            (n + 4) * (n**2 + 4 * n + 1),
        ),
    )


def franel_expression_catalog() -> list[FranelExpression]:
    return list(_catalog())


def catalog_entry(w) -> FranelExpression:
    w = Weight(*w).canonical()
    for e in _catalog():
        if e.weight == w:
            return e
    raise KeyError(f"no Franel expression for {w}")


def verify_franel_expression(e: FranelExpression, n_max: int) -> bool:
    return all(e.holds_at(n) for n in range(n_max + 1))


# ---------------------------------------------------------------- fitting solver


@dataclass(frozen=True)
class FranelFit:
    """Solution set of the fitting problem: ``coefficients + span(kernel)``.

    ``coefficients`` is None when no polynomial combination fits the data.
    """

    weight: Weight
    shifts: tuple
    degree: int
    coefficients: tuple | None
    kernel: tuple = ()

    @property
    def solved(self) -> bool:
        return self.coefficients is not None

    @property
    def unique(self) -> bool:
        return self.solved and not self.kernel

    def contains(self, coeffs: Sequence[NPoly]) -> bool:
        """Whether the given coefficient polynomials are one of the solutions."""
        if not self.solved or len(coeffs) != len(self.shifts):
            return False
        target = _flatten(coeffs, self.degree)
        if target is None:
            return False
        base = _flatten(self.coefficients, self.degree)
        diff = [t - b for t, b in zip(target, base)]
        if not any(diff):
            return True
        if not self.kernel:
            return False
        basis = [_flatten(k, self.degree) for k in self.kernel]
        cols = [list(col) for col in zip(*basis)]
        return solve_exact(cols, diff) is not None


def _flatten(polys, degree):
    out = []
    for p in polys:
        if p.degree > degree:
            return None
        c = list(p.coeffs) + [0] * (degree + 1 - len(p.coeffs))
        out.extend(Fraction(x) for x in c)
    return out


def _unflatten(vec, k, degree) -> tuple:
    return tuple(NPoly(tuple(vec[i * (degree + 1):(i + 1) * (degree + 1)])) for i in range(k))


def express_in_franel(
    w,
    prefactor: NPoly,
    shifts: Sequence[int],
    degree: int,
    sample_n: Sequence[int],
    holdout: int = 5,
) -> FranelFit:
    """Fit prefactor(n) * a_w(n) = sum_i c_i(n) F_{n + shifts[i]} with deg c_i <= degree.

    The system is solved exactly on ``sample_n`` and the particular solution is
    checked on ``holdout`` further points past the largest sample.
    """
    w = as_weight(w)
    shifts = tuple(int(s) for s in shifts)
    if degree < 0 or not shifts or any(s < 0 for s in shifts):
        raise ValueError("need degree >= 0 and a non-empty list of non-negative shifts")
    unknowns = len(shifts) * (degree + 1)
    if len(set(sample_n)) < unknowns + 3:
        raise ValueError(f"need at least {unknowns + 3} distinct sample points, got {len(set(sample_n))}")
    prefactor = NPoly._lift(prefactor)

    def row(n):
        return [n**d * franel(n + s) for s in shifts for d in range(degree + 1)]

    samples = sorted(set(sample_n))
    rows = [row(n) for n in samples]
    rhs = [prefactor(n) * a_multiplicity(w, n) for n in samples]
    sol = solve_exact(rows, rhs)
    if sol is None:
        return FranelFit(w, shifts, degree, None)
    x, kernel = sol
    start = samples[-1] + 1
    for n in range(start, start + holdout):
        if sum(c * v for c, v in zip(x, row(n))) != prefactor(n) * a_multiplicity(w, n):
            return FranelFit(w, shifts, degree, None)
    k = len(shifts)
    return FranelFit(
        w, shifts, degree, _unflatten(x, k, degree), tuple(_unflatten(v, k, degree) for v in kernel)
    )


def fit_catalog_entry(e: FranelExpression, n_samples: int | None = None) -> FranelFit:
    unknowns = len(e.terms) * (e.degree + 1)
    count = n_samples or unknowns + 3
    return express_in_franel(e.weight, e.prefactor, e.shifts, e.degree, range(count))


# ---------------------------------------------------------------- Hamiltonian


@lru_cache(maxsize=None)
def adjoint_power_z(n: int) -> ZPoly:
    return x_to_z(adjoint_power(n))


def verify_hamiltonian_identity(n: int) -> bool:
    lhs = apply_delta(0, adjoint_power_z(n + 2))
    quartic = Z1**2 * Z2**2 - Z1**3 - Z2**3 - 3 * Z1 * Z2
    rhs = (
        3 * (n + 2) * (Z1 * Z2 - 3) * adjoint_power_z(n + 1)
        + 3 * (n + 2) * (n + 1) * quartic * adjoint_power_z(n)
    )
    return lhs == rhs


def coefficient_relation(target, n: int) -> tuple[int, int]:
    """(left, right) sides of the displayed relation for the given M coefficient."""
    a = lambda p, q: a_multiplicity((p, q), n)  # noqa: E731
    target = tuple(target)
    if target == (0, 0):
        left = (n + 2) * a(2, 2) + (n + 3) * a(3, 0) - (n - 3) * a(1, 1) - n * a(0, 0)
        return left, 0
    if target == (3, 0):
        left = 6 * (n * n + 4 * n + 1) * a(5, 2) + 3 * n * (n + 5) * a(6, 0)
        right = (
            -3 * n * (n + 5) * a(0, 0)
            - 6 * (5 * n - 11) * a(1, 1)
            + 6 * (2 * n * n + n + 15) * a(3, 0)
            + 6 * (n * n - n + 12) * a(2, 2)
            - 6 * n * (n + 5) * a(3, 3)
            - 6 * (5 * n - 11) * a(4, 1)
        )
        return left, right
    raise KeyError(f"no coefficient relation for target {target}")


def check_coefficient_relation(target, n: int) -> bool:
    left, right = coefficient_relation(target, n)
    return left == right


# ---------------------------------------------------------------- derivative and h(n)


def h_value(n: int) -> int:
    a = lambda p, q: a_multiplicity((p, q), n)  # noqa: E731
    return -n * a(0, 0) + (n + 1) * a(1, 1) + n * a(2, 2) + (n + 3) * a(3, 3) - 2 * (n + 2) * a(4, 1)


@lru_cache(maxsize=None)
def _character_z(w) -> ZPoly:
    return x_to_z(weyl_character_x(w))


def dz11_rhs(n: int) -> ZPoly:
    """sum a_{p,q}(n) (p chi_{p-1,q} + A chi_{p-2,q-1} + B chi_{p,q-2}) at coupling 0."""
    out = ZPoly()
    for w in dominant_weights_in_power(n):
        a = a_multiplicity(w, n)
        p, q = w
        A, B = deriv_coefficients(0, w)
        if p >= 1:
            out = out + (a * p) * _character_z((p - 1, q))
        if A:
            out = out + (a * A) * _character_z((p - 2, q - 1))
        if B:
            out = out + (a * B) * _character_z((p, q - 2))
    return out


@lru_cache(maxsize=None)
def _z2_times_character(w) -> dict:
    return decompose_in_characters(multiply(weyl_character_x((0, 1)), weyl_character_x(w)))


def verify_char_derivative_expansions(n: int) -> bool:
    if n < 1:
        raise ValueError("n must be >= 1")
    lhs = adjoint_power_z(n).d1()
    # (i) expansion through weight multiplicities and the derivative rule
    if lhs != dz11_rhs(n):
        return False
    # (ii) chain rule on (z1 z2 - 1)^n
    if lhs != n * Z2 * adjoint_power_z(n - 1):
        return False
    # (ii') the same in characters, z2 * chi_{p,q} multiplied out by peeling
    chars = decompose_in_characters(z_to_x(lhs))
    prev = b_multiplicities(n - 1)
    via_b = {}
    for w, c in prev.items():
        for v, d in _z2_times_character(w).items():
            via_b[v] = via_b.get(v, 0) + n * c * d
    if chars != {k: v for k, v in via_b.items() if v}:
        return False
    # (iii) coefficient of chi_{0,1}
    a = lambda p, q: a_multiplicity((p, q), n)  # noqa: E731
    left = a(1, 1) - 3 * a(3, 0) + 2 * a(2, 2)
    right = n * prev[(0, 0)] + n * prev[(1, 1)]
    return left == right == chars.get(Weight(0, 1), 0)


# ---------------------------------------------------------------- Franel recurrence


def recurrence_lhs(n: int) -> int:
    return (n + 1) ** 2 * franel(n + 1) - (7 * n * n + 7 * n + 2) * franel(n) - 8 * n * n * franel(n - 1)


H_TERMS = (((0, 0), -N), ((1, 1), N + 1), ((2, 2), N), ((3, 3), N + 3), ((4, 1), -2 * (N + 2)))


def h_via_franel(n: int) -> Fraction:
    """h(n) with every multiplicity replaced by its Franel expression."""
    return sum((c(n) * catalog_entry(w).multiplicity(n) for w, c in H_TERMS), Fraction(0))


@lru_cache(maxsize=None)
def bridge_is_polynomial_identity() -> bool:
    """-2n h(n-2) equals the recurrence as a combination of F_{n-1}, F_n, F_{n+1},
    with h expanded through the catalogue, checked in Q(n)."""
    n = sympy.symbols("n")

    def sym(poly: NPoly):
        return sum(c * n**d for d, c in enumerate(poly.coeffs))

    coeff = {}
    for w, c in H_TERMS:
        e = catalog_entry(w)
        for s, poly in e.terms:
            coeff[s] = coeff.get(s, 0) + sym(c) * sym(poly) / sym(e.prefactor)
    # h(n-2): F_{n-2+s}; multiply by -2n
    shifted = {s - 2: sympy.cancel(-2 * n * v.subs(n, n - 2)) for s, v in coeff.items()}
    target = {1: (n + 1) ** 2, 0: -(7 * n**2 + 7 * n + 2), -1: -8 * n**2}
    keys = set(shifted) | set(target)
    return all(sympy.cancel(shifted.get(k, 0) - target.get(k, 0)) == 0 for k in keys)


def verify_franel_recurrence(n_max: int) -> bool:
    if n_max < 2:
        raise ValueError("n_max must be >= 2")
    if not bridge_is_polynomial_identity():
        return False
    for n in range(2, n_max + 1):
        rec = recurrence_lhs(n)
        if rec != 0:
            return False
        if -2 * n * h_via_franel(n - 2) != rec:
            return False
    return True
