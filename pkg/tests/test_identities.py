from fractions import Fraction

import pytest

from su3franel.calogero import Z1, Z2
from su3franel.exact_arith import NPoly, franel
from su3franel.identities import (
    FranelExpression,
    adjoint_power_z,
    bridge_is_polynomial_identity,
    catalog_entry,
    check_coefficient_relation,
    express_in_franel,
    fit_catalog_entry,
    franel_expression_catalog,
    h_value,
    h_via_franel,
    recurrence_lhs,
    verify_char_derivative_expansions,
    verify_franel_expression,
    verify_franel_recurrence,
    verify_hamiltonian_identity,
)
from su3franel.symfunc import a_multiplicity
from su3franel.weights import Weight

n = NPoly.n()


def test_adjoint_power_in_z():
    for k in range(6):
        assert adjoint_power_z(k) == (Z1 * Z2 - 1) ** k


@pytest.mark.parametrize("k", range(9))
def test_hamiltonian_identity(k):
    assert verify_hamiltonian_identity(k)


@pytest.mark.parametrize("target", [(0, 0), (3, 0)])
def test_coefficient_relations(target):
    for k in range(16):
        assert check_coefficient_relation(target, k)


def test_coefficient_relation_unknown_target():
    with pytest.raises(KeyError):
        check_coefficient_relation((1, 1), 3)


def test_catalog_has_ten_entries():
    cat = franel_expression_catalog()
    assert [e.name for e in cat] == ["a00", "a11", "a30", "a22", "a33", "a44", "a55", "D41", "D52", "D60"]
    assert catalog_entry((0, 0)).prefactor == NPoly((1,))
    assert catalog_entry((0, 0)).terms == ((0, NPoly((1,))),)
    assert catalog_entry((1, 1)).terms == ((0, NPoly((-2,))), (1, NPoly((1,))))
    e22 = catalog_entry((2, 2))
    assert e22.prefactor == 6 * (n + 1)
    assert e22.terms == ((0, 6 * (n + 1)), (1, 4 * (2 * n + 3)), (2, -(n + 3)))
    assert catalog_entry((4, 1)).prefactor == 12 * (n + 1) * (n + 2)
    assert catalog_entry((5, 2)).prefactor == 12 * (n + 1) * (n + 2) * (n + 3)
    assert catalog_entry((6, 0)).prefactor == 6 * (n + 1) * (n + 2) * (n + 3)
    assert catalog_entry((1, 4)) is catalog_entry((4, 1))


@pytest.mark.parametrize("e", franel_expression_catalog(), ids=lambda e: e.name)
def test_catalog_values(e):
    assert verify_franel_expression(e, 20)


def test_catalog_examples():
    assert verify_franel_expression(catalog_entry((3, 0)), 12)
    assert verify_franel_expression(catalog_entry((5, 5)), 10)
    assert verify_franel_expression(catalog_entry((0, 0)), 0)


def test_wrong_expression_rejected():
    bad = FranelExpression("bad", Weight(1, 1), NPoly((6,)), ((0, NPoly((-2,))), (1, NPoly((2,)))))
    assert not verify_franel_expression(bad, 3)
    with pytest.raises(ValueError):
        FranelExpression("zero", Weight(0, 0), NPoly(), ())


def test_express_examples():
    fit = express_in_franel((3, 0), 6 * (n + 1), [0, 1, 2], 1, range(9))
    assert fit.unique
    assert fit.coefficients == (-2 * (n + 1), -(7 * n + 9), n + 2)
    fit = express_in_franel((0, 0), 1, [0], 0, range(6))
    assert fit.coefficients == (NPoly((1,)),)
    fit = express_in_franel((1, 0), 1, [0, 1], 1, range(9))
    assert fit.unique and all(c.is_zero() for c in fit.coefficients)


def test_express_reports_no_solution():
    # a_{1,1} is not F_n times a constant
    fit = express_in_franel((1, 1), 1, [0], 0, range(4))
    assert not fit.solved
    assert not fit.contains([NPoly((1,))])


def test_express_needs_enough_samples():
    with pytest.raises(ValueError):
        express_in_franel((3, 0), 6 * (n + 1), [0, 1, 2], 1, range(8))


@pytest.mark.parametrize("e", franel_expression_catalog(), ids=lambda e: e.name)
def test_solver_recovers_catalog(e):
    fit = fit_catalog_entry(e)
    coeffs = [c for _, c in e.terms]
    assert fit.solved
    assert fit.contains(coeffs)
    if fit.unique:
        assert list(fit.coefficients) == coeffs


def test_kernel_elements_are_franel_relations():
    # every kernel vector is a polynomial relation among shifted Franel numbers
    fit = fit_catalog_entry(catalog_entry((4, 4)))
    assert fit.kernel
    for vec in fit.kernel:
        for k in range(40):
            assert sum(c(k) * franel(k + s) for s, c in zip(fit.shifts, vec)) == 0


def test_h_vanishes():
    assert h_value(0) == 0
    assert h_value(3) == 0
    assert h_value(10) == 0
    assert all(h_value(k) == 0 for k in range(31))


def test_h_via_franel_matches_h():
    for k in range(20):
        assert h_via_franel(k) == h_value(k) == 0


@pytest.mark.parametrize("k", range(1, 9))
def test_char_derivative_expansions(k):
    assert verify_char_derivative_expansions(k)


def test_recurrence_examples():
    assert 9 * 56 - 44 * 10 - 32 * 2 == 0 == recurrence_lhs(2)
    assert -2 * 4 * h_via_franel(2) == recurrence_lhs(4) == 0
    assert bridge_is_polynomial_identity()
    assert verify_franel_recurrence(50)


def test_a_values_through_expressions_are_integers():
    for e in franel_expression_catalog():
        for k in range(15):
            assert e.multiplicity(k) == Fraction(a_multiplicity(e.weight, k))
