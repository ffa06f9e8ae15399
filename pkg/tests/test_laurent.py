import pytest
from hypothesis import given, strategies as st

from su3franel.laurent import (
    InexactDivision,
    NotWeylInvariant,
    XLaurent,
    adjoint_character_x,
    adjoint_power,
    decompose_in_characters,
    decompose_in_monomials,
    divide_exact,
    monomial_symfn_x,
    multiply,
    power,
    recombine_characters,
    recombine_monomials,
    total_weight_count,
    weyl_character_x,
)
from su3franel.weights import dimension

from conftest import weights_up_to

X1 = XLaurent.monomial(1, 0)
X2 = XLaurent.monomial(0, 1)
X3 = XLaurent.monomial(-1, -1)


def naive_power(f, n):
    out = XLaurent.const(1)
    for _ in range(n):
        out = multiply(out, f)
    return out


def test_multiply_examples():
    assert multiply(X1, X2) == XLaurent({(1, 1): 1})
    f = X1 + 3 * X3
    assert multiply(f, XLaurent.const(1)) == f
    sq = multiply(adjoint_character_x(), adjoint_character_x())
    assert len(sq) == 19
    assert sq[(0, 0)] == 10


def test_power_agrees_with_repeated_multiplication():
    chi = adjoint_character_x()
    for n in range(7):
        assert power(chi, n) == naive_power(chi, n) == adjoint_power(n)


def test_monomial_symfn_examples():
    assert monomial_symfn_x((0, 0)) == XLaurent.const(1)
    assert monomial_symfn_x((1, 0)) == X1 + X2 + X3
    expected = XLaurent({(2, 1): 1, (1, 2): 1, (-1, 1): 1, (1, -1): 1, (-2, -1): 1, (-1, -2): 1})
    assert monomial_symfn_x((1, 1)) == expected


def test_adjoint_character():
    chi = adjoint_character_x()
    assert chi == monomial_symfn_x((1, 1)) + 2
    assert chi.evaluate(1, 1) == 8
    assert chi[(2, 1)] == 1


def test_weyl_character_examples():
    assert weyl_character_x((0, 0)) == XLaurent.const(1)
    assert weyl_character_x((1, 0)) == X1 + X2 + X3
    assert weyl_character_x((1, 1)) == adjoint_character_x()
    assert weyl_character_x((1, 1)).evaluate(1, 1) == 8


def test_weyl_dimension():
    for w in weights_up_to(8):
        assert weyl_character_x(w).evaluate(1, 1) == dimension(w)


def test_inexact_division_detected():
    with pytest.raises(InexactDivision):
        divide_exact(X1 + 1, X2 + 1)


def test_decompose_in_monomials_examples():
    assert decompose_in_monomials(adjoint_character_x()) == {(1, 1): 1, (0, 0): 2}
    assert decompose_in_monomials(adjoint_power(2)) == {(0, 0): 10, (1, 1): 6, (3, 0): 2, (0, 3): 2, (2, 2): 1}
    assert decompose_in_monomials(XLaurent.const(1)) == {(0, 0): 1}


def test_non_invariant_rejected():
    with pytest.raises(NotWeylInvariant):
        decompose_in_monomials(X1)
    with pytest.raises(NotWeylInvariant):
        decompose_in_characters(X1 + X2)


def test_decompose_in_characters_examples():
    assert decompose_in_characters(weyl_character_x((2, 1))) == {(2, 1): 1}
    assert decompose_in_characters(adjoint_power(2)) == {(2, 2): 1, (3, 0): 1, (0, 3): 1, (1, 1): 2, (0, 0): 1}
    assert decompose_in_characters(monomial_symfn_x((1, 1))) == {(1, 1): 1, (0, 0): -2}


def test_weight_counts():
    for n in range(11):
        chi_n = adjoint_power(n)
        assert total_weight_count(decompose_in_monomials(chi_n)) == 8**n
        assert sum(c * dimension(w) for w, c in decompose_in_characters(chi_n).items()) == 8**n


def test_round_trips():
    for n in range(9):
        chi_n = adjoint_power(n)
        assert recombine_monomials(decompose_in_monomials(chi_n)) == chi_n
        assert recombine_characters(decompose_in_characters(chi_n)) == chi_n


@given(st.dictionaries(st.sampled_from(weights_up_to(5)), st.integers(-9, 9), max_size=6))
def test_signed_character_combinations_round_trip(coeffs):
    f = recombine_characters(coeffs)
    assert decompose_in_characters(f) == {w: c for w, c in coeffs.items() if c}
