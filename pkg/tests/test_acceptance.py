"""Exit criteria. Every check is exact; runtime limits are asserted where stated."""

import json
import time

from su3franel.calogero import (
    apply_delta,
    deriv_coefficients,
    epsilon,
    gegenbauer,
    verify_derivative_identity,
    z_to_x,
)
from su3franel.cli import main
from su3franel.identities import (
    check_coefficient_relation,
    fit_catalog_entry,
    franel_expression_catalog,
    h_value,
    h_via_franel,
    recurrence_lhs,
    verify_franel_expression,
    verify_hamiltonian_identity,
)
from su3franel.laurent import (
    adjoint_power,
    decompose_in_characters,
    decompose_in_monomials,
    monomial_symfn_x,
    total_weight_count,
    weyl_character_x,
)
from su3franel.symfunc import B_FORMULAS, a_multiplicity, b_formula_check, b_multiplicities, step_coefficients
from su3franel.weights import dimension, dominant_weights_in_power

from conftest import COUPLINGS, weights_up_to
from test_cli import GOLDEN
from test_symfunc import PAPER_STEPS


def timed(fn):
    t = time.perf_counter()
    ok = fn()
    return ok, time.perf_counter() - t


def test_criterion_1_a_oracle(acceptance):
    def run():
        for n in range(11):
            mono = decompose_in_monomials(adjoint_power(n))
            for p in range(2 * n + 4):
                for q in range(2 * n + 4):
                    if a_multiplicity((p, q), n) != mono.get((p, q), 0):
                        return False
        return True

    ok, dt = timed(run)
    acceptance(1, "closed-form a_{p,q}(n) equals Laurent decomposition, n <= 10", ok and dt < 60, dt)


def test_criterion_2_b_oracle(acceptance):
    def run():
        solve = all(b_multiplicities(n) == decompose_in_characters(adjoint_power(n)) for n in range(9))
        formulas = all(b_formula_check(w, n) and b_formula_check(w.swap(), n) for w in B_FORMULAS for n in range(13))
        return solve and formulas

    ok, dt = timed(run)
    acceptance(2, "triangular b solve equals peeling (n <= 8); seven b-formulas (n <= 12)", ok and dt < 120, dt)


def test_criterion_3_dimensions(acceptance):
    def run():
        for n in range(11):
            chi_n = adjoint_power(n)
            if total_weight_count(decompose_in_monomials(chi_n)) != 8**n:
                return False
            if sum(c * dimension(w) for w, c in b_multiplicities(n).coeffs.items()) != 8**n:
                return False
        return True

    ok, dt = timed(run)
    acceptance(3, "sum a|orbit| = sum b dim = 8^n, n <= 10", ok, dt)


def test_criterion_4_step_recurrences(acceptance):
    def run():
        lists = all(dict(step_coefficients(w)) == PAPER_STEPS[w] for w in PAPER_STEPS)
        values = all(
            a_multiplicity(w, n) == sum(c * a_multiplicity(v, n - 1) for v, c in step_coefficients(w))
            for n in range(1, 13)
            for w in set(dominant_weights_in_power(n)) | set(PAPER_STEPS)
        )
        return lists and values

    ok, dt = timed(run)
    acceptance(4, "step recurrences hold for n <= 12; ten lists match the displayed ones", ok, dt)


def test_criterion_5_hamiltonian(acceptance):
    def run():
        ham = all(verify_hamiltonian_identity(n) for n in range(9))
        rel = all(check_coefficient_relation(t, n) for t in [(0, 0), (3, 0)] for n in range(16))
        return ham and rel

    ok, dt = timed(run)
    acceptance(5, "Hamiltonian identity n <= 8; M00 and M30 relations n <= 15", ok, dt)


def test_criterion_6_franel_catalog(acceptance):
    def run():
        cat = franel_expression_catalog()
        if len(cat) != 10:
            return False
        for e in cat:
            if not verify_franel_expression(e, 20):
                return False
            fit = fit_catalog_entry(e)
            coeffs = [c for _, c in e.terms]
            if not fit.contains(coeffs):
                return False
            if fit.unique and list(fit.coefficients) != coeffs:
                return False
        return True

    ok, dt = timed(run)
    acceptance(6, "ten Franel expressions hold for n <= 20 and are re-derived by the fitter", ok and dt < 60, dt)


def test_criterion_7_calogero(acceptance):
    def run():
        for k in COUPLINGS:
            for w in weights_up_to(6):
                P = gegenbauer(k, w)
                if apply_delta(k, P) != epsilon(k, w) * P:
                    return False
            for w in weights_up_to(5):
                if not verify_derivative_identity(k, w):
                    return False
        for w in weights_up_to(6):
            if z_to_x(gegenbauer(1, w)) != weyl_character_x(w):
                return False
            if z_to_x(gegenbauer(0, w)) != monomial_symfn_x(w):
                return False
        for p in range(8):
            for q in range(8):
                A, B = deriv_coefficients(0, (p, q))
                if (p >= 2 and q >= 1 and A != q) or (q >= 2 and B != -(p + q)):
                    return False
        return True

    ok, dt = timed(run)
    acceptance(7, "eigen-identity, kappa=1 and kappa=0 specializations, derivative rule", ok, dt)


def test_criterion_8_recurrence(acceptance):
    def run():
        from su3franel.identities import bridge_is_polynomial_identity

        direct = all(recurrence_lhs(n) == 0 for n in range(2, 51))
        bridge = all(-2 * n * h_via_franel(n - 2) == recurrence_lhs(n) for n in range(2, 51))
        return direct and bridge and bridge_is_polynomial_identity() and all(h_value(n) == 0 for n in range(31))

    ok, dt = timed(run)
    acceptance(8, "Franel recurrence n <= 50 directly and through -2n h(n-2); h = 0 for n <= 30", ok and dt < 10, dt)


def test_criterion_9_cli_golden(acceptance, capsys):
    cases = [
        (["mult", "--n", "2", "--basis", "monomial", "--format", "csv"], "mult_n2_monomial.csv"),
        (["mult", "--n", "2", "--basis", "character", "--format", "csv"], "mult_n2_character.csv"),
        (["gegenbauer", "--kappa", "1", "--m1", "1", "--m2", "1"], "gegenbauer_k1_m1_1_m2_1.json"),
        (["gegenbauer", "--kappa", "0", "--m1", "1", "--m2", "1"], "gegenbauer_k0_m1_1_m2_1.json"),
    ]
    t = time.perf_counter()
    ok = True
    outputs = {}
    for argv, golden in cases:
        code = main(argv)
        out = capsys.readouterr().out
        outputs[golden] = out
        ok = ok and code == 0 and out == (GOLDEN / golden).read_text()
    terms = lambda g: [(t["a"], t["b"], t["coefficient"]) for t in json.loads(outputs[g])["payload"]["terms"]]  # noqa: E731
    ok = ok and terms("gegenbauer_k1_m1_1_m2_1.json") == [(1, 1, "1"), (0, 0, "-1")]
    ok = ok and terms("gegenbauer_k0_m1_1_m2_1.json") == [(1, 1, "1"), (0, 0, "-3")]
    acceptance(9, "CLI golden outputs for mult n=2 and P^1_{1,1}, P^0_{1,1}", ok, time.perf_counter() - t)
