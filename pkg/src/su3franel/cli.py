"""su3franel command line: tables, eigenpolynomials, fitting and verification suites.

Exit codes: 0 success, 1 verification failure or resonance, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from fractions import Fraction
from typing import NamedTuple

from . import calogero, identities, laurent, symfunc
from .exact_arith import NPoly, franel
from .weights import Weight, dominant_weights_in_power, order_key

OK, FAILED, USAGE = 0, 1, 2

# Largest n_max each suite accepts; beyond these the brute-force parts get slow.
SUITE_LIMITS = {
    "hamiltonian": 12,
    "coefficients": 500,
    "franel-expressions": 300,
    "derivative": 10,
    "recurrence": 1000,
    "oracle": 10,
}
SUITES = ("all",) + tuple(SUITE_LIMITS)
DERIVATIVE_COUPLINGS = (Fraction(0), Fraction(1, 2), Fraction(1), Fraction(2))


class UsageError(Exception):
    pass


class Check(NamedTuple):
    suite: str
    check: str
    n: int
    passed: bool


def fmt_rational(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    if not re.fullmatch(r"\s*-?\d+(\s*/\s*\d+)?\s*", text):
        raise UsageError(f"malformed rational {text!r}; expected P or P/Q")
    try:
        return Fraction(text.replace(" ", ""))
    except ZeroDivisionError:
        raise UsageError(f"zero denominator in {text!r}") from None


def parse_weight(text: str) -> Weight:
    m = re.fullmatch(r"\s*\(?\s*(\d+)\s*,\s*(\d+)\s*\)?\s*", text)
    if not m:
        raise UsageError(f"malformed weight {text!r}; expected p,q with p, q >= 0")
    return Weight(int(m.group(1)), int(m.group(2)))


def parse_shifts(text: str) -> list[int]:
    m = re.fullmatch(r"\s*(\d+)\s*\.\.\s*(\d+)\s*", text)
    if m:
        a, b = int(m.group(1)), int(m.group(2))
        if a > b:
            raise UsageError(f"empty shift range {text!r}")
        return list(range(a, b + 1))
    if re.fullmatch(r"\s*\d+(\s*,\s*\d+)*\s*", text):
        return [int(s) for s in text.split(",")]
    raise UsageError(f"malformed shifts {text!r}; expected a..b or a,b,c")


def parse_prefactor(text: str) -> NPoly:
    """Presets such as 1, 6, 6(n+1), 12(n+1)(n+2)."""
    m = re.fullmatch(r"(\d+)?((?:\(n\+\d+\))*)", text.replace(" ", ""))
    if not m or not text.strip() or (m.group(1) is None and not m.group(2)):
        raise UsageError(f"malformed prefactor {text!r}; expected e.g. 6(n+1)(n+2)")
    poly = NPoly.const(int(m.group(1)) if m.group(1) else 1)
    for shift in re.findall(r"\(n\+(\d+)\)", m.group(2)):
        poly = poly * NPoly((int(shift), 1))
    if poly.is_zero():
        raise UsageError("prefactor must not be zero")
    return poly


def non_negative(name: str, value: int) -> int:
    if value < 0:
        raise UsageError(f"{name} must be >= 0, got {value}")
    return value


# ---------------------------------------------------------------- emitters


def emit_json(command, parameters, payload, status) -> str:
    record = {
        "command": command,
        "parameters": {k: str(v) for k, v in parameters.items()},
        "payload": payload,
        "status": status,
    }
    return json.dumps(record, sort_keys=True, indent=2) + "\n"


def emit_csv(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, quoting=csv.QUOTE_NONE, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


# ---------------------------------------------------------------- commands


def cmd_franel(args):
    max_n = non_negative("--max", args.max)
    rows = [(n, franel(n)) for n in range(max_n + 1)]
    if args.format == "csv":
        return emit_csv(("n", "value"), rows), OK
    payload = {"rows": [{"n": n, "value": v} for n, v in rows]}
    return emit_json("franel", {"max": max_n}, payload, "ok"), OK


def multiplicity_rows(n: int, basis: str) -> list[tuple[int, int, int]]:
    if basis == "monomial":
        table = {w: symfunc.a_multiplicity(w, n) for w in dominant_weights_in_power(n)}
    else:
        table = dict(symfunc.b_multiplicities(n, validate=True).coeffs)
    return [(w.p, w.q, c) for w, c in sorted(table.items(), key=lambda kv: order_key(kv[0])) if c]


def cmd_mult(args):
    n = non_negative("--n", args.n)
    rows = multiplicity_rows(n, args.basis)
    if args.format == "csv":
        return emit_csv(("p", "q", "multiplicity"), rows), OK
    payload = {"rows": [{"p": p, "q": q, "multiplicity": c} for p, q, c in rows]}
    return emit_json("mult", {"n": n, "basis": args.basis}, payload, "ok"), OK


def cmd_gegenbauer(args):
    kappa = parse_rational(args.kappa)
    m1, m2 = non_negative("--m1", args.m1), non_negative("--m2", args.m2)
    params = {"kappa": fmt_rational(kappa), "m1": m1, "m2": m2}
    try:
        poly = calogero.gegenbauer(kappa, (m1, m2))
    except calogero.ResonanceError as exc:
        print(f"su3franel: {exc}", file=sys.stderr)
        if args.format == "csv":
            return emit_csv(("error",), [(str(exc).replace(",", ";"),)]), FAILED
        return emit_json("gegenbauer", params, {"error": str(exc)}, "verification-failure"), FAILED
    rows = [(a, b, fmt_rational(c)) for (a, b), c in poly.terms()]
    if args.format == "csv":
        return emit_csv(("a", "b", "coefficient"), rows), OK
    payload = {"terms": [{"a": a, "b": b, "coefficient": c} for a, b, c in rows]}
    return emit_json("gegenbauer", params, payload, "ok"), OK


def cmd_express(args):
    w = parse_weight(args.weight)
    prefactor = parse_prefactor(args.prefactor)
    shifts = parse_shifts(args.shifts)
    degree = non_negative("--degree", args.degree)
    unknowns = len(shifts) * (degree + 1)
    samples = args.samples if args.samples is not None else unknowns + 3
    if samples < unknowns + 3:
        raise UsageError(f"--samples must be at least {unknowns + 3}")
    fit = identities.express_in_franel(w, prefactor, shifts, degree, range(samples))
    params = {
        "weight": f"{w.p},{w.q}",
        "prefactor": args.prefactor,
        "shifts": ",".join(map(str, shifts)),
        "degree": degree,
        "samples": samples,
    }
    if args.format == "csv":
        if not fit.solved:
            return emit_csv(("shift", "coefficient"), [("no solution", "")]), OK
        rows = [(s, str(c)) for s, c in zip(shifts, fit.coefficients)]
        return emit_csv(("shift", "coefficient"), rows), OK
    payload = {
        "solved": fit.solved,
        "unique": fit.unique,
        "kernel_dimension": len(fit.kernel),
        "coefficients": (
            [{"shift": s, "polynomial": str(c), "coeffs": [fmt_rational(x) for x in c.coeffs]}
             for s, c in zip(shifts, fit.coefficients)]
            if fit.solved else "no solution"
        ),
    }
    return emit_json("express", params, payload, "ok"), OK


# ---------------------------------------------------------------- verification suites


def suite_hamiltonian(n_max):
    for n in range(n_max + 1):
        yield Check("hamiltonian", "delta0-chi^(n+2)", n, identities.verify_hamiltonian_identity(n))


def suite_coefficients(n_max):
    for n in range(n_max + 1):
        yield Check("coefficients", "M00-relation", n, identities.check_coefficient_relation((0, 0), n))
        yield Check("coefficients", "M30-relation", n, identities.check_coefficient_relation((3, 0), n))


def suite_franel_expressions(n_max):
    for e in identities.franel_expression_catalog():
        yield Check("franel-expressions", f"{e.name}-values", n_max, identities.verify_franel_expression(e, n_max))
        fit = identities.fit_catalog_entry(e)
        yield Check("franel-expressions", f"{e.name}-refit", n_max, fit.contains([c for _, c in e.terms]))


def suite_derivative(n_max):
    for n in range(1, n_max + 1):
        yield Check("derivative", "dz-expansions", n, identities.verify_char_derivative_expansions(n))
    top = min(n_max, 5)
    for kappa in DERIVATIVE_COUPLINGS:
        ok = all(
            calogero.verify_derivative_identity(kappa, (p, q))
            for p in range(top + 1)
            for q in range(top + 1 - p)
        )
        yield Check("derivative", f"shift-rule-kappa={fmt_rational(kappa)}", top, ok)


def suite_recurrence(n_max):
    yield Check("recurrence", "bridge-symbolic", 0, identities.bridge_is_polynomial_identity())
    for n in range(2, n_max + 1):
        rec = identities.recurrence_lhs(n)
        yield Check("recurrence", "direct", n, rec == 0)
        yield Check("recurrence", "bridge", n, -2 * n * identities.h_via_franel(n - 2) == rec)


def suite_oracle(n_max):
    for n in range(n_max + 1):
        chi_n = laurent.adjoint_power(n)
        mono = laurent.decompose_in_monomials(chi_n)
        closed = {w: symfunc.a_multiplicity(w, n) for w in dominant_weights_in_power(n)}
        yield Check("oracle", "a-multiplicities", n, mono == {w: c for w, c in closed.items() if c})
        chars = laurent.decompose_in_characters(chi_n)
        yield Check("oracle", "b-multiplicities", n, symfunc.b_multiplicities(n) == chars)
        dims = laurent.total_weight_count(mono) == 8**n == sum(
            c * (w.p + 1) * (w.q + 1) * (w.p + w.q + 2) // 2 for w, c in chars.items()
        )
        yield Check("oracle", "dimension-counts", n, dims)
        if n >= 1:
            ok = all(
                closed[w] == sum(c * symfunc.a_multiplicity(v, n - 1) for v, c in symfunc.step_coefficients(w))
                for w in closed
            )
            yield Check("oracle", "step-recurrences", n, ok)


SUITE_RUNNERS = {
    "hamiltonian": suite_hamiltonian,
    "coefficients": suite_coefficients,
    "franel-expressions": suite_franel_expressions,
    "derivative": suite_derivative,
    "recurrence": suite_recurrence,
    "oracle": suite_oracle,
}


def run_suites(suite: str, n_max: int) -> list[Check]:
    names = list(SUITE_RUNNERS) if suite == "all" else [suite]
    for name in names:
        if n_max > SUITE_LIMITS[name]:
            raise UsageError(f"--n-max {n_max} exceeds the limit {SUITE_LIMITS[name]} of suite {name}")
    checks = []
    for name in names:
        checks.extend(SUITE_RUNNERS[name](n_max))
    return checks


def cmd_verify(args):
    n_max = non_negative("--n-max", args.n_max)
    checks = run_suites(args.suite, n_max)
    failed = sum(not c.passed for c in checks)
    code = OK if failed == 0 else FAILED
    if args.format == "csv":
        rows = [(c.suite, c.check, c.n, "pass" if c.passed else "fail") for c in checks]
        return emit_csv(("suite", "check", "n", "result"), rows), code
    payload = {
        "checks": [
            {"suite": c.suite, "check": c.check, "n": c.n, "result": "pass" if c.passed else "fail"}
            for c in checks
        ],
        "failures": failed,
    }
    status = "ok" if code == OK else "verification-failure"
    return emit_json("verify", {"suite": args.suite, "n_max": n_max}, payload, status), code


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--output", default=None, help="write to this path instead of stdout")

    parser = argparse.ArgumentParser(prog="su3franel", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("franel", parents=[common], help="table of Franel numbers")
    p.add_argument("--max", type=int, required=True)
    p.set_defaults(func=cmd_franel)

    p = sub.add_parser("mult", parents=[common], help="multiplicities in the n-th power of the adjoint")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--basis", choices=("monomial", "character"), default="monomial")
    p.set_defaults(func=cmd_mult)

    p = sub.add_parser("gegenbauer", parents=[common], help="eigenpolynomial P^kappa_{m1,m2}")
    p.add_argument("--kappa", required=True, help="rational literal P or P/Q")
    p.add_argument("--m1", type=int, required=True)
    p.add_argument("--m2", type=int, required=True)
    p.set_defaults(func=cmd_gegenbauer)

    limits = ", ".join(f"{k}<={v}" for k, v in SUITE_LIMITS.items())
    p = sub.add_parser("verify", parents=[common], help=f"run verification suites ({limits})")
    p.add_argument("--suite", choices=SUITES, default="all")
    p.add_argument("--n-max", type=int, required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("express", parents=[common], help="fit a multiplicity to Franel numbers")
    p.add_argument("--weight", required=True, help="p,q")
    p.add_argument("--prefactor", default="1", help="preset such as 6(n+1)")
    p.add_argument("--shifts", required=True, help="a..b or a,b,c")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--samples", type=int, default=None)
    p.set_defaults(func=cmd_express)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        text, code = args.func(args)
    except UsageError as exc:
        print(f"su3franel: error: {exc}", file=sys.stderr)
        return USAGE
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
