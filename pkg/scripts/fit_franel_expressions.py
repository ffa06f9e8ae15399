"""Fit weight multiplicities to Franel numbers and report the solution spaces.

Runs the exact fitter on every catalogue signature, then tries a few weights
beyond the catalogue with a user-chosen prefactor.

    python scripts/fit_franel_expressions.py --extra 7,1 --prefactor "12(n+1)(n+2)(n+3)(n+4)" --degree 4
"""

import argparse

from su3franel.cli import parse_prefactor, parse_weight
from su3franel.identities import express_in_franel, fit_catalog_entry, franel_expression_catalog


def show(label, fit):
    if not fit.solved:
        print(f"{label}: no solution")
        return
    kind = "unique" if fit.unique else f"kernel dimension {len(fit.kernel)}"
    print(f"{label}: {kind}")
    for s, c in zip(fit.shifts, fit.coefficients):
        print(f"    F_(n+{s}): {c}")


def main():
    parser = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--extra", action="append", default=[], help="weight p,q to fit beyond the catalogue")
    parser.add_argument("--prefactor", default="12(n+1)(n+2)(n+3)(n+4)")
    parser.add_argument("--shifts", type=int, default=5, help="use shifts 0..SHIFTS")
    parser.add_argument("--degree", type=int, default=4)
    args = parser.parse_args()

    for e in franel_expression_catalog():
        fit = fit_catalog_entry(e)
        show(f"{e.name} [{e.prefactor}]", fit)
        print(f"    catalogue coefficients in solution set: {fit.contains([c for _, c in e.terms])}")

    prefactor = parse_prefactor(args.prefactor)
    shifts = list(range(args.shifts + 1))
    unknowns = len(shifts) * (args.degree + 1)
    for text in args.extra:
        w = parse_weight(text)
        fit = express_in_franel(w, prefactor, shifts, args.degree, range(unknowns + 3))
        show(f"a{w.p}{w.q} [{prefactor}]", fit)


if __name__ == "__main__":
    main()
