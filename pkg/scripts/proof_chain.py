"""Walk through the chain of identities that ends in the Franel recurrence.

    python scripts/proof_chain.py --n-max 50
"""

import argparse

from su3franel.identities import (
    bridge_is_polynomial_identity,
    check_coefficient_relation,
    h_value,
    h_via_franel,
    recurrence_lhs,
    verify_char_derivative_expansions,
    verify_hamiltonian_identity,
)


def step(label, ok):
    print(f"{'ok  ' if ok else 'FAIL'} {label}")
    return ok


def main():
    parser = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--n-max", type=int, default=50)
    args = parser.parse_args()
    small = min(args.n_max, 8)

    results = [
        step(f"Delta^0 chi^(n+2) identity, n <= {small}", all(verify_hamiltonian_identity(n) for n in range(small + 1))),
        step(f"M00 relation, n <= {args.n_max}", all(check_coefficient_relation((0, 0), n) for n in range(args.n_max + 1))),
        step(f"M30 relation, n <= {args.n_max}", all(check_coefficient_relation((3, 0), n) for n in range(args.n_max + 1))),
        step(f"z1-derivative expansions, 1 <= n <= {small}", all(verify_char_derivative_expansions(n) for n in range(1, small + 1))),
        step(f"h(n) = 0, n <= {args.n_max}", all(h_value(n) == 0 for n in range(args.n_max + 1))),
        step("-2n h(n-2) is the recurrence, as rational functions of n", bridge_is_polynomial_identity()),
        step(
            f"-2n h(n-2) through Franel expressions = recurrence, 2 <= n <= {args.n_max}",
            all(-2 * n * h_via_franel(n - 2) == recurrence_lhs(n) == 0 for n in range(2, args.n_max + 1)),
        ),
    ]
    raise SystemExit(0 if all(results) else 1)


if __name__ == "__main__":
    main()
