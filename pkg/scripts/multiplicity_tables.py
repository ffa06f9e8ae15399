"""Print weight and irreducible multiplicities of the adjoint tensor powers.

    python scripts/multiplicity_tables.py --n-max 6
"""

import argparse

from su3franel.symfunc import a_multiplicity, b_multiplicities
from su3franel.weights import dominant_weights_in_power


def main():
    parser = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--n-max", type=int, default=6)
    args = parser.parse_args()

    columns = [w for w in dominant_weights_in_power(args.n_max) if w.p >= w.q]
    print("a_{p,q}(n)")
    print("n".rjust(3), *(f"{w.p},{w.q}".rjust(10) for w in columns))
    for n in range(args.n_max + 1):
        print(str(n).rjust(3), *(str(a_multiplicity(w, n)).rjust(10) for w in columns))
    print()
    print("b_{p,q}(n)")
    print("n".rjust(3), *(f"{w.p},{w.q}".rjust(10) for w in columns))
    for n in range(args.n_max + 1):
        b = b_multiplicities(n, validate=True)
        print(str(n).rjust(3), *(str(b[w]).rjust(10) for w in columns))


if __name__ == "__main__":
    main()
