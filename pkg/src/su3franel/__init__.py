"""Weight multiplicities of SU(3) adjoint tensor powers and Franel numbers, in exact arithmetic."""

from .calogero import ZPoly, apply_delta, deriv_coefficients, epsilon, gegenbauer, x_to_z, z_to_x
from .exact_arith import NPoly, binomial, franel
from .laurent import (
    XLaurent,
    adjoint_character_x,
    adjoint_power,
    decompose_in_characters,
    decompose_in_monomials,
    monomial_symfn_x,
    weyl_character_x,
)
from .symfunc import SymFn, a_multiplicity, b_multiplicities, mono_product, step_coefficients
from .weights import Weight, dominance_lt, dominant_weights_in_power, in_root_lattice, stabilizer_order

__version__ = "0.1.0"

__all__ = [
    "NPoly", "SymFn", "Weight", "XLaurent", "ZPoly",
    "a_multiplicity", "adjoint_character_x", "adjoint_power", "apply_delta", "b_multiplicities",
    "binomial", "decompose_in_characters", "decompose_in_monomials", "deriv_coefficients",
    "dominance_lt", "dominant_weights_in_power", "epsilon", "franel", "gegenbauer",
    "in_root_lattice", "mono_product", "monomial_symfn_x", "stabilizer_order",
    "step_coefficients", "weyl_character_x", "x_to_z", "z_to_x",
]
