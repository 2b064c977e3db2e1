"""Exact-arithmetic tools for tau functions of the KP and 2-Toda hierarchies.

Everything is computed over exact rationals (or over Laurent monomials in
the formal symbols a, b, y_i); no floating point is used anywhere.
"""

from .coeffring import (
    Assignment,
    PolyRing,
    TruncatedPoly,
    YMonomial,
    YPolynomial,
    ZERO,
    specialize,
)
from .content import Y, content_product, phi_coeff, phi_family, theta
from .hierarchy import (
    CoeffOracle,
    ConstraintReport,
    FamilyOracle,
    diagonal_constraint,
    diagonal_sweep,
    kp_constraint,
    kp_definition_residual,
    kp_sweep,
    reconstruct,
    subhierarchy_residual,
    toda_constraint,
    toda_definition_residual,
    toda_equation_residual,
    toda_sweep,
)
from .partitions import Partition, partitions_of, partitions_up_to
from .series import (
    h_poly,
    inner_product,
    perp_apply,
    power_sum_ring,
    schur_perp,
    schur_poly,
    to_schur_basis,
    translate,
)

__all__ = [
    "Assignment",
    "CoeffOracle",
    "ConstraintReport",
    "FamilyOracle",
    "Partition",
    "PolyRing",
    "TruncatedPoly",
    "Y",
    "YMonomial",
    "YPolynomial",
    "ZERO",
    "content_product",
    "diagonal_constraint",
    "diagonal_sweep",
    "h_poly",
    "inner_product",
    "kp_constraint",
    "kp_definition_residual",
    "kp_sweep",
    "partitions_of",
    "partitions_up_to",
    "perp_apply",
    "phi_coeff",
    "phi_family",
    "power_sum_ring",
    "reconstruct",
    "schur_perp",
    "schur_poly",
    "specialize",
    "subhierarchy_residual",
    "theta",
    "to_schur_basis",
    "toda_constraint",
    "toda_definition_residual",
    "toda_equation_residual",
    "toda_sweep",
    "translate",
]

__version__ = "0.1.0"
