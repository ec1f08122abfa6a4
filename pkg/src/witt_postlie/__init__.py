"""Post-Lie structures, induced Lie algebras and Rota-Baxter operators on the Witt algebra.

Everything is exact: scalars are rationals or polynomials in a fixed set of
formal parameters, so a passing check holds for every parameter value.
"""

from .catalog import (
    CatalogEntry,
    FormulaSpec,
    GradedSpec,
    ShiftingSpec,
    TableSpec,
    all_entries,
    catalog_lookup,
    circ,
    example_46_phi,
    example_47_phi,
    induced_bracket,
    module_action,
    transport_scaling,
    transport_tau,
)
from .classify import classify_graded, classify_shifting, match_catalog
from .exact_arith import Poly, parse_rational
from .index_function import IndexFunction
from .rota_baxter import RBOperator, check_weight1, derive_postlie, rb_all_entries, rb_catalog_lookup
from .verify import (
    Window,
    check_equivalence,
    check_graded_equation,
    check_jacobi,
    check_module,
    check_postlie,
    check_postlie_sum,
    check_shifting_equations,
)
from .witt import WittElement, basis, bracket

__version__ = "0.1.0"
