"""Commutation structure of one qudit via the projective line over Z_d.

The generalized Pauli group on a d-level system is generated by the shift
and clock operators; whether two elements commute depends only on their
exponent vectors in Z_d^2 through an alternating bilinear form.  This
package computes that structure exactly: perp-sets, the projective line
P1(Z_d) of free cyclic submodules, the degree layering of vectors, unions
of points, centralizer sizes, and maximal commuting sets -- each quantity
both in closed form and by enumeration, with sweep drivers that compare
the two routes, plus a numeric matrix oracle for small dimensions.
"""

from .errors import (
    BudgetExceededError,
    ModulusMismatchError,
    NonUnitError,
    QuditlineError,
    ZeroVectorError,
)
from .kernels import BACKEND
from .line import (
    LineCatalog,
    Point,
    count_points_through,
    cyclic_submodule,
    enumerate_points,
    line_cardinality,
    point_through,
    points_through,
    union_equals_perp,
    union_of_points,
    union_size,
)
from .matrices import (
    OracleReport,
    build_clock,
    build_shift,
    op_to_matrix,
    verify_identities,
)
from .pauli import (
    CommutingSet,
    LayerRow,
    LayerTable,
    PauliOp,
    commutator,
    commutes,
    commuting_count,
    layer_table,
    maximal_commuting_sets,
    multiply,
    pg_label,
)
from .ring import (
    Modulus,
    PowerRep,
    annihilator,
    crt_combine,
    crt_split,
    factorize,
    inverse,
    is_unit,
    power_rep,
)
from .symplectic import (
    Degree,
    Mat2,
    Vec2,
    apply,
    canonical_form,
    degree,
    form,
    is_admissible,
    perp_cardinality,
    perp_set,
)
from .verify import SweepSummary, verify_modulus, verify_range

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BudgetExceededError",
    "CommutingSet",
    "Degree",
    "LayerRow",
    "LayerTable",
    "LineCatalog",
    "Mat2",
    "Modulus",
    "ModulusMismatchError",
    "NonUnitError",
    "OracleReport",
    "PauliOp",
    "Point",
    "PowerRep",
    "QuditlineError",
    "SweepSummary",
    "Vec2",
    "ZeroVectorError",
    "annihilator",
    "apply",
    "build_clock",
    "build_shift",
    "canonical_form",
    "commutator",
    "commutes",
    "commuting_count",
    "count_points_through",
    "crt_combine",
    "crt_split",
    "cyclic_submodule",
    "degree",
    "enumerate_points",
    "factorize",
    "form",
    "inverse",
    "is_admissible",
    "is_unit",
    "layer_table",
    "line_cardinality",
    "maximal_commuting_sets",
    "multiply",
    "op_to_matrix",
    "perp_cardinality",
    "perp_set",
    "pg_label",
    "point_through",
    "points_through",
    "power_rep",
    "union_equals_perp",
    "union_of_points",
    "union_size",
    "verify_identities",
    "verify_modulus",
    "verify_range",
]
