"""Deformed para-Bose superalgebra at roots of unity: Fock modules,
R-matrices, Yang-Baxter and braid-group verification."""

from .braid import BraidRep, braid_generators, braid_relation_residual, intertwiner_commutant_residual
from .errors import (
    AdmissibilityError,
    ClassificationError,
    QAlgebraError,
    SingularFactorError,
    SizeCapError,
    ZeroDenominatorError,
)
from .fock import (
    FockModule,
    Group,
    ModuleSpec,
    boson_boundary_defect,
    boson_relation_residual,
    build_module,
    build_truncated_generic,
    canonical_p,
    central_values,
    classify,
    defining_relation_residual,
    parabose_limit_residual,
)
from .operators import GradedOperator, Space
from .rmatrix import (
    Construction,
    RMatrix,
    intertwine_residual,
    qybe_residual,
    r_check,
    r_explicit,
    r_legs,
    r_legs_via_perm,
    r_universal,
    weight_conservation_residual,
)
from .roots import AdmissibleRoot, RootClass, brace, make_root, qbinom, qint, qpoch_fact
from .tensor import (
    TensorSpace,
    cocommutativity_obstruction,
    coproduct_rep,
    embed_at_leg,
    graded_kron,
    leg_swap,
    opposite_coproduct_rep,
    qbinom_expansion_residual,
    super_perm,
    tensor_space,
)

__version__ = "0.1.0"

__all__ = [
    "AdmissibleRoot",
    "AdmissibilityError",
    "BraidRep",
    "ClassificationError",
    "Construction",
    "FockModule",
    "GradedOperator",
    "Group",
    "ModuleSpec",
    "QAlgebraError",
    "RMatrix",
    "RootClass",
    "SingularFactorError",
    "SizeCapError",
    "Space",
    "TensorSpace",
    "ZeroDenominatorError",
    "boson_boundary_defect",
    "boson_relation_residual",
    "braid_generators",
    "braid_relation_residual",
    "brace",
    "build_module",
    "build_truncated_generic",
    "canonical_p",
    "central_values",
    "classify",
    "cocommutativity_obstruction",
    "coproduct_rep",
    "defining_relation_residual",
    "embed_at_leg",
    "graded_kron",
    "intertwine_residual",
    "intertwiner_commutant_residual",
    "leg_swap",
    "make_root",
    "opposite_coproduct_rep",
    "parabose_limit_residual",
    "qbinom",
    "qbinom_expansion_residual",
    "qint",
    "qpoch_fact",
    "qybe_residual",
    "r_check",
    "r_explicit",
    "r_legs",
    "r_legs_via_perm",
    "r_universal",
    "super_perm",
    "tensor_space",
    "weight_conservation_residual",
]
