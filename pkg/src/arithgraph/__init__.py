"""Exact enumeration, verification and transforms of arithmetical structures on graphs."""

from .critical import CriticalGroup, blowup_preserves_critical_group, critical_group
from .exactla import (
    IntMatrix,
    SNFResult,
    det,
    integer_kernel,
    kernel_complement_basis,
    proper_principal_minors_positive,
    smith_normal_form,
)
from .graphs import (
    GeneralizedGraph,
    Graph,
    in_generalized_class,
    is_irreducible,
    laplacian_like,
    make_graph,
)
from .mclass import (
    MatrixClass,
    classify,
    verify_thm_almost_nonsingular_equivalence,
    verify_thm_positive_kernel,
)
from .structures import (
    ArithStructure,
    StructureSet,
    WheelCase,
    check_unit_d_neighbors,
    classify_wheel_structure,
    d_from_r,
    enumerate_bounded,
    enumerate_certified,
    is_arithmetical,
    r1_histogram,
    r_from_d,
)
from .transforms import (
    blowup_mq,
    clique_star,
    cycle_to_wheel_affine,
    cycle_to_wheel_divisor,
    cycle_to_wheel_lcm,
    generalized_blowup_a,
    generalized_blowup_m,
    pq_conjugation_check,
    wheel_extend,
    wheel_unit_structure,
    zn_orbit,
)

__version__ = "0.1.0"

__all__ = [
    "ArithStructure",
    "CriticalGroup",
    "GeneralizedGraph",
    "Graph",
    "IntMatrix",
    "MatrixClass",
    "SNFResult",
    "StructureSet",
    "WheelCase",
    "blowup_mq",
    "blowup_preserves_critical_group",
    "check_unit_d_neighbors",
    "classify",
    "classify_wheel_structure",
    "clique_star",
    "critical_group",
    "cycle_to_wheel_affine",
    "cycle_to_wheel_divisor",
    "cycle_to_wheel_lcm",
    "d_from_r",
    "det",
    "enumerate_bounded",
    "enumerate_certified",
    "generalized_blowup_a",
    "generalized_blowup_m",
    "in_generalized_class",
    "integer_kernel",
    "is_arithmetical",
    "is_irreducible",
    "kernel_complement_basis",
    "laplacian_like",
    "make_graph",
    "pq_conjugation_check",
    "proper_principal_minors_positive",
    "r1_histogram",
    "r_from_d",
    "smith_normal_form",
    "verify_thm_almost_nonsingular_equivalence",
    "verify_thm_positive_kernel",
    "wheel_extend",
    "wheel_unit_structure",
    "zn_orbit",
]
