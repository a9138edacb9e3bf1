"""Gc: a commutative, non-associative extension of the complex numbers,
with its associative SGc sub-algebra and a two-dimensional Dirac operator."""

from .algebra import (
    GC_TABLE,
    AlgebraElement,
    ConvergenceError,
    DomainError,
    Law,
    LawWitness,
    StructureConstantsTable,
    add,
    check_associative,
    check_commutative,
    check_power_associative_sampled,
    complex_table,
    find_zero_divisors,
    gc_table,
    mul,
    power,
    quaternion_table,
    real_table,
    scale,
)
from .dirac import (
    Branch,
    DiffOpPoly,
    PlaneWave,
    ResidualReport,
    apply_dirac_analytic,
    apply_dirac_fd,
    apply_dirac_twice,
    build_dirac_operator,
    compose_symbol,
    eval_plane_wave,
    klein_gordon_symbol,
    residual_check,
    spinor_ratio,
)
from .gc import (
    AdlerReport,
    GcNumber,
    PolarGc,
    SgcNumber,
    adler_check,
    conj,
    euler_inequality_witness,
    exp_closed,
    exp_series,
    from_polar,
    norm,
    sgc_mul,
    to_polar,
)
from .matrix import (
    GcMatrix,
    GcVector2,
    anticommutator,
    gamma_matrices,
    identity,
    mat_apply,
    mat_mul,
    operator_associator_probe,
)

__version__ = "0.1.0"

__all__ = [
    "add",
    "adler_check",
    "AdlerReport",
    "AlgebraElement",
    "anticommutator",
    "apply_dirac_analytic",
    "apply_dirac_fd",
    "apply_dirac_twice",
    "Branch",
    "build_dirac_operator",
    "check_associative",
    "check_commutative",
    "check_power_associative_sampled",
    "complex_table",
    "compose_symbol",
    "conj",
    "ConvergenceError",
    "DiffOpPoly",
    "DomainError",
    "euler_inequality_witness",
    "eval_plane_wave",
    "exp_closed",
    "exp_series",
    "find_zero_divisors",
    "from_polar",
    "gamma_matrices",
    "GC_TABLE",
    "gc_table",
    "GcMatrix",
    "GcNumber",
    "GcVector2",
    "identity",
    "klein_gordon_symbol",
    "Law",
    "LawWitness",
    "mat_apply",
    "mat_mul",
    "mul",
    "norm",
    "operator_associator_probe",
    "PlaneWave",
    "PolarGc",
    "power",
    "quaternion_table",
    "real_table",
    "residual_check",
    "ResidualReport",
    "scale",
    "sgc_mul",
    "SgcNumber",
    "spinor_ratio",
    "StructureConstantsTable",
    "to_polar",
]
