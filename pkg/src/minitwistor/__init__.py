"""Exact-arithmetic invariants and projective models for circle subgroups of
torus actions on connected sums of complex projective planes.

The pipeline: a weight sequence (k_2, ..., k_{n+2}) encodes a circle subgroup
of a torus acting on nCP^2; the decrement procedure yields the basic invariant
m and a distinguished divisor whose multiplicity vector drives the explicit
quadratic model of the minitwistor space, its singularities, the
discriminant loci of the conic-bundle models, the deformability criterion
n + r - s > 0, and the enumeration of all such actions up to equivalence.
"""

from .catalog import (
    CatalogCache,
    CatalogClass,
    DeltaRow,
    DeltaTable,
    FamilySequence,
    FIBONACCI_TABLE,
    KNOWN_DELTA,
    enumerate_marked,
    family_fibonacci,
    family_involutive,
    family_lebrun,
    fibonacci,
    growth_report,
    insertions,
    resolve_cache_dir,
    reversal_canonical,
    u1_classes,
    u1_classes_cached,
    u1_key,
)
from .conic_bundle import (
    BlowUpSchedule,
    BlowUpStage,
    DiscriminantReport,
    blow_up_schedule,
    discriminant_deformed,
    discriminant_joyce,
)
from .errors import (
    InternalInvariantError,
    InvalidFanError,
    InvalidParameterError,
    InvalidSequenceError,
)
from .exact import INF, Infinity, format_scalar, parse_scalar
from .fans import (
    HalfFan,
    det,
    fan_from_sequence,
    is_valid_sequence,
    self_intersections,
    sequence_from_fan,
    validate_sequence,
)
from .invariants import (
    RegularityReport,
    ReductionTrace,
    TraceDivisor,
    is_lebrun,
    l_vector,
    reduction_steps,
    reduction_trace,
    regularity,
    restriction_multiplicities,
    sequence_l_vector,
    sequence_summary,
    trace_divisor,
)
from .model import (
    BinaryForm,
    MinitwistorModel,
    QuadraticForm,
    SingularityRecord,
    default_lambdas,
    fixed_lines,
    irreducible_marked_fibers,
    minitwistor_model,
    moduli_dimension,
    quadratic_split,
    reducible_fibers,
    rhs_polynomial,
    singularities,
    validate_lambdas,
)

__version__ = "0.1.0"

__all__ = [
    "BinaryForm",
    "BlowUpSchedule",
    "BlowUpStage",
    "CatalogCache",
    "CatalogClass",
    "DeltaRow",
    "DeltaTable",
    "DiscriminantReport",
    "FamilySequence",
    "FIBONACCI_TABLE",
    "HalfFan",
    "INF",
    "Infinity",
    "InternalInvariantError",
    "InvalidFanError",
    "InvalidParameterError",
    "InvalidSequenceError",
    "KNOWN_DELTA",
    "MinitwistorModel",
    "QuadraticForm",
    "ReductionTrace",
    "RegularityReport",
    "SingularityRecord",
    "TraceDivisor",
    "blow_up_schedule",
    "default_lambdas",
    "det",
    "discriminant_deformed",
    "discriminant_joyce",
    "enumerate_marked",
    "family_fibonacci",
    "family_involutive",
    "family_lebrun",
    "fan_from_sequence",
    "fibonacci",
    "fixed_lines",
    "format_scalar",
    "growth_report",
    "insertions",
    "irreducible_marked_fibers",
    "is_lebrun",
    "is_valid_sequence",
    "l_vector",
    "minitwistor_model",
    "moduli_dimension",
    "parse_scalar",
    "quadratic_split",
    "reducible_fibers",
    "reduction_steps",
    "reduction_trace",
    "regularity",
    "resolve_cache_dir",
    "restriction_multiplicities",
    "reversal_canonical",
    "rhs_polynomial",
    "self_intersections",
    "sequence_from_fan",
    "sequence_l_vector",
    "sequence_summary",
    "singularities",
    "trace_divisor",
    "u1_classes",
    "u1_classes_cached",
    "u1_key",
    "validate_lambdas",
    "validate_sequence",
]
