"""Stanley sequences: greedy 3-free sequences, their independence
certificates, and constructions realizing prescribed scaling and repeat
factors."""

__version__ = "0.1.0"

from .errors import (
    DomainError,
    InconsistencyError,
    InputError,
    NeedMoreTerms,
    OutOfRangeError,
    PreconditionError,
    ResourceLimitError,
    StanleyError,
)
from .sequence import (
    GeneratedSequence,
    ObstructionReport,
    SeedSet,
    covered_by,
    extend,
    generate,
    is_three_free,
    jointly_covered,
    obstruction_set,
    s0_term,
    s0_terms,
)
from .triadic import Triadic
from .analysis import (
    GrowthReport,
    IndependenceCertificate,
    ScalingDecomposition,
    certify,
    check_independence_at,
    classify_growth,
    moy_violations,
    repeat_structure_check,
    scaling_decomposition,
    triple_growth_check,
)
from .construct import (
    Caps,
    ConstructionChain,
    ConstructionStep,
    adk,
    admissible_d_range,
    product,
    repeat_interval,
    target_repeat,
    target_scaling,
)
