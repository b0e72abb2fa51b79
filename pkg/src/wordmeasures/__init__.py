"""Word measures on unitary groups: exact representation-theoretic kernels
(dimensions, characters, branching, Weingarten calculus) and a seeded Monte
Carlo engine that checks the corresponding identities and bounds numerically.
"""

from .branching import (
    BlockSubgroup,
    BranchingTable,
    LRCache,
    invariant_dim,
    lr_coefficient,
    power_word_fourier_exact,
    power_word_subgroup,
    restrict,
)
from .errors import (
    CapError,
    DegreeMismatch,
    DomainError,
    HypothesisError,
    NormError,
    ParseError,
    PreconditionError,
    RankError,
    SizeMismatch,
    TrivialWordError,
    UnitarityError,
    WordMeasuresError,
)
from .experiments import (
    EstimateResult,
    Report,
    mc_approx_eigenvectors,
    mc_convolution_identity,
    mc_fourier,
    mc_projection_law,
    mc_small_ball,
    mc_spread_failure,
    mc_trace_moment,
    mc_weingarten_crosscheck,
    projection_law_exact,
    wilson_bounds,
)
from .haar import (
    SeededRng,
    UnitaryMatrix,
    haar_special_unitary,
    haar_unitary,
    word_eval,
)
from .partitions import (
    DominantWeight,
    Partition,
    dim_hook_content,
    dim_weyl,
    dual_partition,
    hook_lengths,
    split_plus_minus,
    sym_dim,
)
from .spectral import (
    MetricReport,
    PiScaled,
    SpectrumOnCircle,
    approx_eigenvector_defect,
    ball_volume_bounds,
    char_value,
    geodesic_distance,
    hs_distance,
    is_separated,
    is_spread,
    metric_report,
    spectrum,
    spread_implies_separated_check,
    su_n_normalization,
)
from .symchar import (
    ClassFunction,
    CycleType,
    class_size,
    convolve,
    cycle_types,
    identity_type,
    mn_character,
    partitions_of,
)
from .weingarten import (
    MonomialSpec,
    integrate_monomial,
    moment_tr_exact,
    weingarten,
    weingarten_class_function,
)
from .words import FreeWord, concat, cyclically_reduce, parse_word, self_concat

__version__ = "0.1.0"
