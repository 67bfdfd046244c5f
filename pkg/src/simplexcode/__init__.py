"""Perfect multiset codes in the discrete simplex under the half-L1 metric.

The package covers the full pipeline: the metric space itself (simplex),
code constructions and verification (codes), exhaustive classification
search by exact cover (search), and end-to-end simulation over a noisy
permutation channel (channel).
"""

from .channel import (
    ChannelConfig,
    ExperimentStats,
    SymbolSequence,
    count_noise_patterns,
    decode_received,
    encode,
    receive,
    run_experiment,
    symmetric_difference,
    transmit,
)
from .codes import (
    BinaryPerfectParams,
    Code,
    PerfectnessResult,
    binary_perfect_params,
    code_from_dict,
    code_to_dict,
    construct_binary_perfect,
    construct_ternary_perfect,
    count_binary_perfect,
    decode,
    dumps_code,
    is_perfect,
    load_code,
    min_distance,
    save_code,
)
from .errors import AmbiguousDecodeError, BudgetExceededError
from .search import (
    SearchProblem,
    SearchReport,
    SweepCell,
    SweepReport,
    canonicalize_code,
    enumerate_perfect_codes,
    predicted_perfect_count,
    verify_theorem_sweep,
)
from .simplex import (
    Direction,
    Point,
    SimplexSpace,
    ball,
    ball_size,
    distance,
    enumerate_space,
    format_point,
    make_point,
    neighbors,
    parse_point,
)

__version__ = "0.1.0"

__all__ = [
    "AmbiguousDecodeError",
    "BinaryPerfectParams",
    "BudgetExceededError",
    "ChannelConfig",
    "Code",
    "Direction",
    "ExperimentStats",
    "PerfectnessResult",
    "Point",
    "SearchProblem",
    "SearchReport",
    "SimplexSpace",
    "SweepCell",
    "SweepReport",
    "SymbolSequence",
    "ball",
    "ball_size",
    "binary_perfect_params",
    "canonicalize_code",
    "code_from_dict",
    "code_to_dict",
    "construct_binary_perfect",
    "construct_ternary_perfect",
    "count_binary_perfect",
    "count_noise_patterns",
    "decode",
    "decode_received",
    "distance",
    "dumps_code",
    "encode",
    "enumerate_perfect_codes",
    "enumerate_space",
    "format_point",
    "is_perfect",
    "load_code",
    "make_point",
    "min_distance",
    "neighbors",
    "parse_point",
    "predicted_perfect_count",
    "receive",
    "run_experiment",
    "save_code",
    "symmetric_difference",
    "transmit",
    "verify_theorem_sweep",
]
