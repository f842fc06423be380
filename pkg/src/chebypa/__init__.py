"""Permutation arrays under the Chebyshev (l-infinity) distance."""

from .bounds import (
    BallCache,
    BoundRecord,
    Registry,
    ball_size,
    best_known_lower,
    corollary_lower,
    gilbert_lower,
    hamming_upper,
    mu_estimate,
    table_from_csv,
    table_from_json,
    table_to_csv,
    table_to_json,
    vupper_bound,
)
from .channel import ChannelConfig, SimStats, simulate
from .codec import decode_binary, decode_qary, encode_binary, encode_qary, message_length
from .constructions import (
    ChainCode,
    ExplicitCode,
    build_chain_binary,
    build_chain_qary,
    explicit_code,
    explicit_decode,
    extend,
    first_recursive,
    phi,
)
from .core import (
    Permutation,
    PermutationArray,
    ValidationReport,
    as_permutation,
    chebyshev_distance,
    compose,
    identity,
    inverse,
    min_distance,
    validate_pa,
)
from .errors import (
    InvalidArgumentError,
    PAError,
    PreconditionError,
    RangeError,
    ResourceLimitError,
)
from .search import SearchResult, exact_max_pa, greedy_lex

__version__ = "0.1.0"
