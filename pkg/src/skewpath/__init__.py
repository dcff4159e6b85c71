"""Hamiltonian paths, path covers and L(2,1)-labelings via skew graphs."""

from .exceptions import GuardExceeded, InputError, InvariantViolation, SkewPathError
from .general import (
    ConstraintSet,
    SimpleGraph,
    complement,
    constrained_ham_path,
    extend_partial,
    segment_decomposition,
)
from .hamilton import (
    HamPath,
    PathCover,
    boxcount_dp,
    consistent_skew_path,
    enumerate_ham_paths,
    ham_path_any,
    ham_path_from,
    longest_path,
    min_path_cover,
)
from .labeling import (
    LambdaRectangle,
    Labeling,
    iter_lambda_rectangles,
    l21_from_cover,
    l21_span,
    lambda_from_path,
    lambda_rectangle,
    validate_labeling,
)
from .table import (
    BoxVertex,
    Pattern,
    PatternClass,
    SkewTable,
    adjacent,
    classify_pattern,
    component_count,
    load_table,
    parse_table,
    remove_vertex,
)
from .toughness import (
    Deficit,
    ToughnessReport,
    deficit,
    has_tight_line,
    is_path_start,
    is_pathwise_tough,
    is_tough_vertex,
    longest_path_support,
    max_path_length,
    path_cover_number,
)

__version__ = "0.1.0"
