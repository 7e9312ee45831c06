"""Extremal trees for distance-based indices under a fixed eccentric sequence."""

from .errors import (
    AlreadyCaterpillar,
    BadK,
    BadLabel,
    BadParameters,
    BadSubset,
    DomainError,
    EccTreeError,
    InvalidSequence,
    NotATree,
    NotReducible,
    ParseError,
    SizeLimit,
)
from .tree import (
    EccProfile,
    Tree,
    all_pairs_distances,
    canonical_form,
    ecc_profile,
    from_edge_list,
    is_caterpillar,
    is_isomorphic,
    leaves,
    longest_path,
    parse_edge_list,
    path,
    star,
    to_edge_list,
)
from .sequence import (
    EccSequence,
    build_extremal,
    build_Tdn,
    counterexample_pair,
    of_tree,
    parse_sequence,
    seq_reduce,
    sequences_of_order,
    validate_sorted,
)
from .indices import (
    IndexValue,
    SteinerIndex,
    WeightFunction,
    binomial_split_max,
    evaluate,
    parse_index_spec,
    steiner_distance,
    sw_k_bruteforce,
    sw_k_formula,
    wiener_type,
)
from .transforms import MateTrace, caterpillarize, mate
from .enumeration import (
    VerifyReport,
    classify_by_sequence,
    free_trees,
    labeled_trees,
    random_tree,
    verify_diameter,
    verify_sequences,
    verify_steiner,
    verify_wiener_type,
)

__version__ = "0.1.0"
