"""Exact counting, enumeration, bijections, and flip graphs for proper
partitions of colored convex polygons."""

from .model import (
    Blocks,
    ColoredPolygon,
    ColoringScheme,
    ContractError,
    Cyclic,
    CyclicAdjusted3,
    Explicit,
    InvalidPartitionError,
    ParameterError,
    Partition,
    PolypartError,
    Region,
    ResourceLimitError,
    has_monochromatic_region,
    is_k_partition,
    is_kd_partition,
    is_proper,
    make_coloring,
    partition_from_obj,
    partition_to_obj,
    regions,
    root_region,
    standard_reading,
    validate_partition,
)
from .counting import (
    BigCount,
    a_formula,
    b_formula,
    b_prime_bruteforce,
    c_formula,
    catalan_k,
    catalan_kd,
    count_kd_partitions,
    count_proper_dp,
    d_formula,
)
from .enumeration import (
    DEFAULT_MAX_ITEMS,
    count_proper_brute,
    enumerate_k_partitions,
    enumerate_kary_trees,
    enumerate_kd_partitions,
    enumerate_proper,
)
from .trees import (
    KAryTree,
    LEAF,
    edge_count,
    internal_count,
    leaf_count,
    left_comb,
    left_path_length,
    node,
    parse_preorder,
    preorder,
)
from .bijections import (
    FiberedMap,
    blocks_to_tri3,
    is_proper_tree,
    kpartition_to_superblocks,
    partition_to_tree,
    pentagon_fibered,
    proper_tri_to_quad,
    quad_fibered,
    quad_to_proper_tris,
    rooted_block_fiber,
    rooted_block_inverse,
    rooted_block_map,
    rooted_fibered,
    superblocks_to_kpartition,
    tree_to_partition,
    tri3_to_blocks,
)
from .flips import (
    FlipGraph,
    PartitionFlip,
    TreeFlip,
    apply_tree_flip,
    build_flip_graph,
    comb_sequence,
    components,
    partition_flips,
    proper_comb_sequence,
    proper_flip_sequence,
    to_dot,
    tree_flip_graph,
    tree_flips,
)
from .families import ENGINES, FAMILIES, SequenceSpec, count_family

__version__ = "0.1.0"
