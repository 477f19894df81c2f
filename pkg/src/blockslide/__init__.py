"""Token-sliding independent-set reconfiguration on block graphs.

A structural polynomial-time decision procedure (block-cut tree pairs,
depth/ua invariants, capacities, fixed-point potentials, rigid vertices)
cross-validated against a brute-force state-space oracle.
"""

from .blocks import (
    BlockDecomposition,
    Pair,
    TO_BLOCK,
    TO_VERTEX,
    beta,
    decompose,
    is_block_graph,
    kappa,
    pairs,
    side_vertices,
)
from .decide import Reason, Verdict, decide, decide_connected, rigid_vertices
from .errors import (
    BlockslideError,
    DuplicateEdgeError,
    InstanceFormatError,
    InvalidPairError,
    InvalidParamsError,
    MissingSectionError,
    NotABlockGraphError,
    NotConnectedError,
    NotIndependentError,
    SelfLoopError,
    TruncatedSpaceError,
    VertexOutOfRangeError,
)
from .gen import GenParams, SplitMix64, gen_block_graph, gen_independent_set
from .graph import (
    Graph,
    TokenSet,
    connected_components,
    is_independent,
    is_under_attack,
    new_graph,
)
from .instance import Instance, parse_instance, render_instance
from .invariants import DepthTable, UaTable, compute_depths, compute_ua
from .oracle import (
    NO,
    UNKNOWN,
    YES,
    OracleLimits,
    StateSpace,
    enumerate_reachable,
    never_token_vertices,
    oracle_potential,
    oracle_potential_table,
    oracle_reachable,
    successors,
)
from .potential import (
    PotentialTable,
    Restriction,
    capacity,
    capacity_table,
    compute_potentials,
    restrict,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
