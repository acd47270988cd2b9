"""Constructive colorings for {pK2, H}-free graphs, with exact oracles to check them."""

from .bounds import UndefinedBound, binding_bound
from .cograph import NotACograph, color_cograph
from .coloring import ClassViolation, Coloring
from .decomposition import WagonPartition, max_clique, verify_partition, wagon_partition
from .engine import color_family, color_pk2_omega3
from .generators import GenSpec, mycielski_tower, random_family_member, random_graph
from .graph import (
    Graph,
    GraphError,
    complement,
    disjoint_union,
    graph_new,
    induced_subgraph,
    join,
    mycielskian,
    named_graph,
)
from .oracles import (
    OracleLimitExceeded,
    OracleReport,
    alpha_exact,
    chi_exact,
    contains_induced_bruteforce,
    omega_exact,
    validate_coloring,
)
from .recognition import FamilySpec, InducedWitness, contains_induced, has_induced_matching, is_in_family
from .twok2 import (
    color_2k2_gem,
    color_2k2_hvn,
    color_2k2_k1c4,
    color_2k2_k2p4,
    color_2k2_k5e,
    color_wagon_2k2,
)

__version__ = "0.1.0"
