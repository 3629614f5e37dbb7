"""Castelnuovo-Mumford regularity of graph edge ideals and their powers.

Exact homological computation (Hochster / upper-Koszul / Taylor routes over
GF(2) or the rationals), an even-connection calculus for colon ideals of
edge-ideal powers, combinatorial regularity classification of connected
bipartite graphs, and a desk-scale theorem-verification sweep.
"""

__version__ = "0.1.0"

from .betti import (
    BettiTable,
    graph_regularity,
    hochster_betti,
    is_k_steps_linear,
    koszul_betti,
    regularity,
    taylor_betti,
)
from .characterizations import (
    RegClass,
    VerificationReport,
    classify_bipartite,
    has_linear_resolution,
    sweep,
    verify_power_regularity,
)
from .errors import (
    EdgeRegError,
    GraphFormatError,
    ResourceCapError,
    VerificationFailure,
)
from .even_connection import (
    ColonGraphResult,
    EvenConnectionWitness,
    colon_graph,
    find_even_connection,
    verify_colon_generators,
    verify_iterated_colon,
)
from .graphs import (
    Bipartition,
    CycleWitness,
    Graph,
    bipartite_complement,
    complement,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    empty_graph,
    enumerate_connected_bipartite,
    find_induced_cycle_geq,
    induced_subgraph,
    is_bipartite,
    is_chordal,
    is_chordal_bipartite,
    path_graph,
)
from .graphio import decode_graph6, encode_graph6, format_edge_list, parse_edge_list
from .homology import (
    FieldChoice,
    SimplicialComplex,
    independence_complex,
    reduced_homology_ranks,
)
from .monomials import (
    Monomial,
    MonomialIdeal,
    SFoldProduct,
    add_monomial,
    colon_by_monomial,
    edge_ideal,
    ideal_equals,
    lcm_lattice,
    minimalize,
    power,
)
