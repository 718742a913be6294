"""Combinatorial models of torus manifolds up to equivariant bordism."""
from .errors import NonGenericError, PreconditionError, SchemaError, TheoremViolation, TorusBordismError
from .exterior import (
    CHAR,
    COCHAR,
    ExteriorPolynomial,
    boundary,
    cone,
    dual,
    external_product,
    fixed_point_map,
    is_closed_faithful,
    is_faithful,
    is_torus_polynomial,
    wedge,
)
from .localization import genus_at_one, genus_series, laurent_check
from .polytope import HPolytope, OrientedCombinatorialData, enumerate_vertices
from .quasitoric import (
    QuasitoricPair,
    check_star,
    connected_sum_pairs,
    product_pairs,
    quasitoric_polynomial,
    torus_graph_of,
)
from .realization import add_pairs, realize_dim1, realize_dim2
from .torusgraph import (
    Dart,
    TorusGraph,
    connected_sum_graphs,
    find_orientation,
    graph_from_polynomial,
    prime_reduce,
    sphere_graph,
    k4_graph,
    torus_polynomial,
    validate_axial,
)
