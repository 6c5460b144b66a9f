"""Plumbing graphs of lens spaces, their duals, and lattice embeddings."""

from .contfrac import LensSpace, evaluate, expand
from .duality import b2, dualize, dualize_component
from .graphs import (
    DUAL,
    PLUMBING,
    LinearGraph,
    adjusted_weights,
    bad_vertices,
    canonical_form,
    contains_induced,
    count_induced,
    format_graph,
    parse_graph,
)

from .analysis import extend_embedding, mine_forbidden, property_xk, verify_minimal_forbidden
from .conditions import bad_structure, check_17, check_working_conditions
from .embeddings import all_config, classify, enumerate_embeddings
from .fillings import count_fillings, filling_pi1
from .lattice import complement, gram_of_graph, is_isomorphic

__version__ = "0.1.0"
