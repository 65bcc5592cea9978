"""moykit: exact colored sl(N) graph polynomials, the re-normalized
Reshetikhin-Turaev link invariant, and graded homology dimensions of the
Koszul matrix factorizations attached to closed flow graphs, with the
decategorification cross-check between the two."""

from .qpoly import GradedDim, LaurentPoly, qbinom, qbinom_via_partitions, qfactorial, qint
from .moy import (
    Cap,
    Cross,
    Cup,
    Merge,
    SliceWord,
    Split,
    Strand,
    braid_closure,
    circle,
    colored_rotation,
    parse,
    serialize,
    total_color,
    validate,
)
from .statesum import bracket_dp, bracket_enumerate, pi, vertex_weight
from .invariant import bracket_link, complex_euler, parity_check, resolve_crossing, rt_poly, shift_factor
from .mf import graph_gdim, graph_mf, homology_gdim, simplify, tensor, vertex_mf, verify_gdim_equals_bracket

__all__ = [
    "GradedDim",
    "LaurentPoly",
    "qbinom",
    "qbinom_via_partitions",
    "qfactorial",
    "qint",
    "Cap",
    "Cross",
    "Cup",
    "Merge",
    "SliceWord",
    "Split",
    "Strand",
    "braid_closure",
    "circle",
    "colored_rotation",
    "parse",
    "serialize",
    "total_color",
    "validate",
    "bracket_dp",
    "bracket_enumerate",
    "pi",
    "vertex_weight",
    "bracket_link",
    "complex_euler",
    "parity_check",
    "resolve_crossing",
    "rt_poly",
    "shift_factor",
    "graph_gdim",
    "graph_mf",
    "homology_gdim",
    "simplify",
    "tensor",
    "vertex_mf",
    "verify_gdim_equals_bracket",
]

__version__ = "0.1.0"
