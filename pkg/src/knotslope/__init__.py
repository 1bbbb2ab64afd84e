"""Jones polynomial, signature and checkerboard boundary slopes of knot diagrams."""

from .diagram import (
    Color,
    Coloring,
    PDCode,
    PlanarDiagram,
    build_diagram,
    checkerboard_coloring,
    crossing_signs,
    diagram_from_text,
    is_alternating,
    is_reduced,
    mirror,
    parse_pd,
)
from .laurent import LaurentPolynomial
from .oracles import bracket_oracle, signature_oracle
from .signature import goeritz_matrix, knot_signature, symmetric_signature
from .state_sum import degree_bounds, jones_polynomial, kauffman_bracket, smooth
from .surfaces import boundary_slope, checkerboard_slopes, exceptional_crossings, layered_slope
from .table import load_bundled_table, load_table
from .verify import KnotReport, Verdict, knot_report, run_corpus, verify_identities, verify_main_theorem

__version__ = "0.1.0"

__all__ = [
    "Color", "Coloring", "PDCode", "PlanarDiagram", "build_diagram", "checkerboard_coloring",
    "crossing_signs", "diagram_from_text", "is_alternating", "is_reduced", "mirror", "parse_pd",
    "LaurentPolynomial", "bracket_oracle", "signature_oracle",
    "goeritz_matrix", "knot_signature", "symmetric_signature",
    "degree_bounds", "jones_polynomial", "kauffman_bracket", "smooth",
    "boundary_slope", "checkerboard_slopes", "exceptional_crossings", "layered_slope",
    "load_bundled_table", "load_table",
    "KnotReport", "Verdict", "knot_report", "run_corpus", "verify_identities", "verify_main_theorem",
]
