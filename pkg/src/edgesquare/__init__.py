"""Stanley-Reisner complexes of squared edge ideals and their Cohen-Macaulay property."""

from .cm import (
    CmVerdict,
    cycle_square_classification,
    double_star_obstruction_check,
    is_cohen_macaulay,
    necessary_condition_screen,
    purity_report,
    square_is_cm,
)
from .complexes import SimplicialComplex, stanley_reisner_complex
from .facets import FacetWitness, catalog_facets, catalog_to_complex, generic_square_complex
from .graph import Graph
from .homology import FieldSpec, reduced_betti_numbers
from .ideals import Monomial, MonomialIdeal, PolarizedVariable, edge_ideal, ideal_power, polarize_ideal

__all__ = [
    "CmVerdict",
    "FacetWitness",
    "FieldSpec",
    "Graph",
    "Monomial",
    "MonomialIdeal",
    "PolarizedVariable",
    "SimplicialComplex",
    "catalog_facets",
    "catalog_to_complex",
    "cycle_square_classification",
    "double_star_obstruction_check",
    "edge_ideal",
    "generic_square_complex",
    "ideal_power",
    "is_cohen_macaulay",
    "necessary_condition_screen",
    "polarize_ideal",
    "purity_report",
    "reduced_betti_numbers",
    "square_is_cm",
    "stanley_reisner_complex",
]
