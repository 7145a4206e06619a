"""Facets of the complex of P(I(G)^2) read off from the graph.

Every facet has the shape W_(1) u A_(1) u Z_(2) for one of four families of
graph data (independent, leaf, star, triangle).  Candidates from all families
are pooled and only the inclusion-maximal ones are kept; a facet reached by
several families keeps every witness.

Polarized vertex (v, copy) sits at bit ``2*v + copy - 1``.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass

from .complexes import SimplicialComplex, maximal_sets, stanley_reisner_complex
from .graph import Graph, GraphError, bits, mask_sort_key, triangles
from .ideals import square_polarization

KINDS = ("independent", "leaf", "star", "triangle")


def first_copy(S: int) -> int:
    """S_(1) as a polarized mask."""
    out = 0
    for v in bits(S):
        out |= 1 << (2 * v)
    return out


def second_copy(S: int) -> int:
    return first_copy(S) << 1


def polarized_labels(G: Graph) -> tuple[str, ...]:
    return tuple(f"{x}{c}" for x in G.names for c in (1, 2))


def polarized_vertices(G: Graph) -> int:
    return first_copy(G.vertices) | second_copy(G.vertices)


@dataclass(frozen=True)
class FacetWitness:
    kind: str
    W: int
    A: int
    Z: int
    center: int = -1

    @property
    def facet(self) -> int:
        return first_copy(self.W | self.A) | second_copy(self.Z)

    def describe(self, G: Graph) -> str:
        def fmt(S: int) -> str:
            return "{" + ",".join(G.labels(S)) + "}"

        if self.kind == "independent":
            tag = f"independent set {''.join(G.labels(self.A))}"
        elif self.kind == "triangle":
            tag = "triangle"
        else:
            rest = self.W & ~(1 << self.center)
            pair = "".join(G.labels(self.W))
            if self.kind == "leaf":
                tag = f"leaf {pair} free at {''.join(G.labels(rest))}"
            else:
                tag = f"star {pair} centered at {G.names[self.center]}"
        return f"{tag}; W={fmt(self.W)} A={fmt(self.A)} Z={fmt(self.Z)}"


def independent_subsets(G: Graph, U: int) -> list[int]:
    """Nonempty independent subsets of U, in submask order."""
    out = []
    sub = U
    while sub:
        if G.is_independent(sub):
            out.append(sub)
        sub = (sub - 1) & U
    return sorted(out, key=mask_sort_key)


def _require_no_isolated(G: Graph) -> None:
    iso = G.isolated_vertices()
    if iso:
        raise GraphError(f"isolated vertices {G.labels(iso)} are not allowed here")


def catalog_candidates(G: Graph) -> list[FacetWitness]:
    """All candidates of the four families before the maximality filter."""
    _require_no_isolated(G)
    V = G.vertices
    out = [FacetWitness("independent", 0, A, V) for A in G.maximal_independent_sets()]

    for a in bits(G.leaves()):
        b = G.adj[a].bit_length() - 1
        W = (1 << a) | (1 << b)
        rest = G.deletion(G.closed_neighborhood(1 << b))
        for A in rest.maximal_independent_sets():
            out.append(FacetWitness("leaf", W, A, V & ~(1 << a), center=b))

    for b in G.vertex_ids():
        nbrs = G.adj[b]
        if not nbrs:
            continue
        for T in independent_subsets(G, nbrs):
            W = T | (1 << b)
            rest = G.deletion(G.closed_neighborhood(W))
            for A in rest.maximal_independent_sets():
                out.append(FacetWitness("star", W, A, V & ~(1 << b), center=b))

    for W in triangles(G):
        rest = G.deletion(G.closed_neighborhood(W))
        for A in rest.maximal_independent_sets():
            out.append(FacetWitness("triangle", W, A, V & ~W))
    return out


def catalog_facets(G: Graph) -> list[FacetWitness]:
    """Witnesses whose assembled sets are facets, sorted by facet then family."""
    cands = catalog_candidates(G)
    keep = set(maximal_sets(c.facet for c in cands))
    seen = set()
    out = []
    for c in cands:
        if c.facet in keep and c not in seen:
            seen.add(c)
            out.append(c)
    out.sort(key=lambda c: (mask_sort_key(c.facet), KINDS.index(c.kind), c.center, mask_sort_key(c.W)))
    return out


def group_by_facet(witnesses: list[FacetWitness]) -> dict[int, list[FacetWitness]]:
    groups: dict[int, list[FacetWitness]] = defaultdict(list)
    for w in witnesses:
        groups[w.facet].append(w)
    return dict(groups)


def catalog_to_complex(G: Graph) -> SimplicialComplex:
    facets = {w.facet for w in catalog_facets(G)}
    return SimplicialComplex.from_facets(polarized_labels(G), facets)


def generic_square_complex(G: Graph, engine: str = "auto") -> SimplicialComplex:
    """The same complex built from the ideal P(I(G)^2)."""
    J = square_polarization(G)
    return stanley_reisner_complex(J, labels=polarized_labels(G), restrict=polarized_vertices(G), engine=engine)
