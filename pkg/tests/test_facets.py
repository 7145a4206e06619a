import pytest

from edgesquare.cm import square_complex
from edgesquare.facets import (
    catalog_candidates,
    catalog_facets,
    catalog_to_complex,
    first_copy,
    generic_square_complex,
    group_by_facet,
    polarized_labels,
    second_copy,
)
from edgesquare.graph import GraphError, Graph, has_triangle, p3, single_edge, triangle
from oracles import atlas, to_graph

TRIANGLE_GOLDEN = {
    "a1 b1 c1": "triangle",
    "a2 b2 c1 c2": "independent set c",
    "a1 b2 c1 c2": "star ac centered at a",
    "a2 b1 c1 c2": "star bc centered at b",
    "a2 b1 b2 c2": "independent set b",
    "a1 b1 b2 c2": "star ab centered at a",
    "a1 a2 b2 c2": "independent set a",
    "a1 a2 b1 c2": "star ab centered at b",
    "a2 b1 b2 c1": "star bc centered at c",
    "a1 a2 b2 c1": "star ac centered at c",
}


def test_copies_layout():
    assert first_copy(0b101) == 0b010001
    assert second_copy(0b101) == 0b100010
    assert polarized_labels(p3())[:4] == ("x1", "x2", "y1", "y2")


def test_triangle_catalog_with_tags():
    G = triangle()
    groups = group_by_facet(catalog_facets(G))
    cx = catalog_to_complex(G)
    got = {}
    for F, ws in groups.items():
        assert len(ws) == 1
        got[" ".join(cx.names(F))] = ws[0].describe(G).split(";")[0]
    assert got == TRIANGLE_GOLDEN


def test_edge_has_four_facets():
    G = single_edge()
    cx = catalog_to_complex(G)
    assert cx.facet_sets() == {frozenset(s.split()) for s in ("x1 x2 y1", "x1 x2 y2", "x1 y1 y2", "x2 y1 y2")}
    kinds = sorted(w.kind for w in catalog_facets(G))
    assert kinds == ["independent", "independent", "leaf", "leaf", "star", "star"]


def test_p3_star_facet_uses_non_maximal_independent_part():
    G = p3()
    cx = catalog_to_complex(G)
    F = cx.mask(["x1", "z1", "w1", "y2", "z2", "w2"])
    kinds = {w.kind for w in group_by_facet(catalog_facets(G))[F]}
    assert "star" in kinds


def test_route_equivalence_all_graphs():
    for H in atlas(6, no_isolated=True):
        G = to_graph(H)
        assert catalog_to_complex(G) == generic_square_complex(G), list(H.edges())


def test_candidates_are_faces():
    for H in atlas(5, no_isolated=True):
        G = to_graph(H)
        cx = generic_square_complex(G)
        for c in catalog_candidates(G):
            assert cx.is_face(c.facet)


def test_isolated_vertices_rejected():
    G = Graph.from_edges([("a", "b")], ["a", "b", "c"])
    with pytest.raises(GraphError):
        catalog_facets(G)
    # the ideal route still works: an isolated vertex is a cone point
    assert generic_square_complex(G).is_cone()


def test_route_both():
    assert square_complex(p3(), "both") == catalog_to_complex(p3())
    with pytest.raises(ValueError):
        square_complex(p3(), "nope")


def test_purity_characterization_on_all_small_graphs():
    for H in atlas(6, no_isolated=True):
        G = to_graph(H)
        cx = catalog_to_complex(G)
        n, alpha = len(G), G.independence_number()
        assert cx.is_pure == (G.is_unmixed() and not has_triangle(G))
        assert cx.dimension >= n
        if cx.is_pure:
            assert cx.dimension == n + alpha - 1


def test_every_p3_facet_has_a_family_witness():
    G = p3()
    groups = group_by_facet(catalog_facets(G))
    cx = catalog_to_complex(G)
    assert set(groups) == set(cx.facets) and len(groups) == 9
    kinds = sorted({w.kind for ws in groups.values() for w in ws})
    assert kinds == ["independent", "leaf", "star"]
