import numpy as np
import pytest

from edgesquare.complexes import SimplicialComplex
from edgesquare.facets import catalog_to_complex
from edgesquare.graph import single_edge
from edgesquare.homology import (
    GF2,
    FieldSpec,
    boundary_matrix,
    boundary_rank,
    matrix_rank,
    reduced_betti_below_top,
    reduced_betti_numbers,
    reduced_euler_characteristic,
)
from oracles import brute_rank_mod_p
from property_checks import (
    boundary_squared_violations,
    cone_violations,
    euler_violations,
    sample_complexes,
)

HOLLOW = SimplicialComplex.from_facets("abc", [0b011, 0b110, 0b101])


def components(cx):
    verts = list(cx.labels[i] for i in range(len(cx.labels)) if cx.vertices >> i & 1)
    parent = {v: v for v in verts}

    def find(v):
        while parent[v] != v:
            v = parent[v]
        return v

    for F in cx.facets:
        names = cx.names(F)
        for u in names[1:]:
            parent[find(u)] = find(names[0])
    return len({find(v) for v in verts})


def test_field_spec():
    assert str(FieldSpec(3)) == "GF(3)"
    for bad in (0, 1, 4, 9):
        with pytest.raises(ValueError):
            FieldSpec(bad)


def test_hollow_triangle():
    M = boundary_matrix(HOLLOW, 1, FieldSpec(3))
    assert M.shape == (3, 3)
    assert matrix_rank(M, FieldSpec(3)) == 2
    for p in (2, 3, 5):
        assert reduced_betti_numbers(HOLLOW, FieldSpec(p)).reduced_betti == (0, 0, 1)
    assert reduced_betti_below_top(HOLLOW) is None


def test_augmentation_and_empty_face():
    assert boundary_matrix(HOLLOW, -1).shape == (0, 1)
    assert boundary_rank(HOLLOW, 0) == 1
    irrelevant = SimplicialComplex.from_facets("a", [0])
    assert reduced_betti_numbers(irrelevant).reduced_betti == (1,)


def test_edge_square_is_a_circle():
    prof = reduced_betti_numbers(catalog_to_complex(single_edge()), GF2)
    assert prof.reduced_betti == (0, 0, 0, 1)
    assert prof[2] == 1 and prof[-1] == 0 and prof[7] == 0
    assert str(prof) == "b~(-1..2) = [0, 0, 0, 1]"


def test_two_points():
    two = SimplicialComplex.from_facets("ab", [1, 2])
    assert reduced_betti_numbers(two).reduced_betti == (0, 1)
    assert reduced_betti_below_top(two) is None
    four = SimplicialComplex.from_facets("abcd", [0b0011, 0b1100])
    assert reduced_betti_below_top(four) == (0, 1)


def test_rank_against_oracle():
    rng = np.random.default_rng(7)
    for p in (2, 3, 5, 7):
        for _ in range(40):
            r, c = rng.integers(1, 9, size=2)
            M = rng.integers(0, p, size=(r, c)) * (rng.random((r, c)) < 0.5)
            assert matrix_rank(M, FieldSpec(p)) == brute_rank_mod_p(M.tolist(), p)


def test_boundary_ranks_against_oracle():
    for cx in sample_complexes(seed=3, count=15):
        for p in (2, 3):
            for i in range(1, cx.dimension + 1):
                M = boundary_matrix(cx, i, FieldSpec(p))
                assert boundary_rank(cx, i, FieldSpec(p)) == brute_rank_mod_p(M.tolist(), p)


def test_betti_zero_counts_components():
    for cx in sample_complexes(seed=4):
        if cx.vertices:
            assert reduced_betti_numbers(cx)[0] == components(cx) - 1


def test_boundary_of_boundary_vanishes():
    assert boundary_squared_violations(sample_complexes(seed=5, count=20)) == []


def test_euler_characteristic_two_ways():
    chi = reduced_euler_characteristic(HOLLOW)
    assert chi == -1 and isinstance(chi, int)
    assert euler_violations(sample_complexes(seed=6)) == []


def test_cones_are_acyclic():
    assert cone_violations(sample_complexes(seed=8, count=20)) == []
