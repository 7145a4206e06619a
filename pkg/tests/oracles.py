"""Brute-force reference computations, written without the package's machinery.

Graphs here are (vertex list, edge list) pairs of plain names; sets are
frozensets.  Everything is exhaustive and slow on purpose.
"""

from __future__ import annotations

from itertools import chain, combinations, combinations_with_replacement

import networkx as nx


def subsets(items):
    items = list(items)
    return chain.from_iterable(combinations(items, k) for k in range(len(items) + 1))


def brute_mis(vertices, edges):
    E = {frozenset(e) for e in edges}
    indep = [frozenset(S) for S in subsets(vertices)
             if not any(frozenset(p) in E for p in combinations(S, 2))]
    return {S for S in indep if not any(S < T for T in indep)}


def brute_square_generators(vertices, edges):
    """Supports of P(I(G)^2) as frozensets of (vertex, copy), from raw exponent counting."""
    out = set()
    for e, f in combinations_with_replacement([tuple(e) for e in edges], 2):
        exps = {}
        for v in e + f:
            exps[v] = exps.get(v, 0) + 1
        out.add(frozenset((v, c) for v, a in exps.items() for c in range(1, a + 1)))
    # I(G)^2 is generated in degree 4, so the distinct products are minimal
    return out


def brute_sr_facets(ground, generators):
    ground = list(ground)
    faces = [frozenset(S) for S in subsets(ground)
             if not any(g <= frozenset(S) for g in generators)]
    return {S for S in faces if not any(S < T for T in faces)}


def brute_square_facets(vertices, edges):
    """Facets of the complex of P(I(G)^2), with polarized vertices named f'{v}{c}'."""
    gens = brute_square_generators(vertices, edges)
    ground = [(v, c) for v in vertices for c in (1, 2)]
    facets = brute_sr_facets(ground, gens)
    return {frozenset(f"{v}{c}" for v, c in F) for F in facets}


def brute_rank_mod_p(rows, p):
    """Dense Gaussian elimination over GF(p) on a list of lists."""
    M = [[x % p for x in r] for r in rows]
    rank = 0
    ncols = len(M[0]) if M else 0
    for c in range(ncols):
        piv = next((r for r in range(rank, len(M)) if M[r][c]), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        inv = pow(M[rank][c], p - 2, p)
        M[rank] = [x * inv % p for x in M[rank]]
        for r in range(len(M)):
            if r != rank and M[r][c]:
                f = M[r][c]
                M[r] = [(a - f * b) % p for a, b in zip(M[r], M[rank])]
        rank += 1
    return rank


def atlas(max_nodes, *, connected=None, no_isolated=False, min_edges=0):
    """Graphs from the networkx atlas (all graphs up to 7 nodes, up to isomorphism)."""
    for H in nx.graph_atlas_g():
        n = H.number_of_nodes()
        if n == 0:
            continue
        if n > max_nodes:
            break
        if H.number_of_edges() < min_edges:
            continue
        if no_isolated and any(d == 0 for _, d in H.degree()):
            continue
        if connected is not None and nx.is_connected(H) != connected:
            continue
        yield H


def to_graph(H):
    from edgesquare.graph import Graph

    return Graph.from_edges([(f"v{u}", f"v{v}") for u, v in H.edges()], [f"v{u}" for u in H.nodes()])


def raw(H):
    return [f"v{u}" for u in H.nodes()], [(f"v{u}", f"v{v}") for u, v in H.edges()]
