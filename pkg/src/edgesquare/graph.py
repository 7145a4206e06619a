"""Finite simple graphs on bitmask vertex sets.

Vertices are dense integer ids ``0..N-1`` over a fixed universe of names.
Vertex sets are plain ``int`` bitmasks (bit ``v`` set means ``v`` is a member),
so an induced subgraph keeps the universe and the ids of its parent; only the
membership mask shrinks.  This keeps sets computed on a deletion directly
comparable with sets computed on the original graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator, Optional, Sequence


class GraphError(ValueError):
    """Invalid graph input or query."""


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(ids: Iterable[int]) -> int:
    m = 0
    for i in ids:
        m |= 1 << i
    return m


def mask_sort_key(mask: int) -> tuple[int, ...]:
    return tuple(bits(mask))


@dataclass(frozen=True)
class Graph:
    names: tuple[str, ...]
    adj: tuple[int, ...]
    vertices: int

    def __post_init__(self) -> None:
        if len(self.adj) != len(self.names):
            raise GraphError("adjacency and name tables differ in length")
        if len(set(self.names)) != len(self.names):
            raise GraphError("vertex names must be unique")
        universe = (1 << len(self.names)) - 1
        if self.vertices & ~universe:
            raise GraphError("vertex mask exceeds the universe")
        for v, nbrs in enumerate(self.adj):
            if nbrs >> v & 1:
                raise GraphError(f"loop at vertex {self.names[v]!r}")
            if nbrs & ~self.vertices or (nbrs and not self.vertices >> v & 1):
                raise GraphError(f"edge at {self.names[v]!r} leaves the vertex set")
            for w in bits(nbrs):
                if not self.adj[w] >> v & 1:
                    raise GraphError("adjacency is not symmetric")

    # construction -------------------------------------------------------

    @classmethod
    def from_edges(
        cls,
        edges: Iterable[tuple],
        names: Optional[Sequence[str]] = None,
    ) -> "Graph":
        """Build a graph from an edge list.

        ``names`` fixes the vertex order and may list isolated vertices.  Without
        it, vertices are numbered in order of first appearance.  Edge endpoints
        may be names or (when ``names`` is given) integer ids.
        """
        edges = list(edges)
        if names is None:
            order: list[str] = []
            seen = set()
            for e in edges:
                for x in e:
                    if str(x) not in seen:
                        seen.add(str(x))
                        order.append(str(x))
            names = order
        names = tuple(str(x) for x in names)
        index = {x: i for i, x in enumerate(names)}
        adj = [0] * len(names)

        def resolve(x) -> int:
            if str(x) in index:
                return index[str(x)]
            if isinstance(x, int) and 0 <= x < len(names):
                return x
            raise GraphError(f"edge endpoint {x!r} is not a vertex")

        for e in edges:
            if len(e) != 2:
                raise GraphError(f"edge {e!r} does not have two endpoints")
            u, v = resolve(e[0]), resolve(e[1])
            if u == v:
                raise GraphError(f"loop at vertex {names[u]!r}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(names, tuple(adj), (1 << len(names)) - 1)

    # basic queries ----------------------------------------------------------

    def __len__(self) -> int:
        return self.vertices.bit_count()

    @property
    def universe(self) -> int:
        return len(self.names)

    def vertex_ids(self) -> list[int]:
        return list(bits(self.vertices))

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in bits(self.vertices) for v in bits(self.adj[u]) if u < v]

    @property
    def num_edges(self) -> int:
        return sum(self.adj[v].bit_count() for v in bits(self.vertices)) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.adj[v].bit_count()

    def index(self, name: str) -> int:
        try:
            v = self.names.index(name)
        except ValueError:
            raise GraphError(f"unknown vertex {name!r}") from None
        self._check_vertex(v)
        return v

    def mask(self, names: Iterable[str]) -> int:
        """Vertex set given by names."""
        return mask_of(self.index(x) for x in names)

    def labels(self, mask: int) -> tuple[str, ...]:
        return tuple(self.names[v] for v in bits(mask))

    def _check_vertex(self, v: int) -> None:
        if not (isinstance(v, int) and 0 <= v < len(self.names) and self.vertices >> v & 1):
            raise GraphError(f"vertex {v!r} is not in the graph")

    def _check_set(self, mask: int) -> None:
        if mask & ~self.vertices:
            raise GraphError("vertex set is not contained in the graph")

    # neighborhoods and subgraphs ------------------------------------------

    def neighborhood(self, v: int) -> int:
        self._check_vertex(v)
        return self.adj[v]

    def closed_neighborhood(self, W: int) -> int:
        """N[W]: the members of W together with all their neighbors."""
        self._check_set(W)
        out = W
        for w in bits(W):
            out |= self.adj[w]
        return out

    def induced_subgraph(self, U: int) -> "Graph":
        self._check_set(U)
        adj = tuple(a & U if U >> v & 1 else 0 for v, a in enumerate(self.adj))
        return Graph(self.names, adj, U)

    def deletion(self, U: int) -> "Graph":
        self._check_set(U)
        return self.induced_subgraph(self.vertices & ~U)

    # independent sets -----------------------------------------------------

    def is_independent(self, S: int) -> bool:
        return all(not (self.adj[v] & S) for v in bits(S))

    @cached_property
    def _mis(self) -> tuple[int, ...]:
        found: list[int] = []
        V = self.vertices
        adj = self.adj

        # Bron-Kerbosch with pivoting on the complement graph: an independent
        # set of G is a clique of the complement.
        def expand(R: int, P: int, X: int) -> None:
            if not P and not X:
                found.append(R)
                return
            PX = P | X
            pivot = max(bits(PX), key=lambda u: (P & ~adj[u]).bit_count())
            for v in bits(P & (adj[pivot] | (1 << pivot))):
                keep = ~(adj[v] | (1 << v))
                expand(R | (1 << v), P & keep, X & keep)
                P &= ~(1 << v)
                X |= 1 << v

        expand(0, V, 0)
        return tuple(sorted(found, key=mask_sort_key))

    def maximal_independent_sets(self) -> list[int]:
        """All inclusion-maximal independent sets, sorted by their id tuples.

        The graph with no vertices has exactly one, the empty set.
        """
        return list(self._mis)

    def independence_number(self) -> int:
        return max(A.bit_count() for A in self._mis)

    def is_unmixed(self) -> bool:
        return len({A.bit_count() for A in self._mis}) == 1

    def leaves(self) -> int:
        return mask_of(v for v in bits(self.vertices) if self.adj[v].bit_count() == 1)

    def isolated_vertices(self) -> int:
        return mask_of(v for v in bits(self.vertices) if not self.adj[v])

    def describe(self) -> str:
        edges = ", ".join(f"{self.names[u]}-{self.names[v]}" for u, v in self.edges())
        return f"Graph(V={{{', '.join(self.labels(self.vertices))}}}, E={{{edges}}})"


# structural predicates ------------------------------------------------------


def is_connected(G: Graph) -> bool:
    if not G.vertices:
        return True
    start = G.vertices & -G.vertices
    seen = frontier = start
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= G.adj[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == G.vertices


def components(G: Graph) -> list[int]:
    out = []
    rest = G.vertices
    while rest:
        seen = frontier = rest & -rest
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= G.adj[v]
            frontier = nxt & ~seen
            seen |= frontier
        out.append(seen)
        rest &= ~seen
    return out


def is_tree(G: Graph) -> bool:
    return len(G) >= 1 and is_connected(G) and G.num_edges == len(G) - 1


def is_bipartite(G: Graph) -> bool:
    color: dict[int, int] = {}
    for comp in components(G):
        root = comp & -comp
        r = root.bit_length() - 1
        color[r] = 0
        stack = [r]
        while stack:
            u = stack.pop()
            for w in bits(G.adj[u]):
                if w not in color:
                    color[w] = 1 - color[u]
                    stack.append(w)
                elif color[w] == color[u]:
                    return False
    return True


def is_chordal(G: Graph) -> bool:
    """Repeatedly remove simplicial vertices; chordal iff this empties the graph."""
    rest = G.vertices
    while rest:
        for v in bits(rest):
            nbrs = G.adj[v] & rest
            if all((G.adj[u] | (1 << u)) & nbrs == nbrs for u in bits(nbrs)):
                rest &= ~(1 << v)
                break
        else:
            return False
    return True


def has_triangle(G: Graph) -> bool:
    return any(G.adj[u] & G.adj[v] for u, v in G.edges())


def triangles(G: Graph) -> list[int]:
    out = []
    for u, v in G.edges():
        for w in bits(G.adj[u] & G.adj[v]):
            if w > v:
                out.append((1 << u) | (1 << v) | (1 << w))
    return sorted(out, key=mask_sort_key)


def is_whiskered(G: Graph) -> bool:
    """Whether G is some graph H with one pendant edge attached at every vertex.

    Checked per component.  A single edge is the whiskering of one vertex.  In
    a larger component the whiskers are exactly the degree-one vertices L, so
    with C the rest: every leaf hangs off C, every vertex of C carries exactly
    one leaf, and |L| = |C|.
    """
    if not G.vertices or G.isolated_vertices():
        return False
    for comp in components(G):
        if comp.bit_count() == 2:
            continue
        L = G.leaves() & comp
        C = comp & ~L
        if L.bit_count() != C.bit_count():
            return False
        if any(not (G.adj[a] & C) for a in bits(L)):
            return False
        if not all((G.adj[c] & L).bit_count() == 1 for c in bits(C)):
            return False
    return True


def is_cycle(G: Graph) -> bool:
    return (len(G) >= 3 and is_connected(G)
            and all(G.adj[v].bit_count() == 2 for v in bits(G.vertices)))


@dataclass(frozen=True)
class Predicates:
    is_connected: bool
    is_tree: bool
    is_bipartite: bool
    is_chordal: bool
    has_triangle: bool
    is_whiskered: bool
    is_cycle: bool


def structural_predicates(G: Graph) -> Predicates:
    return Predicates(
        is_connected=is_connected(G),
        is_tree=is_tree(G),
        is_bipartite=is_bipartite(G),
        is_chordal=is_chordal(G),
        has_triangle=has_triangle(G),
        is_whiskered=is_whiskered(G),
        is_cycle=is_cycle(G),
    )


def leaf_path3_witness(G: Graph) -> Optional[tuple[int, int, int, int]]:
    """First induced path z-x-y-w whose ends z and w are leaves of G.

    Candidates are scanned as tuples (z, x, y, w) in lexicographic order.
    """
    L = G.leaves()
    best = None
    for z in bits(L):
        x = (G.adj[z]).bit_length() - 1
        for w in bits(L):
            if w == z:
                continue
            y = G.adj[w].bit_length() - 1
            if y == x or y == z or x == w:
                continue
            # induced: x~y, and no chords z~y, z~w, x~w (leaves make these automatic)
            if G.has_edge(x, y):
                cand = (z, x, y, w)
                if best is None or cand < best:
                    best = cand
    return best


# constructors ---------------------------------------------------------------


def cycle(t: int) -> Graph:
    if t < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    names = [f"v{i}" for i in range(t)]
    return Graph.from_edges([(names[i], names[(i + 1) % t]) for i in range(t)], names)


def path_graph(k: int) -> Graph:
    """Path with k edges (k + 1 vertices)."""
    if k < 1:
        raise GraphError("a path needs at least one edge")
    names = [f"v{i}" for i in range(k + 1)]
    return Graph.from_edges([(names[i], names[i + 1]) for i in range(k)], names)


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graph needs at least one vertex")
    names = [f"v{i}" for i in range(n)]
    return Graph.from_edges(list(combinations(names, 2)), names)


def complete_bipartite(m: int, n: int) -> Graph:
    if m < 1 or n < 1:
        raise GraphError("both sides of K_{m,n} must be nonempty")
    left = [f"a{i}" for i in range(m)]
    right = [f"b{j}" for j in range(n)]
    return Graph.from_edges([(a, b) for a in left for b in right], left + right)


def single_edge() -> Graph:
    return Graph.from_edges([("x", "y")], ["x", "y"])


def triangle() -> Graph:
    return Graph.from_edges([("a", "b"), ("b", "c"), ("c", "a")], ["a", "b", "c"])


def p3() -> Graph:
    """The path z-x-y-w of length three."""
    return Graph.from_edges([("z", "x"), ("x", "y"), ("y", "w")], ["x", "y", "z", "w"])


def stars_example() -> Graph:
    """Six-vertex graph with a triangle x,y,z and pendant structure at x."""
    return Graph.from_edges(
        [("z", "x"), ("x", "y"), ("x", "w"), ("x", "u"), ("w", "v"), ("z", "y")],
        ["x", "y", "z", "w", "u", "v"],
    )


def double_star(s: int, t: int) -> Graph:
    """Centers x0 ~ y0; x0 carries arms x1..xt and y0 carries arms y1..ys."""
    if s < 1 or t < 1:
        raise GraphError("double star needs s, t >= 1")
    names = ["x0", "y0"] + [f"x{i}" for i in range(1, t + 1)] + [f"y{j}" for j in range(1, s + 1)]
    edges = [("x0", "y0")]
    edges += [("x0", f"x{i}") for i in range(1, t + 1)]
    edges += [("y0", f"y{j}") for j in range(1, s + 1)]
    return Graph.from_edges(edges, names)


def whisker(G: Graph) -> Graph:
    """Attach a new pendant vertex ``<name>'`` to every vertex of G."""
    ids = G.vertex_ids()
    names = [G.names[v] for v in ids]
    new = [f"{x}'" for x in names]
    if set(new) & set(names):
        raise GraphError("whisker names collide with existing vertices")
    edges = [(G.names[u], G.names[v]) for u, v in G.edges()]
    edges += list(zip(names, new))
    return Graph.from_edges(edges, names + new)


def relabel_compact(G: Graph) -> Graph:
    """Copy of G on a universe consisting of exactly its vertices."""
    ids = G.vertex_ids()
    pos = {v: i for i, v in enumerate(ids)}
    return Graph.from_edges([(pos[u], pos[v]) for u, v in G.edges()], [G.names[v] for v in ids])
