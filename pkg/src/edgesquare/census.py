"""Exhaustive runs over small connected graphs up to isomorphism."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from functools import lru_cache
from itertools import permutations, product
from typing import Optional, Sequence

from .cm import (
    ResourceCapError,
    is_cm_bipartite,
    necessary_condition_screen,
    purity_report,
    square_is_cm,
)
from .graph import Graph, bits, structural_predicates
from .graphio import to_graph6
from .homology import FieldSpec

DEFAULT_CAP = 6
HARD_CAP = 7


def _code(n: int, adj: Sequence[int], perm: Sequence[int]) -> int:
    """Upper-triangle adjacency bits of the relabelled graph, as one integer."""
    code = 0
    for j in range(1, n):
        row = adj[perm[j]]
        for i in range(j):
            code = (code << 1) | (row >> perm[i] & 1)
    return code


def canonical_form(G: Graph) -> tuple[int, int]:
    """(n, code) identical for exactly the graphs isomorphic to G.

    Vertices are first split into cells by (degree, sorted neighbor degrees);
    the code is the largest adjacency code over all orderings that list the
    cells in a fixed order, which is an exact invariant up to isomorphism.
    """
    ids = G.vertex_ids()
    n = len(ids)
    pos = {v: i for i, v in enumerate(ids)}
    adj = [0] * n
    for v in ids:
        for w in bits(G.adj[v]):
            adj[pos[v]] |= 1 << pos[w]
    deg = [a.bit_count() for a in adj]
    inv = [(deg[i], tuple(sorted(deg[j] for j in bits(adj[i])))) for i in range(n)]
    cells: dict = {}
    for i in range(n):
        cells.setdefault(inv[i], []).append(i)
    ordered = [cells[k] for k in sorted(cells, reverse=True)]
    best = -1
    for choice in product(*(permutations(c) for c in ordered)):
        perm = [v for cell in choice for v in cell]
        best = max(best, _code(n, adj, perm))
    return n, best


def graph_from_code(n: int, code: int) -> Graph:
    edges = []
    pos = n * (n - 1) // 2
    for j in range(1, n):
        for i in range(j):
            pos -= 1
            if code >> pos & 1:
                edges.append((i, j))
    return Graph.from_edges(edges, [f"v{i}" for i in range(n)])


@lru_cache(maxsize=None)
def _connected_codes(n: int) -> tuple[int, ...]:
    if n == 1:
        return (0,)
    found = set()
    for code in _connected_codes(n - 1):
        H = graph_from_code(n - 1, code)
        base = [(u, v) for u, v in H.edges()]
        # every connected graph has a vertex whose removal leaves it connected
        for nbrs in range(1, 1 << (n - 1)):
            edges = base + [(u, n - 1) for u in bits(nbrs)]
            G = Graph.from_edges(edges, [f"v{i}" for i in range(n)])
            found.add(canonical_form(G)[1])
    return tuple(sorted(found))


def connected_graphs(n: int) -> list[Graph]:
    """Connected graphs on exactly n vertices, one per isomorphism class."""
    if n < 1:
        return []
    if n > HARD_CAP:
        raise ResourceCapError(f"enumeration is capped at {HARD_CAP} vertices")
    return [graph_from_code(n, c) for c in _connected_codes(n)]


@dataclass(frozen=True)
class CensusRow:
    graph6: str
    n: int
    m: int
    tree: bool
    chordal: bool
    bipartite: bool
    whiskered: bool
    cycle: bool
    cm_bipartite: bool
    pure: bool
    screen: Optional[str]
    verdicts: dict
    witness: Optional[dict]

    @property
    def is_cm(self) -> bool:
        """CM in every characteristic that was run."""
        return all(self.verdicts.values())

    @property
    def field_disagreement(self) -> bool:
        return len(set(self.verdicts.values())) > 1

    def classes(self) -> list[str]:
        names = ["tree", "chordal", "bipartite", "whiskered", "cycle", "cm_bipartite"]
        return [c for c in names if getattr(self, c)]

    def to_json(self) -> str:
        rec = asdict(self)
        rec["verdicts"] = {str(k): v for k, v in self.verdicts.items()}
        return json.dumps(rec, sort_keys=True)

    @classmethod
    def from_json(cls, line: str) -> "CensusRow":
        rec = json.loads(line)
        rec["verdicts"] = {int(k): v for k, v in rec["verdicts"].items()}
        return cls(**rec)


@dataclass
class CensusReport:
    n_max: int
    chars: tuple[int, ...]
    rows: list[CensusRow]

    COVERED = ("tree", "chordal", "whiskered", "cycle", "cm_bipartite")

    def cm_rows(self) -> list[CensusRow]:
        return [r for r in self.rows if r.is_cm]

    def cm_in_class(self, cls: str) -> list[CensusRow]:
        return [r for r in self.rows if getattr(r, cls) and r.is_cm]

    def disagreements(self) -> list[CensusRow]:
        return [r for r in self.rows if r.field_disagreement]

    def table(self) -> str:
        head = f"{'graph6':<10} {'n':>2} {'m':>2}  {'classes':<36} {'screen':<12} " + " ".join(
            f"p={p:<3}" for p in self.chars)
        lines = [head, "-" * len(head)]
        for r in self.rows:
            v = " ".join(f"{'CM' if r.verdicts[p] else '-':<5}" for p in self.chars)
            lines.append(f"{r.graph6:<10} {r.n:>2} {r.m:>2}  {','.join(r.classes()) or '-':<36} "
                         f"{r.screen or '-':<12} {v}")
        lines.append("")
        lines.append(f"graphs: {len(self.rows)}; CM squares: "
                     + (", ".join(f"{r.graph6} (n={r.n}, m={r.m})" for r in self.cm_rows()) or "none"))
        for cls in self.COVERED:
            hits = self.cm_in_class(cls)
            lines.append(f"  CM within {cls}: " + (", ".join(r.graph6 for r in hits) or "none"))
        dis = self.disagreements()
        lines.append("characteristic disagreements: " + (", ".join(r.graph6 for r in dis) or "none"))
        return "\n".join(lines) + "\n"

    def json_lines(self) -> str:
        return "".join(r.to_json() + "\n" for r in self.rows)


def census_row(G: Graph, chars: Sequence[int] = (2, 3), screen_first: bool = True) -> CensusRow:
    preds = structural_predicates(G)
    screen = necessary_condition_screen(G)
    pure = purity_report(G).is_pure
    verdicts = {}
    witness = None
    for p in chars:
        v = square_is_cm(G, FieldSpec(p), screen=screen_first)
        verdicts[p] = v.is_cm
        if witness is None and v.witness is not None:
            witness = v.to_record()["witness"]
    return CensusRow(
        graph6=to_graph6(G),
        n=len(G),
        m=G.num_edges,
        tree=preds.is_tree,
        chordal=preds.is_chordal,
        bipartite=preds.is_bipartite,
        whiskered=preds.is_whiskered,
        cycle=preds.is_cycle,
        cm_bipartite=is_cm_bipartite(G),
        pure=pure,
        screen=screen.reason if screen else None,
        verdicts=verdicts,
        witness=witness,
    )


def census(
    n_max: int,
    chars: Sequence[int] = (2, 3),
    cap: int = DEFAULT_CAP,
    screen_first: bool = True,
) -> CensusReport:
    """Screen and classify every connected graph on 2..n_max vertices.

    With ``screen_first`` graphs rejected by the necessary-condition screen are
    not swept; without it every graph gets the full Reisner check.
    """
    if n_max > min(cap, HARD_CAP):
        raise ResourceCapError(f"census size {n_max} exceeds the cap {min(cap, HARD_CAP)}")
    for p in chars:
        FieldSpec(p)
    rows = [census_row(G, chars, screen_first) for n in range(2, n_max + 1) for G in connected_graphs(n)]
    return CensusReport(n_max, tuple(chars), rows)
