"""Edge-list and graph6 reading and writing."""

from __future__ import annotations

from .graph import Graph, GraphError, bits, relabel_compact


class ParseError(GraphError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


def parse_edge_list(text: str) -> Graph:
    """One edge per line as two whitespace-separated names; ``#`` starts a comment.

    A line holding a single name declares an isolated vertex.
    """
    names: list[str] = []
    index: dict[str, int] = {}
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        tokens = line.split()
        if not tokens:
            continue
        if len(tokens) > 2:
            col = raw.index(tokens[2]) + 1
            raise ParseError(f"expected at most two vertex names, found {len(tokens)}", lineno, col)
        ids = []
        for tok in tokens:
            if tok not in index:
                index[tok] = len(names)
                names.append(tok)
            ids.append(index[tok])
        if len(ids) == 2:
            if ids[0] == ids[1]:
                col = raw.index(tokens[1], raw.index(tokens[0]) + len(tokens[0])) + 1
                raise ParseError(f"loop at vertex {tokens[0]!r}", lineno, col)
            edges.append((ids[0], ids[1]))
    return Graph.from_edges(edges, names)


def format_edge_list(G: Graph) -> str:
    lines = [f"{G.names[u]} {G.names[v]}" for u, v in G.edges()]
    lines += [G.names[v] for v in bits(G.isolated_vertices())]
    return "\n".join(lines) + "\n"


def to_graph6(G: Graph) -> str:
    """graph6 string of G (vertices renumbered in id order); supports n < 63."""
    H = relabel_compact(G)
    n = len(H)
    if n >= 63:
        raise GraphError("graph6 writer supports at most 62 vertices")
    out = [chr(n + 63)]
    acc = 0
    nbits = 0
    for j in range(1, n):
        for i in range(j):
            acc = (acc << 1) | int(H.has_edge(i, j))
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def from_graph6(s: str) -> Graph:
    s = s.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise ParseError("empty graph6 string", 1, 1)
    for col, ch in enumerate(s, start=1):
        if not 63 <= ord(ch) <= 126:
            raise ParseError(f"invalid graph6 character {ch!r}", 1, col)
    n = ord(s[0]) - 63
    if n == 63:
        raise ParseError("graph6 reader supports at most 62 vertices", 1, 1)
    need = (n * (n - 1) // 2 + 5) // 6
    if len(s) - 1 != need:
        raise ParseError(f"expected {need} data bytes for n={n}, found {len(s) - 1}", 1, len(s))
    stream = []
    for ch in s[1:]:
        v = ord(ch) - 63
        stream.extend((v >> k) & 1 for k in range(5, -1, -1))
    edges = []
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if stream[pos]:
                edges.append((i, j))
            pos += 1
    return Graph.from_edges(edges, [str(i) for i in range(n)])
