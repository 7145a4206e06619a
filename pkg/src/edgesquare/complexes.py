"""Abstract simplicial complexes stored as facet bitmasks."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Optional, Sequence

from .graph import bits, mask_of, mask_sort_key
from .ideals import MonomialIdeal

SCAN_LIMIT = 20
AUTO_SCAN_MAX = 16


class ComplexError(ValueError):
    pass


def maximal_sets(masks) -> list[int]:
    """Inclusion-maximal members of a family of bitmasks, deduplicated."""
    uniq = sorted(set(masks), key=lambda m: -m.bit_count())
    keep: list[int] = []
    for m in uniq:
        if not any(m & k == m for k in keep):
            keep.append(m)
    return keep


@dataclass(frozen=True)
class SimplicialComplex:
    """Complex on a labelled universe; ``vertices`` and ``facets`` are bitmasks.

    The complex with the single facet 0 is the irrelevant complex {empty face}.
    """

    labels: tuple[str, ...]
    vertices: int
    facets: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.facets:
            raise ComplexError("a complex needs at least one facet (use the empty facet for {0})")
        universe = (1 << len(self.labels)) - 1
        cover = 0
        for F in self.facets:
            cover |= F
        if self.vertices & ~universe:
            raise ComplexError("vertex set exceeds the label universe")
        if cover != self.vertices:
            raise ComplexError("every vertex must lie in a facet and facets must use only vertices")
        for i, F in enumerate(self.facets):
            for j, H in enumerate(self.facets):
                if i != j and F & H == F:
                    raise ComplexError("facets do not form an antichain")

    @classmethod
    def from_facets(cls, labels: Sequence[str], facets) -> "SimplicialComplex":
        keep = maximal_sets(facets)
        if not keep:
            keep = [0]
        keep.sort(key=mask_sort_key)
        cover = 0
        for F in keep:
            cover |= F
        return cls(tuple(labels), cover, tuple(keep))

    @classmethod
    def from_label_sets(cls, labels: Sequence[str], facets) -> "SimplicialComplex":
        index = {x: i for i, x in enumerate(labels)}
        return cls.from_facets(labels, [mask_of(index[x] for x in F) for F in facets])

    # derived data ------------------------------------------------------

    @property
    def dimension(self) -> int:
        return max(F.bit_count() for F in self.facets) - 1

    @property
    def is_pure(self) -> bool:
        return len({F.bit_count() for F in self.facets}) == 1

    def is_face(self, sigma: int) -> bool:
        return any(sigma & F == sigma for F in self.facets)

    def facet_sets(self) -> set[frozenset[str]]:
        return {frozenset(self.names(F)) for F in self.facets}

    def names(self, mask: int) -> tuple[str, ...]:
        return tuple(self.labels[v] for v in bits(mask))

    def mask(self, names) -> int:
        index = {x: i for i, x in enumerate(self.labels)}
        try:
            return mask_of(index[x] for x in names)
        except KeyError as exc:
            raise ComplexError(f"unknown vertex {exc.args[0]!r}") from None

    def is_cone(self) -> bool:
        """True when some vertex lies in every facet."""
        common = self.vertices
        for F in self.facets:
            common &= F
        return bool(common)

    @cached_property
    def _faces_by_size(self) -> tuple[tuple[int, ...], ...]:
        seen: set[int] = set()
        for F in self.facets:
            if F in seen:
                continue
            sub = F
            while True:
                seen.add(sub)
                if sub == 0:
                    break
                sub = (sub - 1) & F
        d = self.dimension + 1
        layers: list[list[int]] = [[] for _ in range(d + 1)]
        for s in seen:
            layers[s.bit_count()].append(s)
        return tuple(tuple(sorted(layer, key=mask_sort_key)) for layer in layers)

    def faces_of_size(self, k: int) -> tuple[int, ...]:
        layers = self._faces_by_size
        return layers[k] if 0 <= k < len(layers) else ()

    def all_faces(self) -> Iterator[int]:
        """Every face exactly once: the empty face first, then by size and lexicographically."""
        for layer in self._faces_by_size:
            yield from layer

    def f_vector(self) -> list[int]:
        """Face counts by size 0..dim+1 (so entry 0 is the empty face)."""
        return [len(layer) for layer in self._faces_by_size]

    def link(self, sigma: int) -> "SimplicialComplex":
        if not self.is_face(sigma):
            raise ComplexError(f"{self.names(sigma)} is not a face")
        if sigma == 0:
            return self
        return SimplicialComplex.from_facets(
            self.labels, [F & ~sigma for F in self.facets if sigma & F == sigma]
        )

    def is_connected(self) -> bool:
        """Connectedness of the 1-skeleton; the void-like complexes count as connected."""
        if not self.vertices:
            return True
        start = self.vertices & -self.vertices
        reach = start
        changed = True
        while changed:
            changed = False
            for F in self.facets:
                if F & reach and F & ~reach:
                    reach |= F
                    changed = True
        return reach == self.vertices

    def render(self, subscript: bool = False) -> str:
        """Facet-list text: one facet per line, vertices in ambient order, lines sorted."""
        lines = [" ".join(render_label(self.labels[v], subscript) for v in bits(F)) for F in self.facets]
        return "\n".join(sorted(lines)) + "\n"


def render_label(label: str, subscript: bool) -> str:
    """``x1`` -> ``x_1``.  Copy indices are single digits, so base names may end in digits."""
    if subscript and len(label) > 1 and label[-1].isdigit():
        return f"{label[:-1]}_{label[-1]}"
    return label


# Stanley-Reisner complexes ---------------------------------------------------


def _forbidden(I: MonomialIdeal, restrict: Optional[int]) -> tuple[int, list[int]]:
    n = len(I.variables)
    ambient = (1 << n) - 1 if restrict is None else restrict
    supports = []
    for g in I.generators:
        if not g.is_squarefree:
            raise ComplexError("Stanley-Reisner complex needs a squarefree ideal")
        if g.degree < 2:
            raise ComplexError("generators must have degree at least 2")
        s = g.support
        if s & ambient == s:
            supports.append(s)
    return ambient, supports


def _facets_by_scan(ambient: int, supports: list[int]) -> list[int]:
    verts = list(bits(ambient))
    if len(verts) > SCAN_LIMIT:
        raise ComplexError(f"subset scan limited to {SCAN_LIMIT} vertices")
    faces = []
    for code in range(1 << len(verts)):
        s = 0
        for k, v in enumerate(verts):
            if code >> k & 1:
                s |= 1 << v
        if not any(g & s == g for g in supports):
            faces.append(s)
    return maximal_sets(faces)


def minimal_transversals(edges: list[int]) -> list[int]:
    """Minimal hitting sets of a hypergraph (Berge's incremental method)."""
    trans = [0]
    for e in sorted(set(edges), key=int.bit_count):
        nxt = set()
        for T in trans:
            if T & e:
                nxt.add(T)
            else:
                for v in bits(e):
                    nxt.add(T | (1 << v))
        cand = sorted(nxt, key=int.bit_count)
        trans = []
        for T in cand:
            if not any(S & T == S for S in trans):
                trans.append(T)
    return trans


def _facets_by_dualization(ambient: int, supports: list[int]) -> list[int]:
    return [ambient & ~T for T in minimal_transversals(supports)]


def stanley_reisner_complex(
    I: MonomialIdeal,
    labels: Optional[Sequence[str]] = None,
    restrict: Optional[int] = None,
    engine: str = "auto",
) -> SimplicialComplex:
    """Complex of squarefree monomials outside I.

    ``restrict`` limits the vertex set to a subset of the ambient variables
    (generators touching other variables are then irrelevant).  ``engine`` is
    ``"scan"`` (all subsets), ``"dual"`` (minimal transversals) or ``"auto"``.
    """
    ambient, supports = _forbidden(I, restrict)
    if labels is None:
        labels = [str(x) for x in I.variables]
    if engine == "auto":
        engine = "scan" if ambient.bit_count() <= AUTO_SCAN_MAX else "dual"
    if engine == "scan":
        facets = _facets_by_scan(ambient, supports)
    elif engine == "dual":
        facets = _facets_by_dualization(ambient, supports)
    else:
        raise ValueError(f"unknown engine {engine!r}")
    cx = SimplicialComplex.from_facets(labels, facets)
    if cx.vertices != ambient:
        raise ComplexError("some variable is not a face; the ideal contains a variable")
    return cx
