"""Cohen-Macaulay decisions by Reisner's criterion, and the classification checks
for squares of edge ideals built on top of it."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dc_field
from typing import Optional

from .complexes import SimplicialComplex, stanley_reisner_complex
from .facets import (
    catalog_to_complex,
    first_copy,
    generic_square_complex,
    polarized_labels,
    second_copy,
)
from .graph import (
    Graph,
    GraphError,
    cycle,
    double_star,
    has_triangle,
    is_bipartite,
    is_connected,
    leaf_path3_witness,
)
from .homology import GF2, FieldSpec, reduced_betti_below_top
from .ideals import edge_ideal


class InconsistencyError(RuntimeError):
    """A computed result contradicts a proven statement; something is broken."""


class ResourceCapError(RuntimeError):
    """The request is valid but above the configured size cap."""


class RouteMismatchError(RuntimeError):
    pass


@dataclass(frozen=True)
class CmWitness:
    face: int
    degree: int
    betti: int
    link_facets: tuple[int, ...]


@dataclass(frozen=True)
class CmVerdict:
    is_cm: bool
    field: FieldSpec
    witness: Optional[CmWitness] = None
    fast_fail: Optional[str] = None
    route: Optional[str] = None
    labels: tuple[str, ...] = dc_field(default=(), compare=False, repr=False)

    def __post_init__(self) -> None:
        if self.is_cm and (self.witness or self.fast_fail):
            raise InconsistencyError("a CM verdict carries no failure evidence")
        if not self.is_cm and (self.witness is None) == (self.fast_fail is None):
            raise InconsistencyError("a non-CM verdict carries exactly one of witness / fast_fail")

    def _names(self, mask: int) -> str:
        ids = [i for i in range(len(self.labels)) if mask >> i & 1]
        return "{" + ",".join(self.labels[i] for i in ids) + "}"

    def summary(self) -> str:
        if self.is_cm:
            return f"CM over {self.field}"
        if self.fast_fail:
            return f"NOT CM over {self.field}; fast-fail: {self.fast_fail}"
        w = self.witness
        return (f"NOT CM over {self.field}; witness face {self._names(w.face)}, "
                f"b~{w.degree}(link)={w.betti}")

    def to_record(self) -> dict:
        rec = {"is_cm": self.is_cm, "char": self.field.p, "fast_fail": self.fast_fail, "route": self.route}
        if self.witness:
            rec["witness"] = {
                "face": [self.labels[i] for i in range(len(self.labels)) if self.witness.face >> i & 1],
                "degree": self.witness.degree,
                "betti": self.witness.betti,
                "link_facets": [[self.labels[i] for i in range(len(self.labels)) if F >> i & 1]
                                for F in self.witness.link_facets],
            }
        else:
            rec["witness"] = None
        return rec


def link_failure(cx: SimplicialComplex, sigma: int, field: FieldSpec):
    """(degree, betti) of the first homology below the top of lk(sigma), or None."""
    lk = cx.link(sigma)
    if lk.is_cone():
        return None
    return reduced_betti_below_top(lk, field)


def sweep_order(cx: SimplicialComplex) -> list[int]:
    out = []
    for k in range(cx.dimension + 1, -1, -1):
        out.extend(cx.faces_of_size(k))
    return out


def _sweep(cx: SimplicialComplex, faces: list[int], field: FieldSpec):
    for pos, sigma in enumerate(faces):
        bad = link_failure(cx, sigma, field)
        if bad is not None:
            return pos, bad
    return None


def _sweep_chunk(args):
    cx, faces, positions, field = args
    hit = _sweep(cx, faces, field)
    if hit is None:
        return None
    local, bad = hit
    return positions[local], bad


def is_cohen_macaulay(
    cx: SimplicialComplex,
    field: FieldSpec = GF2,
    use_fast_fail: bool = True,
    workers: int = 1,
) -> CmVerdict:
    """Reisner's criterion over GF(p).

    Faces are swept by decreasing size (so by increasing link size), then
    lexicographically; the first face whose link has nonzero reduced homology
    below its top degree is the witness.  Links that are cones are acyclic
    and skipped.  With ``use_fast_fail`` a disconnected (dimension >= 1) or impure complex is
    rejected before the sweep.  With ``workers > 1`` faces are split across
    processes and the sweep-order-minimal witness is still the one reported.
    """
    if use_fast_fail:
        if cx.dimension >= 1 and not cx.is_connected():
            return CmVerdict(False, field, fast_fail="not-connected", labels=cx.labels)
        if not cx.is_pure:
            return CmVerdict(False, field, fast_fail="not-pure", labels=cx.labels)
    faces = sweep_order(cx)
    if workers <= 1:
        hit = _sweep(cx, faces, field)
    else:
        jobs = []
        for w in range(workers):
            positions = list(range(w, len(faces), workers))
            jobs.append((cx, [faces[i] for i in positions], positions, field))
        with ProcessPoolExecutor(max_workers=workers) as pool:
            hits = [h for h in pool.map(_sweep_chunk, jobs) if h is not None]
        hit = min(hits, default=None, key=lambda h: h[0])
    if hit is None:
        return CmVerdict(True, field, labels=cx.labels)
    pos, (degree, betti) = hit
    sigma = faces[pos]
    witness = CmWitness(sigma, degree, betti, cx.link(sigma).facets)
    return CmVerdict(False, field, witness=witness, labels=cx.labels)


# squares of edge ideals --------------------------------------------------------


def _require_classifiable(G: Graph) -> None:
    iso = G.isolated_vertices()
    if iso:
        raise GraphError(f"isolated vertices {G.labels(iso)}: graphs must have none")
    if not is_connected(G):
        raise GraphError("graph is disconnected; a Cohen-Macaulay complex of dimension >= 1 "
                         "is connected, so only connected graphs are classified")


def square_complex(G: Graph, route: str = "catalog") -> SimplicialComplex:
    """The complex of P(I(G)^2) by the facet catalog, the ideal route, or both (checked)."""
    if route == "catalog":
        return catalog_to_complex(G)
    if route == "generic":
        return generic_square_complex(G)
    if route == "both":
        a = catalog_to_complex(G)
        b = generic_square_complex(G)
        if a != b:
            raise RouteMismatchError(f"facet catalog and ideal route disagree for {G.describe()}")
        return a
    raise ValueError(f"unknown route {route!r}")


def square_is_cm(
    G: Graph,
    field: FieldSpec = GF2,
    use_fast_fail: bool = True,
    route: str = "catalog",
    screen: bool = False,
    workers: int = 1,
) -> CmVerdict:
    """Whether I(G)^2 is Cohen-Macaulay over GF(p), decided on its polarization.

    ``screen`` first applies the necessary condition (purity and the
    leaf-ended induced path); it is off by default so that verdicts never rest
    on the statements being checked.
    """
    _require_classifiable(G)
    if screen and necessary_condition_screen(G) is not None:
        return CmVerdict(False, field, fast_fail="necessary-condition", route=route,
                         labels=polarized_labels(G))
    cx = square_complex(G, route)
    v = is_cohen_macaulay(cx, field, use_fast_fail=use_fast_fail, workers=workers)
    return CmVerdict(v.is_cm, v.field, v.witness, v.fast_fail, route, v.labels)


@dataclass(frozen=True)
class PurityReport:
    n: int
    alpha: int
    is_pure: bool
    expected: bool
    dim: int
    formula_dim: int


def purity_report(G: Graph, cx: Optional[SimplicialComplex] = None) -> PurityReport:
    """Purity of the square complex next to the graph-side prediction.

    Raises InconsistencyError if purity differs from (unmixed and triangle-free),
    if the dimension is below n, or if a pure complex has dimension other than
    n + alpha - 1.
    """
    if G.isolated_vertices():
        raise GraphError("isolated vertices are not allowed here")
    if cx is None:
        cx = catalog_to_complex(G)
    n, alpha = len(G), G.independence_number()
    rep = PurityReport(
        n=n,
        alpha=alpha,
        is_pure=cx.is_pure,
        expected=G.is_unmixed() and not has_triangle(G),
        dim=cx.dimension,
        formula_dim=n + alpha - 1,
    )
    if rep.is_pure != rep.expected:
        raise InconsistencyError(f"purity {rep.is_pure} but graph predicts {rep.expected}: {G.describe()}")
    if rep.dim < n:
        raise InconsistencyError(f"dimension {rep.dim} below n={n}: {G.describe()}")
    if rep.is_pure and rep.dim != rep.formula_dim:
        raise InconsistencyError(f"pure of dimension {rep.dim}, expected {rep.formula_dim}")
    return rep


@dataclass(frozen=True)
class ScreenResult:
    reason: str
    witness: Optional[tuple[int, int, int, int]] = None


def necessary_condition_screen(G: Graph) -> Optional[ScreenResult]:
    """Reason I(G)^2 cannot be CM read off the graph, or None if none applies."""
    if not (G.is_unmixed() and not has_triangle(G)):
        return ScreenResult("not-pure")
    path = leaf_path3_witness(G)
    if path is not None:
        return ScreenResult("leaf-path-3", path)
    return None


DEFAULT_CYCLE_CAP = 10


def cycle_square_classification(
    t: int,
    field: FieldSpec = GF2,
    mode: str = "theorem",
    cap: int = DEFAULT_CYCLE_CAP,
) -> bool:
    """Whether I(C_t)^2 is CM: by the classification (t == 5) or by computation."""
    if t < 3:
        raise GraphError("cycles need t >= 3")
    if mode == "theorem":
        unmixed = cycle(t).is_unmixed()
        if unmixed != (t in (3, 4, 5, 7)):
            raise InconsistencyError(f"unmixedness of C_{t} is {unmixed}")
        return t == 5
    if mode == "verify":
        if t > cap:
            raise ResourceCapError(f"C_{t} is above the verification cap {cap}")
        return square_is_cm(cycle(t), field).is_cm
    raise ValueError(f"unknown mode {mode!r}")


def double_star_obstruction_check(s: int, t: int) -> bool:
    """The link of pi = {x0,y0}_(1) u (rest)_(2) has the two predicted facets and b~0 = 1."""
    G = double_star(s, t)
    cx = catalog_to_complex(G)
    x0, y0 = G.index("x0"), G.index("y0")
    centers = (1 << x0) | (1 << y0)
    pi = first_copy(centers) | second_copy(G.vertices & ~centers)
    if not cx.is_face(pi):
        return False
    ys = G.mask(f"y{j}" for j in range(1, s + 1))
    xs = G.mask(f"x{i}" for i in range(1, t + 1))
    expected = {first_copy(ys) | second_copy(1 << x0), first_copy(xs) | second_copy(1 << y0)}
    lk = cx.link(pi)
    if set(lk.facets) != expected:
        return False
    from .homology import reduced_betti_numbers

    return reduced_betti_numbers(lk, GF2)[0] == 1


def independence_complex(G: Graph) -> SimplicialComplex:
    return stanley_reisner_complex(edge_ideal(G), labels=G.names, restrict=G.vertices)


def is_cm_bipartite(G: Graph, field: FieldSpec = GF2) -> bool:
    """Bipartite with a Cohen-Macaulay edge ideal (checked on the independence complex)."""
    if not is_bipartite(G) or G.isolated_vertices():
        return False
    return is_cohen_macaulay(independence_complex(G), field).is_cm
