"""Reduced simplicial homology over GF(p) from boundary-matrix ranks."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .complexes import SimplicialComplex
from .graph import bits


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class FieldSpec:
    p: int = 2

    def __post_init__(self) -> None:
        if not isinstance(self.p, int) or not _is_prime(self.p):
            raise ValueError(f"characteristic must be prime, got {self.p!r}")

    def __str__(self) -> str:
        return f"GF({self.p})"


GF2 = FieldSpec(2)


@dataclass(frozen=True)
class HomologyProfile:
    """Reduced Betti numbers b~_{-1}, ..., b~_{dim}."""

    reduced_betti: tuple[int, ...]
    field: FieldSpec

    def __getitem__(self, i: int) -> int:
        if i < -1 or i + 1 >= len(self.reduced_betti):
            return 0
        return self.reduced_betti[i + 1]

    @property
    def dimension(self) -> int:
        return len(self.reduced_betti) - 2

    def __str__(self) -> str:
        return f"b~(-1..{self.dimension}) = {list(self.reduced_betti)}"


def _check_degree(cx: SimplicialComplex, i: int) -> None:
    if not -1 <= i <= cx.dimension:
        raise ValueError(f"degree {i} outside -1..{cx.dimension}")


def boundary_matrix(cx: SimplicialComplex, i: int, field: FieldSpec = GF2) -> np.ndarray:
    """Dense matrix of the boundary map from i-faces to (i-1)-faces, entries mod p.

    Rows and columns follow the complex's face order; the sign of the face
    obtained by dropping the k-th smallest vertex is (-1)^k.  The map out of
    the empty face (i = -1) has no rows.
    """
    _check_degree(cx, i)
    cols = cx.faces_of_size(i + 1)
    rows = cx.faces_of_size(i) if i >= 0 else ()
    index = {f: r for r, f in enumerate(rows)}
    M = np.zeros((len(rows), len(cols)), dtype=np.int64)
    for c, face in enumerate(cols):
        for k, v in enumerate(bits(face)):
            M[index[face & ~(1 << v)], c] = (-1) ** k % field.p
    return M


def _columns_gf2(cx: SimplicialComplex, i: int) -> list[int]:
    rows = cx.faces_of_size(i)
    index = {f: r for r, f in enumerate(rows)}
    out = []
    for face in cx.faces_of_size(i + 1):
        col = 0
        for v in bits(face):
            col |= 1 << index[face & ~(1 << v)]
        out.append(col)
    return out


def _columns_modp(cx: SimplicialComplex, i: int, p: int) -> list[dict[int, int]]:
    rows = cx.faces_of_size(i)
    index = {f: r for r, f in enumerate(rows)}
    out = []
    for face in cx.faces_of_size(i + 1):
        col = {}
        for k, v in enumerate(bits(face)):
            col[index[face & ~(1 << v)]] = 1 if k % 2 == 0 else p - 1
        out.append(col)
    return out


def rank_gf2(columns: list[int]) -> int:
    """Rank of bit-packed vectors over GF(2), reducing on the lowest set bit."""
    pivots: dict[int, int] = {}
    for v in columns:
        while v:
            low = v & -v
            piv = pivots.get(low)
            if piv is None:
                pivots[low] = v
                break
            v ^= piv
    return len(pivots)


def rank_modp(columns: list[dict[int, int]], p: int) -> int:
    """Rank of sparse vectors over GF(p); pivots keyed by the smallest index."""
    pivots: dict[int, dict[int, int]] = {}
    for col in columns:
        v = {k: c % p for k, c in col.items() if c % p}
        while v:
            low = min(v)
            piv = pivots.get(low)
            if piv is None:
                inv = pow(v[low], -1, p)
                pivots[low] = {k: c * inv % p for k, c in v.items()}
                break
            f = v[low]
            for k, c in piv.items():
                nv = (v.get(k, 0) - f * c) % p
                if nv:
                    v[k] = nv
                else:
                    v.pop(k, None)
    return len(pivots)


def matrix_rank(M: np.ndarray, field: FieldSpec = GF2) -> int:
    p = field.p
    if p == 2:
        cols = []
        for c in range(M.shape[1]):
            v = 0
            for r in np.flatnonzero(M[:, c] % 2):
                v |= 1 << int(r)
            cols.append(v)
        return rank_gf2(cols)
    cols = [{int(r): int(M[r, c]) for r in np.flatnonzero(M[:, c] % p)} for c in range(M.shape[1])]
    return rank_modp(cols, p)


def boundary_rank(cx: SimplicialComplex, i: int, field: FieldSpec = GF2) -> int:
    """Rank of the boundary map out of the i-faces (0 for i = -1)."""
    if i <= -1 or i > cx.dimension:
        return 0
    if i == 0:
        return 1 if cx.faces_of_size(1) else 0
    if field.p == 2:
        return rank_gf2(_columns_gf2(cx, i))
    return rank_modp(_columns_modp(cx, i, field.p), field.p)


def reduced_betti_numbers(cx: SimplicialComplex, field: FieldSpec = GF2) -> HomologyProfile:
    d = cx.dimension
    ranks = {i: boundary_rank(cx, i, field) for i in range(-1, d + 2)}
    betti = []
    for i in range(-1, d + 1):
        chains = len(cx.faces_of_size(i + 1))
        betti.append(chains - ranks[i] - ranks[i + 1])
    return HomologyProfile(tuple(betti), field)


def reduced_betti_below_top(cx: SimplicialComplex, field: FieldSpec = GF2):
    """First (i, b~_i) with i < dim and b~_i != 0, or None.

    Degrees are scanned upward, so only the boundary maps that are needed get
    reduced.
    """
    d = cx.dimension
    prev_rank = boundary_rank(cx, -1, field)
    for i in range(-1, d):
        nxt = boundary_rank(cx, i + 1, field)
        b = len(cx.faces_of_size(i + 1)) - prev_rank - nxt
        if b:
            return i, b
        prev_rank = nxt
    return None


def reduced_euler_characteristic(cx: SimplicialComplex) -> int:
    """Sum over faces (including the empty face) of (-1)^dim."""
    return sum(c if k % 2 else -c for k, c in enumerate(cx.f_vector()))
