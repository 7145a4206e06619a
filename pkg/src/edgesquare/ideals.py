"""Monomial ideals, edge ideals, powers, and polarization."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Hashable, Iterable, Optional, Sequence

from .graph import Graph, bits


@dataclass(frozen=True, order=True)
class PolarizedVariable:
    """Copy ``copy`` (1-based) of the base variable ``base``."""

    base: str
    copy: int

    def __str__(self) -> str:
        return f"{self.base}{self.copy}"

    def render(self, subscript: bool = False) -> str:
        return f"{self.base}_{self.copy}" if subscript else str(self)


@dataclass(frozen=True)
class Monomial:
    """Exponent vector over the ambient variables of the owning ideal."""

    exponents: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(a < 0 for a in self.exponents):
            raise ValueError("negative exponent")

    @classmethod
    def from_support(cls, nvars: int, ids: Iterable[int]) -> "Monomial":
        e = [0] * nvars
        for i in ids:
            e[i] += 1
        return cls(tuple(e))

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    @property
    def is_squarefree(self) -> bool:
        return all(a <= 1 for a in self.exponents)

    @property
    def support(self) -> int:
        """Bitmask of the variables with nonzero exponent."""
        m = 0
        for i, a in enumerate(self.exponents):
            if a:
                m |= 1 << i
        return m

    def divides(self, other: "Monomial") -> bool:
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def __mul__(self, other: "Monomial") -> "Monomial":
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def grlex_key(self) -> tuple:
        return (self.degree, self.exponents)

    def render(self, variables: Sequence[Hashable], subscript: bool = False) -> str:
        parts = []
        for var, a in zip(variables, self.exponents):
            name = var.render(subscript) if isinstance(var, PolarizedVariable) else str(var)
            if a == 1:
                parts.append(name)
            elif a > 1:
                parts.append(f"{name}^{a}")
        return "*".join(parts) if parts else "1"


def _minimalize(gens: Iterable[Monomial]) -> list[Monomial]:
    uniq = sorted(set(gens), key=Monomial.grlex_key)
    keep: list[Monomial] = []
    for g in uniq:
        # grlex-ascending order: a divisor always precedes its multiples
        if not any(h.divides(g) for h in keep):
            keep.append(g)
    return keep


@dataclass(frozen=True)
class MonomialIdeal:
    """Ideal given by its minimal monomial generators, sorted grlex-descending."""

    variables: tuple
    generators: tuple[Monomial, ...]

    def __post_init__(self) -> None:
        for g in self.generators:
            if len(g.exponents) != len(self.variables):
                raise ValueError("generator length does not match the ambient variables")

    @classmethod
    def from_generators(cls, variables: Sequence[Hashable], gens: Iterable[Monomial]) -> "MonomialIdeal":
        keep = _minimalize(gens)
        keep.sort(key=Monomial.grlex_key, reverse=True)
        return cls(tuple(variables), tuple(keep))

    @property
    def is_squarefree(self) -> bool:
        return all(g.is_squarefree for g in self.generators)

    def contains(self, m: Monomial) -> bool:
        return any(g.divides(m) for g in self.generators)

    def render(self, subscript: bool = False) -> str:
        return "(" + ", ".join(g.render(self.variables, subscript) for g in self.generators) + ")"

    def __len__(self) -> int:
        return len(self.generators)


def edge_ideal(G: Graph) -> MonomialIdeal:
    """I(G) in the variables named by the universe of G."""
    n = G.universe
    gens = [Monomial.from_support(n, (u, v)) for u, v in G.edges()]
    return MonomialIdeal.from_generators(G.names, gens)


def ideal_power(I: MonomialIdeal, k: int) -> MonomialIdeal:
    if k < 1:
        raise ValueError("ideal power needs k >= 1")
    if k == 1:
        return I
    products = set()
    for combo in combinations_with_replacement(I.generators, k):
        m = combo[0]
        for g in combo[1:]:
            m = m * g
        products.add(m)
    if len({g.degree for g in I.generators}) <= 1:
        # equigenerated: products share one degree, so distinct means minimal
        gens = sorted(products, key=Monomial.grlex_key, reverse=True)
        return MonomialIdeal(I.variables, tuple(gens))
    return MonomialIdeal.from_generators(I.variables, products)


def _polarized_layout(variables: Sequence[Hashable], copies: Sequence[int]) -> list[PolarizedVariable]:
    return [PolarizedVariable(str(x), c) for x, k in zip(variables, copies) for c in range(1, k + 1)]


def polarize_monomial(m: Monomial, variables: Sequence[Hashable], copies: Optional[Sequence[int]] = None):
    """Polarize one monomial.

    Returns ``(polarized_variables, monomial)``.  By default each variable gets as
    many copies as its exponent in ``m``; ``copies`` overrides the layout.
    """
    if copies is None:
        copies = m.exponents
    layout = _polarized_layout(variables, copies)
    offsets = _offsets(copies)
    e = [0] * len(layout)
    for i, a in enumerate(m.exponents):
        if a > copies[i]:
            raise ValueError("layout has too few copies for this monomial")
        for c in range(a):
            e[offsets[i] + c] = 1
    return layout, Monomial(tuple(e))


def _offsets(copies: Sequence[int]) -> list[int]:
    out, acc = [], 0
    for k in copies:
        out.append(acc)
        acc += k
    return out


def polarize_ideal(I: MonomialIdeal, copies: Optional[int | Sequence[int]] = None) -> MonomialIdeal:
    """Generator-wise polarization.

    The ambient variables are laid out as (base, copy) in lexicographic order.
    By default a base variable gets as many copies as its largest exponent
    among the generators; an int ``copies`` forces that many for every base.
    """
    n = len(I.variables)
    if copies is None:
        layout_copies = [max((g.exponents[i] for g in I.generators), default=0) for i in range(n)]
    elif isinstance(copies, int):
        layout_copies = [copies] * n
    else:
        layout_copies = list(copies)
    variables = None
    gens = []
    for g in I.generators:
        variables, pg = polarize_monomial(g, I.variables, layout_copies)
        gens.append(pg)
    if variables is None:
        variables = _polarized_layout(I.variables, layout_copies)
    # minimal generators polarize to minimal generators; keep source order
    return MonomialIdeal(tuple(variables), tuple(gens))


def depolarize_monomial(m: Monomial, polarized: Sequence[PolarizedVariable], variables: Sequence[str]) -> Monomial:
    index = {str(x): i for i, x in enumerate(variables)}
    e = [0] * len(variables)
    for pv, a in zip(polarized, m.exponents):
        if a:
            e[index[pv.base]] += a
    return Monomial(tuple(e))


def square_polarization(G: Graph) -> MonomialIdeal:
    """P(I(G)^2) on the full ambient V_(1) u V_(2), bit 2v + copy - 1 for (v, copy)."""
    return polarize_ideal(ideal_power(edge_ideal(G), 2), copies=2)


def classify_square_generator(m: Monomial, G: Graph) -> str:
    """Shape of a generator of P(I(G)^2): 'edge-squared', 'star' or 'matching'."""
    supp = m.support
    doubled = [v for v in range(G.universe) if supp >> (2 * v) & 3 == 3]
    singles = [v for v in range(G.universe) if supp >> (2 * v) & 3 == 1]
    if any(supp >> (2 * v + 1) & 1 and not supp >> (2 * v) & 1 for v in range(G.universe)):
        raise ValueError("second copy without the first")
    if len(doubled) == 2 and not singles and G.has_edge(*doubled):
        return "edge-squared"
    if len(doubled) == 1 and len(singles) == 2:
        b = doubled[0]
        a, c = singles
        if G.has_edge(a, b) and G.has_edge(b, c):
            return "star"
    if len(singles) == 4 and not doubled:
        a, b, c, d = singles
        for (p, q), (r, s) in (((a, b), (c, d)), ((a, c), (b, d)), ((a, d), (b, c))):
            if G.has_edge(p, q) and G.has_edge(r, s):
                return "matching"
    raise ValueError(f"generator {list(bits(supp))} has none of the three shapes")
