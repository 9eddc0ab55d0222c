"""Derived and lower central series, the Leib ideal, chief series and the nilradical."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .algebra import (
    AlgebraPresentation,
    Ideal,
    centralizer_of_section,
    preimage,
    product_subspaces,
    quotient,
    require_valid,
)
from .exact_linalg import Subspace, combine
from .modules import (
    ModulePresentation,
    is_irreducible,
    minimal_submodule,
    module_on_ideal,
    section_module,
)


class NotSolubleError(ValueError):
    pass


@dataclass(frozen=True)
class SeriesRecord:
    algebra: AlgebraPresentation
    terms: tuple  # Subspace, descending, last term is the stable one

    @property
    def dims(self) -> tuple:
        return tuple(t.dim for t in self.terms)

    @property
    def reaches_zero(self) -> bool:
        return self.terms[-1].is_zero()


def derived_series(l: AlgebraPresentation) -> SeriesRecord:
    require_valid(l)
    terms = [l.full]
    while True:
        nxt = product_subspaces(l, terms[-1], terms[-1])
        if nxt == terms[-1]:
            break
        terms.append(nxt)
    return SeriesRecord(l, tuple(terms))


def lower_central_series(l: AlgebraPresentation) -> SeriesRecord:
    """``L^{k+1} = L L^k + L^k L``; for Lie algebras the two products agree."""
    require_valid(l)
    terms = [l.full]
    while True:
        t = terms[-1]
        nxt = product_subspaces(l, l.full, t) + product_subspaces(l, t, l.full)
        if nxt == t:
            break
        terms.append(nxt)
    return SeriesRecord(l, tuple(terms))


def is_soluble(l: AlgebraPresentation) -> bool:
    return derived_series(l).reaches_zero


def is_nilpotent(l: AlgebraPresentation) -> bool:
    return lower_central_series(l).reaches_zero


def nilpotency_class(l: AlgebraPresentation) -> int | None:
    s = lower_central_series(l)
    return len(s.terms) - 1 if s.reaches_zero else None


def leib_ideal(l: AlgebraPresentation) -> Ideal:
    """Span of all squares, via ``e_i e_i`` and ``e_i e_j + e_j e_i`` (valid in every characteristic)."""
    require_valid(l)
    fld, n = l.field, l.dim
    vecs = []
    for i in range(n):
        vecs.append(l.basis_product(i, i))
        for j in range(i + 1, n):
            vecs.append(fld.vector(a + b for a, b in zip(l.basis_product(i, j), l.basis_product(j, i))))
    return Ideal(l, l.span(vecs))


@dataclass(frozen=True)
class ChiefSeries:
    algebra: AlgebraPresentation
    ideals: tuple  # 0 = I_0 < I_1 < ... < I_m = L
    factors: tuple  # ModulePresentation for I_j / I_{j-1}
    centralizers: tuple  # C_L(I_j / I_{j-1})

    @property
    def length(self) -> int:
        return len(self.factors)

    @property
    def factor_dims(self) -> tuple:
        return tuple(f.dim_v for f in self.factors)


def _minimal_ideal_above(l: AlgebraPresentation, current: Subspace) -> Subspace:
    """An ideal of ``L`` containing ``current`` as a maximal sub-ideal (a chief factor on top of it)."""
    q, _ = quotient(l, current)
    d = derived_series(q).terms
    last = next(t for t in reversed(d) if not t.is_zero())
    mod = module_on_ideal(q, last)
    sub = minimal_submodule(mod).space
    vecs = [combine(q.field, coeffs, last.rows, q.dim) for coeffs in sub.rows]
    return preimage(current, q.span(vecs))


def chief_series(l: AlgebraPresentation) -> ChiefSeries:
    """Chief series built by stacking minimal ideals of successive quotients.

    In ``L/I`` the last nonzero derived term is an abelian ideal; a minimal
    submodule of it under left and right multiplication is a minimal ideal of
    ``L/I``, and its preimage is the next term.
    """
    return _chief_series_cached(l)


@lru_cache(maxsize=512)
def _chief_series_cached(l: AlgebraPresentation) -> ChiefSeries:
    require_valid(l)
    if not is_soluble(l):
        raise NotSolubleError(f"{l.name} is not soluble")
    ideals = [l.zero]
    while not ideals[-1].is_full():
        ideals.append(_minimal_ideal_above(l, ideals[-1]))
    factors, cents = [], []
    for j in range(1, len(ideals)):
        h, k = ideals[j], ideals[j - 1]
        f = section_module(l, h, k, name=f"{l.name}_factor{j}")
        if not is_irreducible(f):
            raise AssertionError(f"chief factor {j} of {l.name} is reducible")
        factors.append(f)
        cents.append(centralizer_of_section(l, h, k))
    return ChiefSeries(l, tuple(ideals), tuple(factors), tuple(cents))


def nilradical(l: AlgebraPresentation) -> Ideal:
    """Intersection of the centralizers of the factors of a chief series."""
    cs = chief_series(l)
    n = l.full
    for c in cs.centralizers:
        n = n & c
    return Ideal(l, n)


def chief_factor_quotients(l: AlgebraPresentation) -> list[tuple[ModulePresentation, AlgebraPresentation]]:
    """Each chief factor with ``L / C_L(factor)``."""
    cs = chief_series(l)
    return [(f, quotient(l, c)[0]) for f, c in zip(cs.factors, cs.centralizers)]
