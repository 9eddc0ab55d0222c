"""Brute-force references over small prime fields.

Nothing here goes through chief series or centralizers; these enumerations
exist to cross-check the structural algorithms.
"""

from __future__ import annotations

from itertools import combinations, product
from typing import Iterator

from .algebra import AlgebraPresentation
from .exact_linalg import Field, Subspace, span


def all_subspaces(fld: Field, n: int) -> Iterator[Subspace]:
    """Every subspace of GF(p)^n, generated directly as reduced echelon matrices."""
    if not fld.p:
        raise ValueError("subspace enumeration needs a finite field")
    p = fld.p
    for k in range(n + 1):
        for pivots in combinations(range(n), k):
            pivset = set(pivots)
            free = [(r, c) for r, pc in enumerate(pivots) for c in range(pc + 1, n) if c not in pivset]
            for values in product(range(p), repeat=len(free)):
                rows = [[0] * n for _ in range(k)]
                for r, pc in enumerate(pivots):
                    rows[r][pc] = 1
                for (r, c), x in zip(free, values):
                    rows[r][c] = x
                yield Subspace(fld, n, tuple(tuple(r) for r in rows), pivots)


def count_subspaces(p: int, n: int) -> int:
    """Total number of subspaces of GF(p)^n (sum of Gaussian binomials)."""
    total = 0
    for k in range(n + 1):
        num = den = 1
        for i in range(k):
            num *= p ** (n - i) - 1
            den *= p ** (i + 1) - 1
        total += num // den
    return total


def _contains(s: Subspace, v) -> bool:
    # membership by rank, independent of the echelon reduction helpers
    return span(s.field, s.rows + (tuple(v),), s.ambient_dim).dim == s.dim


def _is_two_sided_ideal(l: AlgebraPresentation, s: Subspace) -> bool:
    for i in range(l.dim):
        x = l.unit(i)
        for v in s.rows:
            if not _contains(s, l.mul(x, v)) or not _contains(s, l.mul(v, x)):
                return False
    return True


def _is_nilpotent_subalgebra(l: AlgebraPresentation, s: Subspace) -> bool:
    """Powers ``S^{k+1} = S S^k + S^k S`` of ``s`` as an algebra reach zero."""
    term = s
    for _ in range(s.dim + 1):
        if term.dim == 0:
            return True
        vecs = [l.mul(x, y) for x in s.rows for y in term.rows] + [l.mul(y, x) for x in s.rows for y in term.rows]
        nxt = span(l.field, vecs, l.dim)
        if nxt.dim == term.dim:
            return False
        term = nxt
    return term.dim == 0


def nilpotent_ideals(l: AlgebraPresentation) -> list[Subspace]:
    return [s for s in all_subspaces(l.field, l.dim) if _is_two_sided_ideal(l, s) and _is_nilpotent_subalgebra(l, s)]


class OracleError(AssertionError):
    pass


def max_nilpotent_ideal(l: AlgebraPresentation) -> Subspace:
    """The largest nilpotent ideal by exhaustive enumeration; asserts it is unique and contains all others."""
    ideals = nilpotent_ideals(l)
    top = max(s.dim for s in ideals)
    maxima = [s for s in ideals if s.dim == top]
    if len(maxima) != 1:
        raise OracleError(f"{len(maxima)} nilpotent ideals of maximal dimension {top} in {l.name}")
    m = maxima[0]
    for s in ideals:
        if not all(_contains(m, r) for r in s.rows):
            raise OracleError(f"nilpotent ideal {s} not inside {m}")
    return m
