"""Seeded random soluble algebras for the property suites.

Every construction is an iterated extension of soluble pieces, so the
result is soluble by construction:

* derivation extensions ``L ⊕ Ft`` with ``[t, x] = D(x)``;
* split extensions by ``ρ(x) = Σ λ_k(x) R^k`` where the ``λ_k`` vanish on ``L²``;
* split extensions by ``ad ⊗ λ``: ``ρ(x) = ad x + λ(x)·1``;
* over GF(p), optionally seeded with ``r2`` acting on its p-dimensional
  irreducible module.

A random change of basis finishes the construction.  Leibniz variants come
from one last split extension with ``VL = 0``.
"""

from __future__ import annotations

import random

from .algebra import (
    LIE,
    AlgebraPresentation,
    change_basis,
    derivations,
    product_subspaces,
)
from .exact_linalg import Field, Matrix, is_invertible, nullspace
from .modules import ModulePresentation, antisymmetrize, split_extension, symmetrize


def _scalar(fld: Field, rng: random.Random, lo: int = -2, hi: int = 2):
    if fld.p:
        return rng.randrange(fld.p)
    return fld.coerce(rng.randint(lo, hi))


def _random_matrix(fld: Field, rng: random.Random, n: int) -> Matrix:
    return Matrix(fld, tuple(tuple(_scalar(fld, rng) for _ in range(n)) for _ in range(n)), n)


def random_invertible(fld: Field, rng: random.Random, n: int) -> Matrix:
    while True:
        g = _random_matrix(fld, rng, n)
        if is_invertible(g):
            return g


def _characters(l: AlgebraPresentation) -> list[tuple]:
    """Basis of the linear forms vanishing on ``L²``."""
    sq = product_subspaces(l, l.full, l.full)
    if sq.is_zero():
        return [l.unit(i) for i in range(l.dim)]
    return list(nullspace(Matrix(l.field, sq.rows, l.dim)).rows)


def _random_character(l: AlgebraPresentation, rng: random.Random) -> tuple:
    fld = l.field
    out = fld.zeros(l.dim)
    for f in _characters(l):
        c = _scalar(fld, rng)
        out = fld.vector(a + c * b for a, b in zip(out, f))
    return out


def polynomial_module(l: AlgebraPresentation, d: int, rng: random.Random, name: str = "V") -> ModulePresentation:
    """``x ↦ Σ_k λ_k(x) R^k`` for a random ``R`` and random characters ``λ_k``."""
    fld = l.field
    r = _random_matrix(fld, rng, d)
    powers = [Matrix.identity(fld, d)]
    for _ in range(1, rng.randint(1, 2) + 1):
        powers.append(powers[-1] @ r)
    lams = [_random_character(l, rng) for _ in powers]
    left = []
    for i in range(l.dim):
        m = Matrix.zero(fld, d, d)
        for lam, p in zip(lams, powers):
            if lam[i]:
                m = m + p.scale(lam[i])
        left.append(m)
    return ModulePresentation(name, l, d, tuple(left))


def twisted_adjoint(l: AlgebraPresentation, rng: random.Random, name: str = "adV") -> ModulePresentation:
    """``ρ(x) = ad x + λ(x)·1``; a module because ``λ`` kills ``L²``."""
    fld, n = l.field, l.dim
    lam = _random_character(l, rng)
    one = Matrix.identity(fld, n)
    left = tuple(l.left_mult(l.unit(i)) + one.scale(lam[i]) for i in range(n))
    return ModulePresentation(name, l, n, left)


def derivation_extension(l: AlgebraPresentation, rng: random.Random, name: str | None = None) -> AlgebraPresentation:
    """``L ⊕ Ft`` with ``[t, x] = D x`` for a random derivation ``D``; ``t`` is the last basis vector."""
    fld, n = l.field, l.dim
    ders = derivations(l)
    dmat = Matrix.zero(fld, n, n)
    for dd in ders:
        c = _scalar(fld, rng, -1, 1)
        if c:
            dmat = dmat + dd.scale(c)
    products = {(i, j): l.basis_product(i, j) for i in range(n) for j in range(n)}
    products = {k: v + (fld.zero,) for k, v in products.items() if any(v)}
    for c in range(n):
        col = dmat.column(c)
        if any(col):
            products[(n, c)] = col + (fld.zero,)
            products[(c, n)] = tuple(fld.reduce(-x) for x in col) + (fld.zero,)
    return AlgebraPresentation.from_table(name or f"{l.name}_der", fld, n + 1, LIE, products)


def _r2(fld: Field) -> AlgebraPresentation:
    return AlgebraPresentation.from_table("r2", fld, 2, LIE, {(0, 1): (fld.zero, fld.one), (1, 0): (fld.zero, fld.reduce(-1))})


def cyclic_module(fld: Field) -> ModulePresentation:
    """The p-dimensional irreducible r2-module over GF(p): x ↦ diag(0, 1, ..., p-1), y ↦ cyclic shift."""
    p = fld.p
    x = Matrix(fld, tuple(tuple(i if i == j else 0 for j in range(p)) for i in range(p)), p)
    y = Matrix(fld, tuple(tuple(1 if i == (j + 1) % p else 0 for j in range(p)) for i in range(p)), p)
    return ModulePresentation("cyc", _r2(fld), p, (x, y))


def _seed_algebra(fld: Field, rng: random.Random, max_dim: int) -> AlgebraPresentation:
    if fld.p and fld.p + 2 <= max_dim and rng.random() < 0.25:
        # L/C for the first chief factor is r2, which is not abelian
        seed, _ = split_extension(_r2(fld), symmetrize(cyclic_module(fld)), "seed")
        return seed
    if rng.random() < 0.5:
        return AlgebraPresentation.abelian(fld, rng.randint(1, 2), "seed")
    return _r2(fld).renamed("seed")


def random_soluble_lie(fld: Field, max_dim: int, rng: random.Random, name: str = "rand") -> AlgebraPresentation:
    """A random soluble Lie algebra of dimension between 2 and ``max_dim``."""
    l = _seed_algebra(fld, rng, max_dim)
    target = rng.randint(max(l.dim, 2), max_dim)
    while l.dim < target:
        room = target - l.dim
        move = rng.choice(("der", "poly", "poly", "adj"))
        if move == "adj" and l.dim <= room:
            l, _ = split_extension(l, symmetrize(twisted_adjoint(l, rng)), l.name)
        elif move == "poly" and room >= 1:
            d = rng.randint(1, min(room, 2))
            l, _ = split_extension(l, symmetrize(polynomial_module(l, d, rng)), l.name)
        else:
            l = derivation_extension(l, rng, l.name)
    g = random_invertible(fld, rng, l.dim)
    l2, _ = change_basis(l, g, name)
    return l2


def random_soluble_leibniz(fld: Field, max_dim: int, rng: random.Random, name: str = "rand_leib") -> AlgebraPresentation:
    """``V ⋊ L`` with ``VL = 0`` and a nonzero action, so never a Lie algebra."""
    base_dim = rng.randint(1, max(1, max_dim - 1))
    l = random_soluble_lie(fld, max(base_dim, 2), rng, "base") if base_dim >= 2 else AlgebraPresentation.abelian(fld, 1, "base")
    d = rng.randint(1, max(1, min(2, max_dim - l.dim)))
    m = polynomial_module(l, d, rng)
    while all(a.is_zero() for a in m.left):
        m = polynomial_module(l, d, rng)
    p, _ = split_extension(l, antisymmetrize(m), name)
    g = random_invertible(fld, rng, p.dim)
    p2, _ = change_basis(p, g, name)
    return p2


def random_corpus(fld: Field, count: int, max_dim: int, seed: int, leibniz_share: float = 0.0, prefix: str = "rand") -> list[AlgebraPresentation]:
    """``count`` seeded random soluble algebras; a ``leibniz_share`` fraction are Leibniz."""
    rng = random.Random(seed)
    out = []
    for i in range(count):
        if rng.random() < leibniz_share:
            out.append(random_soluble_leibniz(fld, max_dim, rng, f"{prefix}{i}"))
        else:
            out.append(random_soluble_lie(fld, max_dim, rng, f"{prefix}{i}"))
    return out
