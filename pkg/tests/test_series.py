import random

import pytest
from hypothesis import given, settings, strategies as st

from solalg.algebra import AlgebraPresentation, change_basis, is_ideal
from solalg.exact_linalg import GF, QQ, span
from solalg.generators import random_corpus, random_invertible
from solalg.modules import antisymmetrize, classify_dichotomy, is_irreducible, split_extension
from solalg.oracles import count_subspaces, all_subspaces, max_nilpotent_ideal
from solalg.series import (
    NotSolubleError,
    chief_series,
    derived_series,
    is_nilpotent,
    leib_ideal,
    lower_central_series,
    nilpotency_class,
    nilradical,
)


def test_derived_series_examples(builtin):
    ab2 = builtin.algebra("ab2")
    assert derived_series(ab2).terms == (ab2.full, ab2.zero)
    r2 = builtin.algebra("r2")
    assert derived_series(r2).terms == (r2.full, r2.span([(0, 1)]), r2.zero)
    sl2 = builtin.algebra("sl2")
    s = derived_series(sl2)
    assert s.terms == (sl2.full,) and not s.reaches_zero


def test_lower_central_examples(builtin):
    h3 = builtin.algebra("h3")
    assert lower_central_series(h3).terms == (h3.full, h3.span([(0, 0, 1)]), h3.zero)
    assert nilpotency_class(h3) == 2
    r2 = builtin.algebra("r2")
    s = lower_central_series(r2)
    assert s.terms[-1] == r2.span([(0, 1)]) and not is_nilpotent(r2)
    zero = AlgebraPresentation.abelian(QQ, 0)
    assert lower_central_series(zero).dims == (0,)


def test_leib_examples(builtin):
    for name in ("r2", "h3", "sl2", "e4_gf2"):
        assert leib_ideal(builtin.algebra(name)).space.is_zero()
    p3 = builtin.algebra("p3")
    assert leib_ideal(p3).space == p3.span([(1, 0, 0)])
    w = builtin.module("w")
    p, v = split_extension(w.algebra, antisymmetrize(w))
    assert leib_ideal(p).space == v.space


def test_chief_series_examples(builtin):
    ab1 = builtin.algebra("ab1")
    cs = chief_series(ab1)
    assert cs.ideals == (ab1.zero, ab1.full) and cs.factor_dims == (1,)
    r2 = builtin.algebra("r2")
    cs = chief_series(r2)
    assert cs.ideals == (r2.zero, r2.span([(0, 1)]), r2.full)
    assert cs.centralizers == (r2.span([(0, 1)]), r2.full)
    e4 = builtin.algebra("e4_gf2")
    cs = chief_series(e4)
    w = e4.span([(1, 0, 0, 0), (0, 1, 0, 0)])
    assert cs.ideals[1] == w and cs.factor_dims[0] == 2 and cs.centralizers[0] == w
    with pytest.raises(NotSolubleError):
        chief_series(builtin.algebra("sl2"))


def test_nilradical_examples(builtin):
    h3 = builtin.algebra("h3")
    assert nilradical(h3).space == h3.full
    r2 = builtin.algebra("r2")
    assert nilradical(r2).space == r2.span([(0, 1)])
    e4 = builtin.algebra("e4_gf2")
    assert nilradical(e4).space == e4.span([(1, 0, 0, 0), (0, 1, 0, 0)])
    assert max_nilpotent_ideal(e4) == nilradical(e4).space


def test_subspace_enumeration_counts():
    for p, n in ((2, 3), (3, 2), (2, 4)):
        subs = list(all_subspaces(GF(p), n))
        assert len(subs) == count_subspaces(p, n) == len(set(subs))


def _check_chief(l):
    cs = chief_series(l)
    for a, b in zip(cs.ideals, cs.ideals[1:]):
        assert a < b and is_ideal(l, b)
    for f, c in zip(cs.factors, cs.centralizers):
        assert is_irreducible(f) and is_ideal(l, c)
        if l.kind == "leibniz":
            assert classify_dichotomy(f) in ("symmetric", "antisymmetric")


@settings(max_examples=15)
@given(st.integers(0, 100_000), st.sampled_from([2, 3]))
def test_nilradical_matches_oracle_over_small_fields(seed, p):
    for l in random_corpus(GF(p), 2, 4, seed, leibniz_share=0.3):
        _check_chief(l)
        assert nilradical(l).space == max_nilpotent_ideal(l)


@settings(max_examples=10)
@given(st.integers(0, 100_000))
def test_chief_series_over_q(seed):
    for l in random_corpus(QQ, 1, 5, seed, leibniz_share=0.3):
        _check_chief(l)


def _nilradical_after_basis_change(l, seed):
    g = random_invertible(l.field, random.Random(seed), l.dim)
    l2, iso = change_basis(l, g)
    n2 = nilradical(l2).space
    return span(l.field, [iso(v) for v in n2.rows], l.dim)


@settings(max_examples=10)
@given(st.integers(0, 100_000), st.sampled_from([0, 2, 3]))
def test_nilradical_invariant_under_change_of_basis(seed, p):
    fld = GF(p) if p else QQ
    for l in random_corpus(fld, 2, 5 if p == 0 else 4, seed, leibniz_share=0.3):
        assert _nilradical_after_basis_change(l, seed) == nilradical(l).space


def test_chief_factor_dims_invariant_under_change_of_basis(builtin):
    for l in builtin.algebras():
        if l.name == "sl2":
            continue
        g = random_invertible(l.field, random.Random(7), l.dim)
        l2, _ = change_basis(l, g)
        assert sorted(chief_series(l2).factor_dims) == sorted(chief_series(l).factor_dims)
