import pytest
from hypothesis import given, strategies as st

from solalg.algebra import (
    LEIBNIZ,
    LIE,
    AlgebraPresentation,
    Ideal,
    InvalidAlgebraError,
    MorphismError,
    NotAnIdealError,
    as_leibniz,
    center,
    centralizer_of_section,
    change_basis,
    derivations,
    direct_sum,
    fiber_product,
    is_ideal,
    morphism,
    product_subspaces,
    quotient,
    require_valid,
    validate,
    validate_morphism,
)
from solalg.exact_linalg import GF, QQ, Matrix, span
from solalg.generators import random_corpus
from solalg.series import leib_ideal, nilpotency_class


@pytest.fixture
def r2(builtin):
    return builtin.algebra("r2")


@pytest.fixture
def h3(builtin):
    return builtin.algebra("h3")


@pytest.fixture
def p3(builtin):
    return builtin.algebra("p3")


def test_r2_is_lie(r2):
    assert validate(r2).valid


def test_p3_leibniz_not_lie(p3):
    assert validate(p3).valid
    rep = validate(p3, LIE)
    assert not rep.valid
    # x1 acts on v from the left only
    assert ("anticommutativity", (1, 2)) in [(v.identity, v.indices) for v in rep.violations]


def test_jacobi_violation_reported():
    a = AlgebraPresentation.from_table(
        "bad", QQ, 3, LIE,
        {(0, 1): (1, 0, 0), (1, 0): (-1, 0, 0), (0, 2): (0, 0, 1), (2, 0): (0, 0, -1)},
    )
    rep = validate(a)
    assert [(v.identity, v.indices) for v in rep.violations] == [("jacobi", (1, 2, 3))]
    with pytest.raises(InvalidAlgebraError):
        require_valid(a)


def test_product_subspaces_examples(h3, p3):
    assert product_subspaces(h3, h3.full, h3.full) == h3.span([(0, 0, 1)])
    assert product_subspaces(h3, h3.full, h3.zero).is_zero()
    assert product_subspaces(p3, leib_ideal(p3).space, p3.full).is_zero()


def test_is_ideal_examples(r2, h3):
    assert is_ideal(r2, r2.full)
    assert is_ideal(r2, r2.span([(0, 1)]))
    assert not is_ideal(r2, r2.span([(1, 0)]))
    assert is_ideal(h3, h3.span([(0, 0, 1)]))
    with pytest.raises(NotAnIdealError):
        Ideal(r2, r2.span([(1, 0)]))


def test_quotient_examples(r2, h3, p3):
    q, epi = quotient(r2, r2.span([(0, 1)]))
    assert q.dim == 1 and not q.brackets
    assert epi.kernel() == r2.span([(0, 1)])
    q, _ = quotient(h3, h3.span([(0, 0, 1)]))
    assert q.dim == 2 and not q.brackets
    q, epi = quotient(p3, leib_ideal(p3))
    assert q.structure_equal(r2)
    assert validate_morphism(epi).valid and epi.surjective


def test_quotient_by_non_ideal(r2):
    with pytest.raises(NotAnIdealError):
        quotient(r2, r2.span([(1, 0)]))


def test_direct_sum_examples(builtin, r2, h3):
    ab1 = builtin.algebra("ab1")
    s = direct_sum(ab1, ab1)
    assert s.dim == 2 and not s.brackets
    s = direct_sum(r2, ab1)
    assert product_subspaces(s, s.full, s.full) == s.span([(0, 1, 0)])
    s = direct_sum(h3, h3)
    assert s.dim == 6 and nilpotency_class(s) == 2
    with pytest.raises(ValueError):
        direct_sum(r2, builtin.algebra("p3"))
    assert validate(direct_sum(as_leibniz(r2), builtin.algebra("p3"))).valid


def test_centralizer_examples(builtin, r2, h3):
    assert centralizer_of_section(h3, h3.span([(0, 0, 1)]), h3.zero) == h3.full
    assert centralizer_of_section(r2, r2.span([(0, 1)]), r2.zero) == r2.span([(0, 1)])
    e4 = builtin.algebra("e4_gf2")
    w = e4.span([(1, 0, 0, 0), (0, 1, 0, 0)])
    c = centralizer_of_section(e4, w, e4.zero)
    assert c == w
    q, _ = quotient(e4, c)
    assert q.structure_equal(builtin.algebra("r2_gf2"))
    assert not product_subspaces(q, q.full, q.full).is_zero()


def test_center(h3, r2):
    assert center(h3) == h3.span([(0, 0, 1)])
    assert center(r2).is_zero()


def _epi_onto_abelian_quotient(r2):
    return quotient(r2, r2.span([(0, 1)]))[1]


def test_fiber_product_of_r2_quotients(r2):
    f = _epi_onto_abelian_quotient(r2)
    x, p1, p2 = fiber_product(f, f)
    assert x.dim == 3 and validate(x).valid
    assert p1.surjective and p2.surjective
    assert validate_morphism(p1).valid and validate_morphism(p2).valid
    # every diagonal element (a, a) lies in X
    total = direct_sum(r2, r2)
    x_in_total = total.span([tuple(p1(v)) + tuple(p2(v)) for v in x.full.rows])
    for v in r2.full.rows:
        assert tuple(v) + tuple(v) in x_in_total
    assert f.compose(p1).matrix == f.compose(p2).matrix


def test_fiber_product_identity_is_diagonal(h3):
    ident = morphism(h3, h3, Matrix.identity(QQ, 3))
    x, p1, p2 = fiber_product(ident, ident)
    assert x.dim == 3 and x.structure_equal(h3.renamed(x.name))
    assert p1.matrix == p2.matrix


def test_fiber_product_over_zero_is_full_sum(r2, h3):
    f1 = quotient(r2, r2.full)[1]
    f2 = quotient(h3, h3.full)[1]
    x, _, _ = fiber_product(f1, f2)
    assert x.dim == 5 and x.structure_equal(direct_sum(r2, h3, x.name))


def test_fiber_product_needs_epimorphisms(r2):
    inc = morphism(AlgebraPresentation.abelian(QQ, 1), r2, Matrix.from_rows([[0], [1]], QQ))
    f = _epi_onto_abelian_quotient(r2)
    with pytest.raises(MorphismError):
        fiber_product(inc, f)


def test_change_basis_roundtrip(r2):
    g = Matrix.from_rows([[1, 1], [0, 2]], QQ)
    l2, iso = change_basis(r2, g)
    assert validate(l2).valid and validate_morphism(iso).valid


def test_derivations_of_r2(r2):
    # Der(r2) = ad(r2), dimension 2
    assert len(derivations(r2)) == 2


@given(st.integers(0, 10_000))
def test_random_lie_products_commute_and_centralizers_are_ideals(seed):
    for l in random_corpus(GF(3), 2, 4, seed):
        assert validate(l).valid
        full, sq = l.full, product_subspaces(l, l.full, l.full)
        assert product_subspaces(l, full, sq) == product_subspaces(l, sq, full)
        assert is_ideal(l, centralizer_of_section(l, sq, l.zero))
        q, epi = quotient(l, sq)
        assert validate(q).valid and epi.kernel() == sq


@given(st.integers(0, 10_000))
def test_leibniz_quotients_stay_valid(seed):
    for l in random_corpus(GF(2), 2, 4, seed, leibniz_share=1.0):
        assert l.kind == LEIBNIZ and validate(l).valid
        q, epi = quotient(l, leib_ideal(l))
        assert validate(q, LIE).valid and epi.kernel() == leib_ideal(l).space


def test_field_mixing_in_subspace_ops(r2):
    with pytest.raises(ValueError):
        product_subspaces(r2, span(GF(2), [(1, 0)], 2), r2.full)
