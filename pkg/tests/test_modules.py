import pytest
from hypothesis import given, settings, strategies as st

from solalg.algebra import LEIBNIZ, LIE, AlgebraPresentation, is_ideal, quotient, validate
from solalg.exact_linalg import GF, QQ, Matrix, span
from solalg.modules import (
    ANTISYMMETRIC,
    NEITHER,
    SYMMETRIC,
    ModulePresentation,
    ReducibleModuleError,
    _restrict,
    antisymmetrize,
    classify_dichotomy,
    direct_sum_modules,
    exhaustive_submodules,
    is_faithful,
    is_irreducible,
    minimal_submodule,
    module_on_ideal,
    regular_module,
    representation_kernel,
    spin,
    split_extension,
    symmetrize,
    trivial_module,
    verify_module,
)
from solalg.series import leib_ideal


@pytest.fixture
def w(builtin):
    return builtin.module("w")


@pytest.fixture
def lam(builtin):
    return builtin.module("lam")


def test_trivial_module_valid(builtin):
    for name in ("r2", "h3", "e4_gf2"):
        assert verify_module(trivial_module(builtin.algebra(name), 2)).valid


def test_w_is_valid(w):
    assert verify_module(w).valid


def test_w_with_identity_for_y_is_invalid(w):
    bad = ModulePresentation("bad", w.algebra, 2, (w.left[0], Matrix.identity(GF(2), 2)))
    rep = verify_module(bad)
    assert not rep.valid
    assert (1, 2) in [v.indices for v in rep.violations]


def test_spin_examples(w):
    assert spin(w, (0, 0)).space.is_zero()
    assert spin(w, (1, 0)).space.is_full()
    assert spin(w, (0, 1)).space.is_full()


def test_minimal_submodule_of_sum_with_trivial(builtin, w):
    r2 = builtin.algebra("r2_gf2")
    m = direct_sum_modules(trivial_module(r2, 1), w)
    sub = minimal_submodule(m).space
    assert sub.dim == 1
    one_dim = [s for s in exhaustive_submodules(m) if s.dim == 1]
    assert sub in one_dim


def test_minimal_submodule_of_h3_regular(builtin):
    h3 = builtin.algebra("h3")
    sub = minimal_submodule(regular_module(h3)).space
    assert sub == h3.span([(0, 0, 1)])


def test_irreducibility_examples(w, lam):
    assert is_irreducible(lam)
    assert is_irreducible(w)
    assert not is_irreducible(direct_sum_modules(w, w))


def test_rotation_module_irreducible_over_q(builtin):
    # no rational eigenvector, so no 1-dim submodule
    assert is_irreducible(builtin.module("rot"))


def test_reducible_rational_module():
    ab1 = AlgebraPresentation.abelian(QQ, 1)
    m = ModulePresentation("diag", ab1, 3, (Matrix.from_rows([[1, 0, 0], [0, 0, -1], [0, 1, 0]], QQ),))
    sub = minimal_submodule(m).space
    assert sub == span(QQ, [(1, 0, 0)], 3)


def test_representation_kernels(builtin, w, lam):
    r2 = builtin.algebra("r2")
    assert representation_kernel(trivial_module(r2, 1)).space == r2.full
    assert is_faithful(w)
    assert representation_kernel(lam).space == r2.span([(0, 1)])


def test_dichotomy_examples(builtin, w, lam):
    assert classify_dichotomy(antisymmetrize(lam)) == ANTISYMMETRIC
    assert classify_dichotomy(symmetrize(w)) == SYMMETRIC
    p3 = builtin.algebra("p3")
    assert classify_dichotomy(module_on_ideal(p3, leib_ideal(p3).space)) == ANTISYMMETRIC
    with pytest.raises(ReducibleModuleError):
        classify_dichotomy(direct_sum_modules(w, w))


def test_split_extension_examples(builtin, w, lam):
    ab1 = builtin.algebra("ab1")
    p, v = split_extension(ab1, trivial_module(ab1, 1))
    assert p.dim == 2 and p.kind == LIE and not p.brackets
    e4, _ = split_extension(w.algebra, symmetrize(w), "e4_gf2")
    assert e4 == builtin.algebra("e4_gf2")
    p3, _ = split_extension(lam.algebra, antisymmetrize(lam), "p3")
    assert p3 == builtin.algebra("p3")
    assert not validate(p3, LIE).valid
    p4, v = split_extension(w.algebra, antisymmetrize(w))
    assert p4.kind == LEIBNIZ and p4.dim == 4 and validate(p4).valid and not validate(p4, LIE).valid
    assert leib_ideal(p4).space == v.space


def test_split_extension_quotient_recovers_base(builtin, w, lam):
    for m in (symmetrize(w), antisymmetrize(w), antisymmetrize(lam), symmetrize(lam)):
        p, v = split_extension(m.algebra, m)
        q, _ = quotient(p, v)
        assert q.structure_equal(m.algebra)


# -- properties -----------------------------------------------------------------


def _random_module(data, p, ndim_max=3):
    fld = GF(p)
    base = data.draw(st.sampled_from(["ab1", "ab2", "r2"]))
    if base == "r2":
        l = AlgebraPresentation.from_table("r2", fld, 2, LIE, {(0, 1): (0, 1), (1, 0): (0, p - 1)})
    else:
        l = AlgebraPresentation.abelian(fld, 1 if base == "ab1" else 2)
    d = data.draw(st.integers(1, ndim_max))
    entry = st.integers(0, p - 1)
    mats = [Matrix(fld, tuple(tuple(data.draw(entry) for _ in range(d)) for _ in range(d)), d) for _ in range(l.dim)]
    if base == "r2":
        # x acts by anything; y must satisfy [X, Y] = Y, so use Y = 0 or an eigen-shift pair
        mats[1] = Matrix.zero(fld, d, d)
    elif base == "ab2":
        mats[1] = mats[0] @ mats[0]
    return ModulePresentation("rand", l, d, tuple(mats))


@settings(max_examples=60)
@given(st.data(), st.sampled_from([2, 3]))
def test_irreducibility_matches_exhaustive_enumeration(data, p):
    m = _random_module(data, p)
    assert verify_module(m).valid
    subs = exhaustive_submodules(m)
    proper = [s for s in subs if 0 < s.dim < m.dim_v]
    assert is_irreducible(m) == (not proper)
    minimal = minimal_submodule(m).space
    assert minimal in subs and not minimal.is_zero()
    assert not any(s < minimal for s in subs if not s.is_zero())


@settings(max_examples=40)
@given(st.data(), st.sampled_from([2, 3]))
def test_spin_is_closed(data, p):
    m = _random_module(data, p)
    v = tuple(data.draw(st.integers(0, p - 1)) for _ in range(m.dim_v))
    s = spin(m, v).space
    assert all(g.apply(r) in s for g in m.generators() for r in s.rows)


@settings(max_examples=40)
@given(st.data(), st.sampled_from([2, 3]))
def test_kernel_is_ideal_and_dichotomy_total(data, p):
    m = _random_module(data, p)
    assert is_ideal(m.algebra, representation_kernel(m).space)
    for bm in (symmetrize(m), antisymmetrize(m)):
        sub = minimal_submodule(bm).space
        # restricted to a minimal submodule the bimodule is irreducible
        left = tuple(_restrict(m.field, bm.left, sub))
        right = tuple(_restrict(m.field, bm.right_matrices(), sub))
        irr = ModulePresentation("irr", m.algebra, sub.dim, left, right)
        assert verify_module(irr).valid
        assert classify_dichotomy(irr) != NEITHER
