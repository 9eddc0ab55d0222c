"""Modules and bimodules of Lie/Leibniz algebras on exact vector spaces.

Action matrices act on column vectors: ``x . v = left[x] @ v`` and
``v . x = right[x] @ v``.  ``right=None`` means the right action is zero
(``VL = 0``); a Lie module in the usual sense carries ``right = -left``
(see :func:`symmetrize`).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

import sympy

from .algebra import (
    LEIBNIZ,
    LIE,
    AlgebraPresentation,
    Ideal,
    InvalidAlgebraError,
    Violation,
    ValidationReport,
    require_valid,
    validate,
)
from .exact_linalg import (
    DimensionMismatchError,
    Field,
    Matrix,
    Subspace,
    combine,
    complement_basis,
    full_space,
    left_kernel,
    nullspace,
    section_coordinates,
    span,
)


class ModuleError(ValueError):
    pass


class ReducibleModuleError(ModuleError):
    pass


class UnsupportedModuleError(ModuleError):
    """The minimal-submodule search has no certified method for this input."""


# projective points checked before the GF(p) search gives up
MAX_PROJECTIVE_POINTS = 200_000


@dataclass(frozen=True)
class ModulePresentation:
    name: str
    algebra: AlgebraPresentation
    dim_v: int
    left: tuple
    right: tuple | None = None

    def __post_init__(self):
        fld, n, d = self.algebra.field, self.algebra.dim, self.dim_v
        for label, mats in (("left", self.left), ("right", self.right)):
            if mats is None:
                continue
            mats = tuple(m if isinstance(m, Matrix) else Matrix.from_rows(m, fld, d) for m in mats)
            if len(mats) != n:
                raise DimensionMismatchError(f"{label} action needs {n} matrices, got {len(mats)}")
            for m in mats:
                if m.shape != (d, d):
                    raise DimensionMismatchError(f"{label} action matrix of shape {m.shape}, expected {(d, d)}")
                if m.field != fld:
                    raise DimensionMismatchError(f"{label} action over {m.field}, algebra over {fld}")
            object.__setattr__(self, label, mats)

    @property
    def field(self) -> Field:
        return self.algebra.field

    def right_matrices(self) -> tuple:
        if self.right is None:
            return tuple(Matrix.zero(self.field, self.dim_v, self.dim_v) for _ in range(self.algebra.dim))
        return self.right

    def generators(self) -> list[Matrix]:
        """All nonzero action matrices, left then right."""
        mats = list(self.left) + list(self.right or ())
        return [m for m in mats if not m.is_zero()]

    def act_left(self, x: Sequence) -> Matrix:
        return _lincomb(self.field, x, self.left, self.dim_v)

    def act_right(self, x: Sequence) -> Matrix:
        return _lincomb(self.field, x, self.right_matrices(), self.dim_v)

    @property
    def full(self) -> Subspace:
        return full_space(self.field, self.dim_v)


def _lincomb(fld: Field, coeffs, mats, d) -> Matrix:
    acc = [[0] * d for _ in range(d)]
    for c, m in zip(coeffs, mats):
        if c:
            for r in range(d):
                row = m.rows[r]
                acc_r = acc[r]
                for s in range(d):
                    if row[s]:
                        acc_r[s] += c * row[s]
    return Matrix(fld, tuple(fld.vector(r) for r in acc), d)


def _commutator(a: Matrix, b: Matrix) -> Matrix:
    return a @ b - b @ a


def trivial_module(l: AlgebraPresentation, dim_v: int, name: str = "trivial") -> ModulePresentation:
    z = Matrix.zero(l.field, dim_v, dim_v)
    return ModulePresentation(name, l, dim_v, (z,) * l.dim)


def regular_module(l: AlgebraPresentation, two_sided: bool = False, name: str | None = None) -> ModulePresentation:
    """``L`` acting on itself by left multiplication (and right multiplication if ``two_sided``)."""
    left = tuple(l.left_mult(l.unit(i)) for i in range(l.dim))
    right = tuple(l.right_mult(l.unit(i)) for i in range(l.dim)) if two_sided else None
    return ModulePresentation(name or f"{l.name}_reg", l, l.dim, left, right)


def symmetrize(m: ModulePresentation, name: str | None = None) -> ModulePresentation:
    """The bimodule with ``v x = -x v``; this is how a Lie module is viewed as a bimodule."""
    return ModulePresentation(name or m.name, m.algebra, m.dim_v, m.left, tuple(-a for a in m.left))


def antisymmetrize(m: ModulePresentation, name: str | None = None) -> ModulePresentation:
    """Keep the left action and set ``VL = 0``."""
    return ModulePresentation(name or m.name, m.algebra, m.dim_v, m.left, None)


def direct_sum_modules(m1: ModulePresentation, m2: ModulePresentation, name: str | None = None) -> ModulePresentation:
    if not m1.algebra.structure_equal(m2.algebra):
        raise ModuleError("modules over different algebras")
    d1, d2 = m1.dim_v, m2.dim_v
    fld = m1.field

    def block(a: Matrix, b: Matrix) -> Matrix:
        rows = [r + fld.zeros(d2) for r in a.rows] + [fld.zeros(d1) + r for r in b.rows]
        return Matrix(fld, tuple(rows), d1 + d2)

    left = tuple(block(a, b) for a, b in zip(m1.left, m2.left))
    right = None
    if m1.right is not None or m2.right is not None:
        right = tuple(block(a, b) for a, b in zip(m1.right_matrices(), m2.right_matrices()))
    return ModulePresentation(name or f"{m1.name}_plus_{m2.name}", m1.algebra, d1 + d2, left, right)


def conjugate_module(m: ModulePresentation, g: Matrix, ginv: Matrix, name: str | None = None) -> ModulePresentation:
    """Same module in the basis given by the columns of ``g``."""
    left = tuple(ginv @ a @ g for a in m.left)
    right = None if m.right is None else tuple(ginv @ a @ g for a in m.right)
    return ModulePresentation(name or m.name, m.algebra, m.dim_v, left, right)


def verify_module(m: ModulePresentation) -> ValidationReport:
    """Check the bimodule laws on all basis pairs ``(x, y)``.

    These are the left Leibniz identity with exactly one argument in ``V``::

        λ(xy) = [λx, λy]
        ρ(xy) = λx ρy - ρy λx
        ρ(xy) = ρy ρx + λx ρy

    With ``ρ = -λ`` and a Lie algebra they reduce to the representation law.
    """
    report = ValidationReport(m.name, "module")
    l = m.algebra
    rho = m.right_matrices()
    has_right = m.right is not None
    for i in range(l.dim):
        for j in range(l.dim):
            p = l.basis_product(i, j)
            lam_p = m.act_left(p)
            if lam_p != _commutator(m.left[i], m.left[j]):
                report.violations.append(Violation("left-representation", (i + 1, j + 1)))
            if not has_right:
                # ρ = 0 makes both right laws hold identically
                continue
            rho_p = m.act_right(p)
            if rho_p != m.left[i] @ rho[j] - rho[j] @ m.left[i]:
                report.violations.append(Violation("right-compatibility", (i + 1, j + 1)))
            if rho_p != rho[j] @ rho[i] + m.left[i] @ rho[j]:
                report.violations.append(Violation("right-composition", (i + 1, j + 1)))
    return report


@dataclass(frozen=True)
class Submodule:
    module: ModulePresentation
    space: Subspace

    def __post_init__(self):
        for g in self.module.generators():
            for r in self.space.rows:
                if g.apply(r) not in self.space:
                    raise ModuleError(f"{self.space} is not closed under the action")

    @property
    def dim(self) -> int:
        return self.space.dim


class _Echelon:
    """Incrementally built echelon basis; rows stay zero at earlier pivots."""

    def __init__(self, fld: Field, n: int):
        self.field, self.n = fld, n
        self.rows: list = []
        self.pivots: list = []

    def reduce(self, v) -> list:
        fld = self.field
        v = list(v)
        for row, p in zip(self.rows, self.pivots):
            a = v[p]
            if a:
                v = [fld.reduce(x - a * y) if y else x for x, y in zip(v, row)]
        return v

    def add(self, v) -> bool:
        w = self.reduce(v)
        p = next((i for i, x in enumerate(w) if x), None)
        if p is None:
            return False
        inv = self.field.inv(w[p])
        self.rows.append(tuple(self.field.reduce(x * inv) for x in w))
        self.pivots.append(p)
        return True

    def __len__(self):
        return len(self.rows)


def _spin_vectors(fld: Field, gens: Sequence[Matrix], seeds, n: int) -> Subspace:
    ech = _Echelon(fld, n)
    queue = []
    for v in seeds:
        if ech.add(v):
            queue.append(tuple(v))
    while queue:
        v = queue.pop()
        for g in gens:
            w = g.apply(v)
            if ech.add(w):
                queue.append(w)
    return span(fld, ech.rows, n)


def spin(m: ModulePresentation, v: Sequence) -> Submodule:
    """Smallest submodule containing ``v``."""
    if len(v) != m.dim_v:
        raise DimensionMismatchError(f"vector of length {len(v)} in module of dim {m.dim_v}")
    v = tuple(m.field.coerce(x) for x in v)
    return Submodule(m, _spin_vectors(m.field, m.generators(), [v], m.dim_v))


def _projective_points(s: Subspace) -> Iterator[tuple]:
    """One nonzero vector per line of ``s`` (GF(p) only); basis rows come first."""
    p, d, n = s.field.p, s.dim, s.ambient_dim
    for lead in range(d):
        rest = d - lead - 1
        for code in range(p ** rest):
            coeffs = [0] * d
            coeffs[lead] = 1
            c = code
            for t in range(rest):
                coeffs[lead + 1 + t] = c % p
                c //= p
            yield combine(s.field, coeffs, s.rows, n)


def _minimal_gfp(m: ModulePresentation, gens) -> Subspace:
    fld, n = m.field, m.dim_v
    current = full_space(fld, n)
    while True:
        points = (fld.p ** current.dim - 1) // (fld.p - 1)
        if points > MAX_PROJECTIVE_POINTS:
            raise UnsupportedModuleError(f"{points} lines in GF({fld.p})^{current.dim}; too many for exhaustive search")
        for v in _projective_points(current):
            u = _spin_vectors(fld, gens, [v], n)
            if u.dim < current.dim:
                current = u
                break
        else:
            return current


def _restrict(fld: Field, gens: Sequence[Matrix], w: Subspace) -> list[Matrix]:
    """Matrices of the generators on the invariant subspace ``w`` in its echelon coordinates."""
    out = []
    for g in gens:
        cols = []
        for r in w.rows:
            img = g.apply(r)
            cols.append(tuple(img[c] for c in w.pivots))
        out.append(Matrix.from_columns(fld, cols, w.dim))
    return out


def _enveloping_basis(fld: Field, gens: Sequence[Matrix], d: int) -> list[Matrix]:
    """Basis of the unital associative algebra generated by ``gens`` on ``F^d``."""
    ident = Matrix.identity(fld, d)
    ech = _Echelon(fld, d * d)
    basis = []
    queue = [ident]
    ech.add(ident.flat())
    basis.append(ident)
    while queue:
        a = queue.pop()
        for g in gens:
            b = g @ a
            if ech.add(b.flat()):
                basis.append(b)
                queue.append(b)
    return basis


def _trace(m: Matrix):
    return m.field.reduce(sum(m.rows[i][i] for i in range(m.nrows)))


def _minimal_polynomial(theta: Matrix) -> list:
    """Monic minimal polynomial, coefficients from the constant term up."""
    fld, d = theta.field, theta.nrows
    powers = [Matrix.identity(fld, d)]
    while True:
        powers.append(theta @ powers[-1])
        ker = left_kernel(fld, [p.flat() for p in powers], d * d)
        if ker.dim:
            c = ker.rows[0]
            lead = c[-1]
            inv = fld.inv(lead)
            return [fld.reduce(x * inv) for x in c]


def _factor_over_q(coeffs: list) -> list[list]:
    """Distinct monic irreducible factors over Q, coefficients from the constant term up."""
    x = sympy.Symbol("x")
    poly = sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in reversed(coeffs)], x, domain=sympy.QQ)
    _, factors = poly.factor_list()
    out = []
    for f, _mult in factors:
        f = f.monic()
        out.append([Fraction(int(c.p), int(c.q)) for c in reversed(f.all_coeffs())])
    out.sort(key=lambda f: (len(f), [str(c) for c in f]))
    return out


def _poly_at(coeffs: list, theta: Matrix) -> Matrix:
    fld, d = theta.field, theta.nrows
    acc = Matrix.zero(fld, d, d)
    ident = Matrix.identity(fld, d)
    for c in reversed(coeffs):
        acc = theta @ acc + ident.scale(c)
    return acc


def _minimal_rational(m: ModulePresentation, gens, seed: int = 0) -> Subspace:
    """Minimal submodule over Q.

    Minimal submodules lie in the socle ``{v : rad(A) v = 0}`` where ``A`` is
    the enveloping algebra of the action and (in characteristic 0)
    ``rad(A) = {a : tr(ab) = 0 for all b in A}``.  On the socle ``A`` acts
    semisimply; for soluble algebras the action there is commutative, and
    splitting by the factors of minimal polynomials of random elements ends on
    a piece where ``A`` is a field, whose every nonzero orbit is minimal.
    """
    fld, n = m.field, m.dim_v
    rng = random.Random(seed)
    basis = _enveloping_basis(fld, gens, n)
    gram = Matrix(fld, tuple(tuple(_trace(a @ b) for b in basis) for a in basis), len(basis))
    rad_coeffs = nullspace(gram)
    rad = [_lincomb(fld, c, basis, n) for c in rad_coeffs.rows]
    if rad:
        stacked = tuple(r for a in rad for r in a.rows)
        w = nullspace(Matrix(fld, stacked, n))
    else:
        w = full_space(fld, n)

    attempts = 0
    while True:
        sub_gens = _restrict(fld, gens, w)
        for a in sub_gens:
            for b in sub_gens:
                if a @ b != b @ a:
                    raise UnsupportedModuleError(
                        "semisimple part of the action is not commutative; no certified minimal-submodule method over Q"
                    )
        alg = _enveloping_basis(fld, sub_gens, w.dim)
        if len(alg) == 1:
            return span(fld, [w.rows[0]], n)
        theta = _lincomb(fld, [rng.randint(-3, 3) for _ in alg], alg, w.dim)
        factors = _factor_over_q(_minimal_polynomial(theta))
        if len(factors) > 1:
            ker = nullspace(_poly_at(factors[0], theta))
            w = span(fld, [combine(fld, c, w.rows, n) for c in ker.rows], n)
            continue
        if len(factors[0]) - 1 == len(alg):
            # A|w = Q[theta] is a field, so w is a vector space over it and any orbit is minimal
            return _spin_vectors(fld, gens, [w.rows[0]], n)
        attempts += 1
        if attempts > 500:
            raise UnsupportedModuleError("no primitive element found for the action algebra")


def minimal_submodule(m: ModulePresentation) -> Submodule:
    """A minimal nonzero submodule of ``m``."""
    if m.dim_v < 1:
        raise ModuleError("zero module has no minimal submodule")
    gens = m.generators()
    fld = m.field
    if not gens:
        return Submodule(m, span(fld, [fld.unit(m.dim_v, 0)], m.dim_v))
    if fld.p:
        return Submodule(m, _minimal_gfp(m, gens))
    return Submodule(m, _minimal_rational(m, gens))


def is_irreducible(m: ModulePresentation) -> bool:
    return minimal_submodule(m).space.is_full()


def representation_kernel(m: ModulePresentation) -> Ideal:
    """``{x : x V = 0 and V x = 0}``."""
    l = m.algebra
    cols = [a.flat() + b.flat() for a, b in zip(m.left, m.right_matrices())]
    if not cols:
        return Ideal(l, l.zero)
    ker = nullspace(Matrix.from_columns(l.field, cols, 2 * m.dim_v * m.dim_v))
    return Ideal(l, ker)


def is_faithful(m: ModulePresentation) -> bool:
    return representation_kernel(m).space.is_zero()


SYMMETRIC = "symmetric"
ANTISYMMETRIC = "antisymmetric"
NEITHER = "neither"


def classify_dichotomy(m: ModulePresentation) -> str:
    """Type of an irreducible bimodule: ``antisymmetric`` (VL = 0) or ``symmetric`` (vx = -xv).

    A module with zero action on both sides satisfies both; it is reported as
    antisymmetric.  ``neither`` can only come back for inputs violating the
    bimodule laws.
    """
    if not is_irreducible(m):
        raise ReducibleModuleError(f"{m.name} is reducible")
    rho = m.right_matrices()
    if all(r.is_zero() for r in rho):
        return ANTISYMMETRIC
    if all(r == -a for r, a in zip(rho, m.left)):
        return SYMMETRIC
    return NEITHER


def _is_symmetric(m: ModulePresentation) -> bool:
    return all(r == -a for r, a in zip(m.right_matrices(), m.left))


def split_extension(l: AlgebraPresentation, m: ModulePresentation, name: str | None = None) -> tuple[AlgebraPresentation, Ideal]:
    """The algebra on ``V ⊕ L`` (V first) with ``(v1+x1)(v2+x2) = (x1.v2 + v1.x2) + x1 x2``.

    The result is a Lie algebra when ``l`` is Lie and ``v x = -x v``; otherwise
    it is tagged Leibniz.  Returns the algebra and ``V`` as an ideal.
    """
    require_valid(l)
    if not m.algebra.structure_equal(l):
        raise ModuleError("module is over a different algebra")
    report = verify_module(m)
    if not report.valid:
        raise ModuleError(str(report))
    d, n, fld = m.dim_v, l.dim, l.field
    kind = LIE if (l.kind == LIE and _is_symmetric(m)) else LEIBNIZ
    triples = []
    for i, j, k, c in l.brackets:
        triples.append((d + i, d + j, d + k, c))
    rho = m.right_matrices()
    for i in range(n):
        for b in range(d):
            for a in range(d):
                c = m.left[i].rows[a][b]
                if c:
                    triples.append((d + i, b, a, c))
                c = rho[i].rows[a][b]
                if c:
                    triples.append((b, d + i, a, c))
    p = AlgebraPresentation(name or f"{m.name}_by_{l.name}", fld, d + n, kind, tuple(triples))
    rep = validate(p)
    if not rep.valid:
        raise InvalidAlgebraError(f"split extension failed validation: {rep}")
    v = p.span(fld.unit(d + n, b) for b in range(d))
    return p, Ideal(p, v)


def section_module(l: AlgebraPresentation, h: Subspace, k: Subspace, name: str | None = None) -> ModulePresentation:
    """The bimodule ``H/K`` for ideals ``K ⊆ H``, on the basis of :func:`complement_basis`."""
    comp = complement_basis(k, h)
    d = len(comp)
    left, right = [], []
    for i in range(l.dim):
        x = l.unit(i)
        lc = [section_coordinates(k, h, l.mul(x, c)) for c in comp]
        rc = [section_coordinates(k, h, l.mul(c, x)) for c in comp]
        left.append(Matrix.from_columns(l.field, lc, d))
        right.append(Matrix.from_columns(l.field, rc, d))
    return ModulePresentation(name or f"{l.name}_section", l, d, tuple(left), tuple(right))


def module_on_ideal(l: AlgebraPresentation, a: Subspace, name: str | None = None) -> ModulePresentation:
    return section_module(l, a, l.zero, name)


def exhaustive_submodules(m: ModulePresentation) -> list[Subspace]:
    """Every submodule, by enumerating all subspaces (GF(p), desk scale only)."""
    from .oracles import all_subspaces

    gens = m.generators()
    out = []
    for s in all_subspaces(m.field, m.dim_v):
        if all(g.apply(r) in s for g in gens for r in s.rows):
            out.append(s)
    return out
