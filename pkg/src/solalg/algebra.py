"""Lie and Leibniz algebras given by structure constants.

Basis indices are 0-based in code.  Human-facing output (validation reports,
the catalog format) numbers basis elements from 1, matching ``e1, ..., en``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product as iproduct
from typing import Iterable, Sequence

from .exact_linalg import (
    DimensionMismatchError,
    Field,
    FieldMismatchError,
    Matrix,
    Subspace,
    full_space,
    inverse,
    nullspace,
    span,
    zero_subspace,
)

LIE = "lie"
LEIBNIZ = "leibniz"
KINDS = (LIE, LEIBNIZ)


class InvalidAlgebraError(ValueError):
    pass


class NotAnIdealError(ValueError):
    pass


class MorphismError(ValueError):
    pass


@dataclass(frozen=True)
class AlgebraPresentation:
    """An algebra on ``F^dim`` with ``e_i e_j = sum_k c_ij^k e_k``.

    ``brackets`` is the sparse table as sorted ``(i, j, k, c)`` tuples with
    ``c != 0``.  Lie algebras carry the full table, both ``(i, j)`` and
    ``(j, i)``; anticommutativity is checked by :func:`validate`, never assumed.
    """

    name: str
    field: Field
    dim: int
    kind: str
    brackets: tuple = ()
    _table: dict = field(default=None, compare=False, repr=False, hash=False)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"kind must be one of {KINDS}, got {self.kind!r}")
        fld, n = self.field, self.dim
        merged: dict = {}
        for i, j, k, c in self.brackets:
            if not (0 <= i < n and 0 <= j < n and 0 <= k < n):
                raise DimensionMismatchError(f"bracket index out of range in ({i},{j})->{k}")
            c = fld.coerce(c)
            merged[(i, j, k)] = fld.reduce(merged.get((i, j, k), fld.zero) + c)
        canon = tuple(sorted((i, j, k, c) for (i, j, k), c in merged.items() if c))
        object.__setattr__(self, "brackets", canon)
        table: dict = {}
        for i, j, k, c in canon:
            table.setdefault((i, j), []).append((k, c))
        object.__setattr__(self, "_table", {key: tuple(v) for key, v in table.items()})

    @classmethod
    def from_table(cls, name: str, fld: Field, dim: int, kind: str, products: dict) -> "AlgebraPresentation":
        """Build from ``{(i, j): vector}`` with 0-based indices."""
        triples = [(i, j, k, c) for (i, j), vec in products.items() for k, c in enumerate(vec) if c]
        return cls(name, fld, dim, kind, tuple(triples))

    @classmethod
    def abelian(cls, fld: Field, dim: int, name: str | None = None, kind: str = LIE) -> "AlgebraPresentation":
        return cls(name or f"ab{dim}", fld, dim, kind)

    def basis_product(self, i: int, j: int) -> tuple:
        out = [self.field.zero] * self.dim
        for k, c in self._table.get((i, j), ()):
            out[k] = c
        return tuple(out)

    def mul(self, x: Sequence, y: Sequence) -> tuple:
        """Product of two coordinate vectors."""
        out = [0] * self.dim
        for (i, j), terms in self._table.items():
            a = x[i]
            if not a:
                continue
            b = y[j]
            if not b:
                continue
            ab = a * b
            for k, c in terms:
                out[k] += ab * c
        return self.field.vector(out)

    def left_mult(self, x: Sequence) -> Matrix:
        """Matrix of ``y -> x y``."""
        cols = [self.mul(x, self.field.unit(self.dim, j)) for j in range(self.dim)]
        return Matrix.from_columns(self.field, cols, self.dim)

    def right_mult(self, x: Sequence) -> Matrix:
        """Matrix of ``y -> y x``."""
        cols = [self.mul(self.field.unit(self.dim, j), x) for j in range(self.dim)]
        return Matrix.from_columns(self.field, cols, self.dim)

    def unit(self, i: int) -> tuple:
        return self.field.unit(self.dim, i)

    @property
    def full(self) -> Subspace:
        return full_space(self.field, self.dim)

    @property
    def zero(self) -> Subspace:
        return zero_subspace(self.field, self.dim)

    def span(self, vectors: Iterable[Sequence]) -> Subspace:
        return span(self.field, vectors, self.dim)

    def structure_equal(self, other: "AlgebraPresentation") -> bool:
        """Same field, dimension and structure constants; names and kind tags are ignored."""
        return self.field == other.field and self.dim == other.dim and self.brackets == other.brackets

    def renamed(self, name: str, kind: str | None = None) -> "AlgebraPresentation":
        return AlgebraPresentation(name, self.field, self.dim, kind or self.kind, self.brackets)

    def is_valid(self) -> bool:
        return _is_valid_cached(self)

    def __str__(self):
        return f"{self.name} ({self.kind}, dim {self.dim} over {self.field})"


def as_leibniz(l: AlgebraPresentation, name: str | None = None) -> AlgebraPresentation:
    """The same structure constants tagged ``leibniz`` (every Lie algebra is a Leibniz algebra)."""
    return l.renamed(name or l.name, LEIBNIZ)


@dataclass
class Violation:
    identity: str
    indices: tuple  # 1-based basis labels

    def __str__(self):
        return f"{self.identity} at {self.indices}"


@dataclass
class ValidationReport:
    subject: str
    kind: str
    violations: list = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.valid

    def __str__(self):
        if self.valid:
            return f"{self.subject}: valid {self.kind}"
        shown = "; ".join(str(v) for v in self.violations[:6])
        more = f" (+{len(self.violations) - 6} more)" if len(self.violations) > 6 else ""
        return f"{self.subject}: invalid as {self.kind}: {shown}{more}"


def validate(a: AlgebraPresentation, kind: str | None = None) -> ValidationReport:
    """Check the identities required by ``kind`` (default: the presentation's own kind).

    Lie: ``e_i e_i = 0``, ``e_i e_j = -e_j e_i`` and the Jacobi identity on
    every triple ``i < j < k``.  Leibniz: ``a(bc) = (ab)c + b(ac)`` on all
    basis triples.
    """
    kind = kind or a.kind
    report = ValidationReport(a.name, kind)
    n, fld = a.dim, a.field
    e = [a.unit(i) for i in range(n)]
    if kind == LIE:
        for i in range(n):
            if any(a.basis_product(i, i)):
                report.violations.append(Violation("alternating", (i + 1, i + 1)))
            for j in range(i + 1, n):
                s = fld.vector(x + y for x, y in zip(a.basis_product(i, j), a.basis_product(j, i)))
                if any(s):
                    report.violations.append(Violation("anticommutativity", (i + 1, j + 1)))
        for i in range(n):
            for j in range(i + 1, n):
                for k in range(j + 1, n):
                    t1 = a.mul(e[i], a.mul(e[j], e[k]))
                    t2 = a.mul(e[j], a.mul(e[k], e[i]))
                    t3 = a.mul(e[k], a.mul(e[i], e[j]))
                    if any(fld.vector(x + y + z for x, y, z in zip(t1, t2, t3))):
                        report.violations.append(Violation("jacobi", (i + 1, j + 1, k + 1)))
    elif kind == LEIBNIZ:
        prods = [[a.basis_product(i, j) for j in range(n)] for i in range(n)]
        for i, j, k in iproduct(range(n), repeat=3):
            lhs = a.mul(e[i], prods[j][k])
            rhs1 = a.mul(prods[i][j], e[k])
            rhs2 = a.mul(e[j], prods[i][k])
            if any(fld.vector(x - y - z for x, y, z in zip(lhs, rhs1, rhs2))):
                report.violations.append(Violation("left-leibniz", (i + 1, j + 1, k + 1)))
    else:
        raise ValueError(f"unknown kind {kind!r}")
    return report


_valid_cache: dict = {}


def _is_valid_cached(a: AlgebraPresentation) -> bool:
    key = (a.field, a.dim, a.kind, a.brackets)
    if key not in _valid_cache:
        if len(_valid_cache) > 4096:
            _valid_cache.clear()
        _valid_cache[key] = validate(a).valid
    return _valid_cache[key]


def require_valid(a: AlgebraPresentation) -> None:
    if not a.is_valid():
        raise InvalidAlgebraError(str(validate(a)))


def _check_ambient(l: AlgebraPresentation, *subspaces: Subspace):
    for s in subspaces:
        if s.field != l.field:
            raise FieldMismatchError(f"subspace over {s.field} in algebra over {l.field}")
        if s.ambient_dim != l.dim:
            raise DimensionMismatchError(f"subspace of F^{s.ambient_dim} in algebra of dim {l.dim}")


def product_subspaces(l: AlgebraPresentation, a: Subspace, b: Subspace) -> Subspace:
    """Span of all products ``x y`` with ``x`` in ``a`` and ``y`` in ``b``."""
    _check_ambient(l, a, b)
    return l.span(l.mul(x, y) for x in a.rows for y in b.rows)


def is_ideal(l: AlgebraPresentation, s: Subspace) -> bool:
    """Two-sided: ``L S`` and ``S L`` both inside ``S``."""
    _check_ambient(l, s)
    full = [l.unit(i) for i in range(l.dim)]
    for x in full:
        for v in s.rows:
            if l.mul(x, v) not in s or l.mul(v, x) not in s:
                return False
    return True


@dataclass(frozen=True)
class Ideal:
    """A two-sided ideal of ``parent``; construction checks the ideal property."""

    parent: AlgebraPresentation
    space: Subspace

    def __post_init__(self):
        if not is_ideal(self.parent, self.space):
            raise NotAnIdealError(f"{self.space} is not an ideal of {self.parent.name}")

    @property
    def dim(self) -> int:
        return self.space.dim


def _as_space(l: AlgebraPresentation, i) -> Subspace:
    if isinstance(i, Ideal):
        if not i.parent.structure_equal(l):
            raise NotAnIdealError("ideal belongs to a different algebra")
        return i.space
    _check_ambient(l, i)
    if not is_ideal(l, i):
        raise NotAnIdealError(f"{i} is not an ideal of {l.name}")
    return i


@dataclass(frozen=True)
class Morphism:
    """Linear map ``source -> target``; column ``j`` of ``matrix`` is the image of ``e_j``."""

    source: AlgebraPresentation
    target: AlgebraPresentation
    matrix: Matrix
    surjective: bool

    def __call__(self, v: Sequence) -> tuple:
        return self.matrix.apply(v)

    def kernel(self) -> Subspace:
        return nullspace(self.matrix)

    def image(self) -> Subspace:
        return self.target.span(self.matrix.columns())

    def compose(self, first: "Morphism") -> "Morphism":
        """``self ∘ first``."""
        return morphism(first.source, self.target, self.matrix @ first.matrix)


def morphism(source: AlgebraPresentation, target: AlgebraPresentation, matrix: Matrix) -> Morphism:
    """Build a :class:`Morphism` with the surjectivity flag read off the rank."""
    if matrix.shape != (target.dim, source.dim):
        raise DimensionMismatchError(f"matrix shape {matrix.shape}, expected {(target.dim, source.dim)}")
    if matrix.field != source.field or matrix.field != target.field:
        raise FieldMismatchError("morphism between algebras over different fields")
    return Morphism(source, target, matrix, matrix.rank() == target.dim)


def validate_morphism(m: Morphism) -> ValidationReport:
    """Check ``φ(e_i e_j) = φ(e_i) φ(e_j)`` on basis pairs and the recorded surjectivity flag."""
    report = ValidationReport(f"{m.source.name}->{m.target.name}", "morphism")
    s, t = m.source, m.target
    imgs = m.matrix.columns()
    for i in range(s.dim):
        for j in range(s.dim):
            if m(s.basis_product(i, j)) != t.mul(imgs[i], imgs[j]):
                report.violations.append(Violation("multiplicative", (i + 1, j + 1)))
    if (m.matrix.rank() == t.dim) != m.surjective:
        report.violations.append(Violation("surjectivity-flag", ()))
    return report


def quotient(l: AlgebraPresentation, ideal, name: str | None = None) -> tuple[AlgebraPresentation, Morphism]:
    """``L/A`` on the non-pivot standard coordinates of ``A``'s echelon basis, with the natural epimorphism."""
    a = _as_space(l, ideal)
    keep = a.nonpivots
    m = len(keep)

    def proj(v):
        w = a.reduce(v)
        return tuple(w[c] for c in keep)

    products = {}
    for r, i in enumerate(keep):
        for s, j in enumerate(keep):
            v = proj(l.basis_product(i, j))
            if any(v):
                products[(r, s)] = v
    q = AlgebraPresentation.from_table(name or f"{l.name}_q", l.field, m, l.kind, products)
    cols = [proj(l.unit(j)) for j in range(l.dim)]
    epi = Morphism(l, q, Matrix.from_columns(l.field, cols, m), True)
    return q, epi


def lift_from_quotient(a: Subspace, v: Sequence) -> tuple:
    """Lift quotient coordinates (as produced by :func:`quotient`) back to a vector of ``L``."""
    out = [a.field.zero] * a.ambient_dim
    for x, c in zip(v, a.nonpivots):
        out[c] = x
    return tuple(out)


def preimage(a: Subspace, sub: Subspace) -> Subspace:
    """Preimage in ``L`` of a subspace of ``L/A`` (quotient coordinates)."""
    return span(a.field, a.rows + tuple(lift_from_quotient(a, r) for r in sub.rows), a.ambient_dim)


def direct_sum(a: AlgebraPresentation, b: AlgebraPresentation, name: str | None = None) -> AlgebraPresentation:
    if a.field != b.field:
        raise FieldMismatchError(f"{a.field} vs {b.field}")
    if a.kind != b.kind:
        raise ValueError(f"kind mismatch: {a.kind} vs {b.kind}")
    n = a.dim
    triples = list(a.brackets) + [(i + n, j + n, k + n, c) for i, j, k, c in b.brackets]
    return AlgebraPresentation(name or f"{a.name}_plus_{b.name}", a.field, a.dim + b.dim, a.kind, tuple(triples))


def summand_spaces(a: AlgebraPresentation, b: AlgebraPresentation) -> tuple[Subspace, Subspace]:
    """The two summands of ``direct_sum(a, b)`` as subspaces."""
    fld, n = a.field, a.dim + b.dim
    first = span(fld, [fld.unit(n, i) for i in range(a.dim)], n)
    second = span(fld, [fld.unit(n, a.dim + i) for i in range(b.dim)], n)
    return first, second


def centralizer_of_section(l: AlgebraPresentation, h: Subspace, k: Subspace) -> Subspace:
    """``C_L(H/K) = {x : xH ⊆ K and Hx ⊆ K}`` for ideals ``K ⊆ H``."""
    _check_ambient(l, h, k)
    if not k <= h:
        raise ValueError("section requires K ⊆ H")
    if not (is_ideal(l, h) and is_ideal(l, k)):
        raise NotAnIdealError("centralizer of a section needs L-invariant H and K")
    n = l.dim
    # column i of each block: e_i h (resp. h e_i) reduced modulo K
    blocks = []
    for hv in h.rows:
        blocks.append([k.reduce(l.mul(l.unit(i), hv)) for i in range(n)])
        blocks.append([k.reduce(l.mul(hv, l.unit(i))) for i in range(n)])
    rows = []
    for cols in blocks:
        rows.extend(tuple(col[r] for col in cols) for r in range(n))
    if not rows:
        return l.full
    return nullspace(Matrix(l.field, tuple(rows), n))


def centralizer(l: AlgebraPresentation, s: Subspace) -> Subspace:
    """Elements annihilating ``s`` from both sides."""
    return centralizer_of_section(l, s, l.zero) if is_ideal(l, s) else _centralizer_plain(l, s)


def _centralizer_plain(l, s):
    n = l.dim
    rows = []
    for v in s.rows:
        for side in (0, 1):
            cols = [l.mul(l.unit(i), v) if side == 0 else l.mul(v, l.unit(i)) for i in range(n)]
            rows.extend(tuple(c[r] for c in cols) for r in range(n))
    if not rows:
        return l.full
    return nullspace(Matrix(l.field, tuple(rows), n))


def center(l: AlgebraPresentation) -> Subspace:
    return _centralizer_plain(l, l.full)


def change_basis(l: AlgebraPresentation, g: Matrix, name: str | None = None) -> tuple[AlgebraPresentation, Morphism]:
    """Re-present ``l`` in the basis given by the columns of invertible ``g``.

    Returns the new presentation ``l2`` and the isomorphism ``l2 -> l`` (matrix ``g``).
    """
    ginv = inverse(g)
    cols = g.columns()
    products = {}
    for i in range(l.dim):
        for j in range(l.dim):
            v = ginv.apply(l.mul(cols[i], cols[j]))
            if any(v):
                products[(i, j)] = v
    l2 = AlgebraPresentation.from_table(name or l.name, l.field, l.dim, l.kind, products)
    return l2, Morphism(l2, l, g, True)


def subalgebra(l: AlgebraPresentation, s: Subspace, name: str | None = None) -> AlgebraPresentation:
    """The subalgebra ``s`` presented on its echelon basis; raises if ``s`` is not closed."""
    _check_ambient(l, s)
    products = {}
    for i, x in enumerate(s.rows):
        for j, y in enumerate(s.rows):
            xy = l.mul(x, y)
            c = _coords(s, xy)
            if c is None:
                raise InvalidAlgebraError(f"{s} is not closed under multiplication")
            if any(c):
                products[(i, j)] = c
    return AlgebraPresentation.from_table(name or f"{l.name}_sub", l.field, s.dim, l.kind, products)


def _coords(s: Subspace, v):
    if any(s.reduce(v)):
        return None
    return tuple(v[c] for c in s.pivots)


def fiber_product(f1: Morphism, f2: Morphism, name: str | None = None) -> tuple[AlgebraPresentation, Morphism, Morphism]:
    """``X = {(x1, x2) : f1(x1) = f2(x2)}`` inside ``source1 ⊕ source2`` with both coordinate projections."""
    if not f1.target.structure_equal(f2.target):
        raise MorphismError("fiber product needs a common target algebra")
    if not (f1.surjective and f2.surjective):
        raise MorphismError("fiber product needs epimorphisms")
    x1, x2 = f1.source, f2.source
    if x1.kind != x2.kind:
        x1, x2 = as_leibniz(x1), as_leibniz(x2)
    total = direct_sum(x1, x2)
    fld, n1, n2 = total.field, x1.dim, x2.dim
    # agreement condition as a linear map on X1 ⊕ X2: [f1 | -f2]
    cols = list(f1.matrix.columns()) + [tuple(fld.reduce(-c) for c in col) for col in f2.matrix.columns()]
    ker = nullspace(Matrix.from_columns(fld, cols, f1.target.dim))
    x = subalgebra(total, ker, name or f"{x1.name}_x_{x2.name}")
    p1 = morphism(x, f1.source, Matrix.from_columns(fld, [r[:n1] for r in ker.rows], n1))
    p2 = morphism(x, f2.source, Matrix.from_columns(fld, [r[n1:] for r in ker.rows], n2))
    return x, p1, p2


def derivations(l: AlgebraPresentation) -> list[Matrix]:
    """Basis of the derivation algebra: ``D(xy) = D(x)y + xD(y)``."""
    n, fld = l.dim, l.field
    # unknown D has entries d[r][c] at variable index r*n + c; D e_c = sum_r d[r][c] e_r
    nvar = n * n
    eqs = []
    for i in range(n):
        for j in range(n):
            # D(e_i e_j) - D(e_i) e_j - e_i D(e_j) = 0, one equation per output coordinate
            rows = [[0] * nvar for _ in range(n)]
            pij = l.basis_product(i, j)
            for c, coeff in enumerate(pij):
                if coeff:
                    for r in range(n):
                        rows[r][r * n + c] += coeff
            for r in range(n):
                prod = l.basis_product(r, j)
                for k, c in enumerate(prod):
                    if c:
                        rows[k][r * n + i] -= c
                prod = l.basis_product(i, r)
                for k, c in enumerate(prod):
                    if c:
                        rows[k][r * n + j] -= c
            eqs.extend(fld.vector(row) for row in rows)
    if not eqs:
        sols = full_space(fld, nvar)
    else:
        sols = nullspace(Matrix(fld, tuple(eqs), nvar))
    return [Matrix(fld, tuple(tuple(v[r * n + c] for c in range(n)) for r in range(n)), n) for v in sols.rows]

