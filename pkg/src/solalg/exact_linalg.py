"""Exact scalars, matrices and subspaces over Q and GF(p).

Vectors are plain tuples of field values: :class:`fractions.Fraction` for Q and
``int`` residues in ``0..p-1`` for GF(p).  Subspaces are always held in reduced
row-echelon form, so two :class:`Subspace` values compare equal exactly when
they span the same space.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import gcd
from typing import Iterable, Sequence

from sympy import isprime


class FieldMismatchError(ValueError):
    """Operands live over different fields."""


class DimensionMismatchError(ValueError):
    """Operands have incompatible shapes or ambient dimensions."""


class LiteralError(ValueError):
    """A coefficient literal is malformed or not in canonical form."""


_Q_LITERAL = re.compile(r"^(-?)(0|[1-9][0-9]*)(?:/([1-9][0-9]*))?$")
_GF_LITERAL = re.compile(r"^(0|[1-9][0-9]*)$")


@dataclass(frozen=True)
class Field:
    """Q when ``p == 0``, otherwise the prime field GF(p)."""

    p: int = 0

    def __post_init__(self):
        if self.p != 0 and not isprime(self.p):
            raise ValueError(f"GF({self.p}): {self.p} is not prime")

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def is_rational(self) -> bool:
        return self.p == 0

    @property
    def zero(self):
        return Fraction(0) if self.p == 0 else 0

    @property
    def one(self):
        return Fraction(1) if self.p == 0 else 1

    def __str__(self):
        return "Q" if self.p == 0 else f"GF({self.p})"

    def reduce(self, x):
        if self.p:
            return x % self.p
        return x if type(x) is Fraction else Fraction(x)

    def coerce(self, x):
        """Bring a Python number or :class:`Scalar` into this field."""
        if isinstance(x, Scalar):
            if x.field != self:
                raise FieldMismatchError(f"{x.field} value in a {self} context")
            return x.value
        if isinstance(x, bool):
            raise TypeError("bool is not a field element")
        if self.p:
            if isinstance(x, Fraction):
                if x.denominator != 1:
                    raise TypeError(f"non-integral value {x} for {self}")
                x = x.numerator
            if not isinstance(x, int):
                raise TypeError(f"cannot coerce {x!r} into {self}")
            return x % self.p
        if isinstance(x, (int, Fraction)):
            return Fraction(x)
        raise TypeError(f"cannot coerce {x!r} into Q")

    def inv(self, x):
        if not x:
            raise ZeroDivisionError("inverse of zero")
        if self.p:
            return pow(x, -1, self.p)
        return 1 / x

    def vector(self, values: Iterable) -> tuple:
        return tuple(self.reduce(v) for v in values)

    def zeros(self, n: int) -> tuple:
        return (self.zero,) * n

    def unit(self, n: int, i: int) -> tuple:
        v = [self.zero] * n
        v[i] = self.one
        return tuple(v)

    def format(self, x) -> str:
        """Canonical literal: ``a/b`` in lowest terms (``a`` when b == 1), or a residue."""
        if self.p:
            return str(x)
        if x.denominator == 1:
            return str(x.numerator)
        return f"{x.numerator}/{x.denominator}"

    def parse(self, text: str):
        """Parse a canonical literal; non-canonical spellings are rejected."""
        if self.p:
            if not _GF_LITERAL.match(text):
                raise LiteralError(f"invalid GF({self.p}) literal {text!r}")
            value = int(text)
            if value >= self.p:
                raise LiteralError(f"residue {text} not in 0..{self.p - 1}")
            return value
        m = _Q_LITERAL.match(text)
        if not m:
            raise LiteralError(f"invalid rational literal {text!r}")
        sign, num, den = m.groups()
        num = int(num)
        if sign and num == 0:
            raise LiteralError("'-0' is not canonical")
        if den is not None:
            den = int(den)
            if den == 1:
                raise LiteralError(f"{text!r}: denominator 1 must be omitted")
            if gcd(num, den) != 1:
                raise LiteralError(f"{text!r} is not in lowest terms")
        else:
            den = 1
        return Fraction(-num if sign else num, den)

    def is_canonical(self, x) -> bool:
        if self.p:
            return type(x) is int and 0 <= x < self.p
        return type(x) is Fraction and x.denominator > 0 and gcd(x.numerator, x.denominator) == 1

    @classmethod
    def from_string(cls, text: str) -> "Field":
        text = text.strip()
        if text == "Q":
            return cls(0)
        m = re.fullmatch(r"GF\(([1-9][0-9]*)\)", text)
        if not m:
            raise ValueError(f"unknown field {text!r}")
        return cls(int(m.group(1)))


QQ = Field(0)


def GF(p: int) -> Field:
    return Field(p)


@dataclass(frozen=True)
class Scalar:
    """A field element tagged with its field; mixing fields raises."""

    field: Field
    value: object

    def __post_init__(self):
        object.__setattr__(self, "value", self.field.coerce(self.value))

    def _other(self, other):
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise FieldMismatchError(f"{self.field} vs {other.field}")
            return other.value
        return self.field.coerce(other)

    def __add__(self, other):
        return Scalar(self.field, self.field.reduce(self.value + self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return Scalar(self.field, self.field.reduce(self.value - self._other(other)))

    def __rsub__(self, other):
        return Scalar(self.field, self.field.reduce(self._other(other) - self.value))

    def __mul__(self, other):
        return Scalar(self.field, self.field.reduce(self.value * self._other(other)))

    __rmul__ = __mul__

    def __neg__(self):
        return Scalar(self.field, self.field.reduce(-self.value))

    def __truediv__(self, other):
        o = self._other(other)
        return Scalar(self.field, self.field.reduce(self.value * self.field.inv(o)))

    def inverse(self) -> "Scalar":
        return Scalar(self.field, self.field.inv(self.value))

    def __bool__(self):
        return bool(self.value)

    def __str__(self):
        return self.field.format(self.value)


def _field_of_entries(rows, fld: Field | None) -> Field:
    seen = {x.field for row in rows for x in row if isinstance(x, Scalar)}
    if fld is not None:
        seen.add(fld)
    if len(seen) > 1:
        raise FieldMismatchError("mixed-field entries: " + ", ".join(sorted(map(str, seen))))
    if not seen:
        raise ValueError("field cannot be inferred; pass field=")
    return seen.pop()


@dataclass(frozen=True)
class Matrix:
    """Dense exact matrix; ``rows`` is a tuple of equal-length tuples."""

    field: Field
    rows: tuple
    ncols: int = -1

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        ncols = self.ncols if self.ncols >= 0 else (len(rows[0]) if rows else 0)
        for r in rows:
            if len(r) != ncols:
                raise DimensionMismatchError("ragged matrix rows")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "ncols", ncols)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], field: Field | None = None, ncols: int = -1) -> "Matrix":
        rows = [list(r) for r in rows]
        fld = _field_of_entries(rows, field)
        return cls(fld, tuple(tuple(fld.coerce(x) for x in r) for r in rows), ncols)

    @classmethod
    def zero(cls, field: Field, nrows: int, ncols: int) -> "Matrix":
        return cls(field, tuple(field.zeros(ncols) for _ in range(nrows)), ncols)

    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        return cls(field, tuple(field.unit(n, i) for i in range(n)), n)

    @classmethod
    def from_columns(cls, field: Field, columns: Sequence[Sequence], nrows: int) -> "Matrix":
        return cls(field, tuple(tuple(c[i] for c in columns) for i in range(nrows)), len(columns))

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self.rows)

    def columns(self) -> list[tuple]:
        return [self.column(j) for j in range(self.ncols)]

    def transpose(self) -> "Matrix":
        return Matrix(self.field, tuple(zip(*self.rows)) if self.rows else (), self.nrows)

    def apply(self, v: Sequence) -> tuple:
        if len(v) != self.ncols:
            raise DimensionMismatchError(f"vector of length {len(v)} for {self.shape} matrix")
        f = self.field
        return tuple(f.reduce(sum((a * b for a, b in zip(r, v) if a and b), f.zero)) for r in self.rows)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if other.field != self.field:
            raise FieldMismatchError(f"{self.field} vs {other.field}")
        if self.ncols != other.nrows:
            raise DimensionMismatchError(f"{self.shape} @ {other.shape}")
        cols = other.columns()
        return Matrix(self.field, tuple(tuple(self._dot(r, c) for c in cols) for r in self.rows), other.ncols)

    def _dot(self, r, c):
        return self.field.reduce(sum((a * b for a, b in zip(r, c) if a and b), self.field.zero))

    def __add__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        f = self.field
        return Matrix(f, tuple(tuple(f.reduce(a + b) for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)), self.ncols)

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        f = self.field
        return Matrix(f, tuple(tuple(f.reduce(a - b) for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)), self.ncols)

    def __neg__(self) -> "Matrix":
        return self.scale(-1)

    def scale(self, c) -> "Matrix":
        f = self.field
        c = f.coerce(c)
        return Matrix(f, tuple(tuple(f.reduce(c * a) for a in r) for r in self.rows), self.ncols)

    def _same_shape(self, other):
        if other.field != self.field:
            raise FieldMismatchError(f"{self.field} vs {other.field}")
        if other.shape != self.shape:
            raise DimensionMismatchError(f"{self.shape} vs {other.shape}")

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.rows)

    def flat(self) -> tuple:
        return tuple(x for r in self.rows for x in r)

    def rank(self) -> int:
        return rref(self).dim

    def __str__(self):
        return "[" + "; ".join(" ".join(self.field.format(x) for x in r) for r in self.rows) + "]"


def _rref_rows(fld: Field, rows: Iterable[Sequence], ncols: int) -> tuple[tuple, tuple]:
    """Reduced row-echelon rows and pivot columns of the span of ``rows``."""
    m = [list(r) for r in rows if any(r)]
    pivots = []
    r = 0
    for c in range(ncols):
        if r == len(m):
            break
        pr = next((i for i in range(r, len(m)) if m[i][c]), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = fld.inv(m[r][c])
        row = [fld.reduce(x * inv) for x in m[r]]
        m[r] = row
        for i in range(len(m)):
            if i != r and m[i][c]:
                a = m[i][c]
                m[i] = [fld.reduce(x - a * y) if y else x for x, y in zip(m[i], row)]
        pivots.append(c)
        r += 1
    return tuple(tuple(row) for row in m[:r]), tuple(pivots)


@dataclass(frozen=True)
class Subspace:
    """A subspace of ``field^ambient_dim`` in canonical reduced row-echelon form.

    Build values through :func:`span` or :func:`rref`; the constructor trusts
    that ``rows`` is already canonical.
    """

    field: Field
    ambient_dim: int
    rows: tuple = ()
    pivots: tuple = field(default=(), compare=False)

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def basis_rows(self) -> Matrix:
        return Matrix(self.field, self.rows, self.ambient_dim)

    def is_zero(self) -> bool:
        return not self.rows

    def is_full(self) -> bool:
        return len(self.rows) == self.ambient_dim

    def __contains__(self, v) -> bool:
        return solve_in_subspace(self, v) is not None

    def __le__(self, other: "Subspace") -> bool:
        _check_compatible(self, other)
        return all(r in other for r in self.rows)

    def __lt__(self, other: "Subspace") -> bool:
        return self <= other and self.dim < other.dim

    def __add__(self, other: "Subspace") -> "Subspace":
        return subspace_sum(self, other)

    def __and__(self, other: "Subspace") -> "Subspace":
        return subspace_intersect(self, other)

    def reduce(self, v: Sequence) -> tuple:
        """Representative of ``v`` modulo this subspace with zeros at all pivot columns."""
        fld = self.field
        v = list(v)
        for row, c in zip(self.rows, self.pivots):
            a = v[c]
            if a:
                v = [fld.reduce(x - a * y) if y else x for x, y in zip(v, row)]
        return tuple(v)

    @cached_property
    def nonpivots(self) -> tuple:
        piv = set(self.pivots)
        return tuple(c for c in range(self.ambient_dim) if c not in piv)

    def __str__(self):
        if not self.rows:
            return "0"
        return "span{" + ", ".join("(" + ",".join(self.field.format(x) for x in r) + ")" for r in self.rows) + "}"


def span(field: Field, vectors: Iterable[Sequence], ambient_dim: int) -> Subspace:
    vecs = []
    for v in vectors:
        if len(v) != ambient_dim:
            raise DimensionMismatchError(f"vector of length {len(v)} in ambient dimension {ambient_dim}")
        vecs.append(v)
    rows, pivots = _rref_rows(field, vecs, ambient_dim)
    return Subspace(field, ambient_dim, rows, pivots)


def zero_subspace(field: Field, n: int) -> Subspace:
    return Subspace(field, n)


def full_space(field: Field, n: int) -> Subspace:
    return Subspace(field, n, tuple(field.unit(n, i) for i in range(n)), tuple(range(n)))


def rref(m: Matrix) -> Subspace:
    """Canonical reduced row-echelon basis of the row space of ``m``."""
    if not isinstance(m, Matrix):
        m = Matrix.from_rows(m)
    return span(m.field, m.rows, m.ncols)


def _check_compatible(a: Subspace, b: Subspace):
    if a.field != b.field:
        raise FieldMismatchError(f"{a.field} vs {b.field}")
    if a.ambient_dim != b.ambient_dim:
        raise DimensionMismatchError(f"ambient dimensions {a.ambient_dim} and {b.ambient_dim}")


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    _check_compatible(a, b)
    return span(a.field, a.rows + b.rows, a.ambient_dim)


def subspace_intersect(a: Subspace, b: Subspace) -> Subspace:
    """Zassenhaus: echelonize [[A, A], [B, 0]]; rows vanishing on the left half span A∩B."""
    _check_compatible(a, b)
    n, fld = a.ambient_dim, a.field
    stacked = [r + r for r in a.rows] + [r + fld.zeros(n) for r in b.rows]
    rows, pivots = _rref_rows(fld, stacked, 2 * n)
    return span(fld, (r[n:] for r, c in zip(rows, pivots) if c >= n), n)


def solve_in_subspace(s: Subspace, v: Sequence) -> tuple | None:
    """Coordinates of ``v`` in the echelon basis of ``s``, or ``None`` if ``v`` is not in ``s``."""
    if len(v) != s.ambient_dim:
        raise DimensionMismatchError(f"vector of length {len(v)} in ambient dimension {s.ambient_dim}")
    v = tuple(s.field.coerce(x) for x in v)
    coords = tuple(v[c] for c in s.pivots)
    if any(s.reduce(v)):
        return None
    return coords


def combine(field: Field, coeffs: Sequence, vectors: Sequence[Sequence], n: int) -> tuple:
    """``sum(c * v)`` over the field."""
    out = [0] * n
    for c, v in zip(coeffs, vectors):
        if c:
            for i, x in enumerate(v):
                if x:
                    out[i] += c * x
    return field.vector(out)


def nullspace(m: Matrix) -> Subspace:
    """``{x : m x = 0}`` as a subspace of ``field^ncols``."""
    fld, n = m.field, m.ncols
    rows, pivots = _rref_rows(fld, m.rows, n)
    piv = set(pivots)
    basis = []
    for f in (c for c in range(n) if c not in piv):
        x = [fld.zero] * n
        x[f] = fld.one
        for row, c in zip(rows, pivots):
            x[c] = fld.reduce(-row[f])
        basis.append(x)
    return span(fld, basis, n)


def left_kernel(field: Field, vectors: Sequence[Sequence], n: int) -> Subspace:
    """Coefficient vectors ``c`` with ``sum(c_i * vectors[i]) = 0``."""
    if not vectors:
        return zero_subspace(field, 0)
    return nullspace(Matrix.from_columns(field, vectors, n))


def coordinates(s: Subspace, v: Sequence) -> tuple:
    """Like :func:`solve_in_subspace` but raises when ``v`` is outside ``s``."""
    c = solve_in_subspace(s, v)
    if c is None:
        raise ValueError(f"vector {v} is not in {s}")
    return c


def complement_basis(sub: Subspace, sup: Subspace) -> tuple:
    """Rows of ``sup`` whose pivots are not pivots of ``sub``; they span a complement of sub in sup."""
    subp = set(sub.pivots)
    return tuple(r for r, c in zip(sup.rows, sup.pivots) if c not in subp)


def section_coordinates(sub: Subspace, sup: Subspace, v: Sequence) -> tuple:
    """Coordinates of ``v + sub`` in the basis of ``sup/sub`` given by :func:`complement_basis`."""
    w = sub.reduce(v)
    subp = set(sub.pivots)
    cols = [c for c in sup.pivots if c not in subp]
    if any(sup.reduce(w)):
        raise ValueError(f"vector {v} is not in {sup}")
    return tuple(w[c] for c in cols)


def is_invertible(m: Matrix) -> bool:
    return m.nrows == m.ncols and m.rank() == m.ncols


def inverse(m: Matrix) -> Matrix:
    n, fld = m.nrows, m.field
    if m.ncols != n:
        raise DimensionMismatchError("inverse of a non-square matrix")
    aug = [r + fld.unit(n, i) for i, r in enumerate(m.rows)]
    rows, pivots = _rref_rows(fld, aug, 2 * n)
    if pivots[:n] != tuple(range(n)) or len(rows) < n:
        raise ZeroDivisionError("matrix is singular")
    return Matrix(fld, tuple(r[n:] for r in rows[:n]), n)
