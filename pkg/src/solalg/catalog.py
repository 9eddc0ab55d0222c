"""Catalog text format, the built-in catalog, and the Leibniz counterexample generator.

Format (line oriented, ``#`` starts a comment, indices are 1-based)::

    format 1

    algebra r2 {
      field: Q
      kind: lie
      dim: 2
      bracket 1 2 -> 2:1
      bracket 2 1 -> 2:-1
    }

    module lam over r2 {
      dim: 1
      left 1 -> 1
      left 2 -> 0
    }

``bracket i j -> k:c, ...`` gives ``e_i e_j``; pairs not listed multiply to
zero.  Matrix rows are separated by ``;``.  A module lists every ``left``
matrix, and either no ``right`` matrices (``VL = 0``) or all of them.
Coefficients must be canonical literals: ``a/b`` in lowest terms with
``b > 1``, plain ``a`` for integers, residues ``0..p-1`` over GF(p).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from importlib import resources

from .algebra import (
    LEIBNIZ,
    LIE,
    AlgebraPresentation,
    Ideal,
    quotient,
    require_valid,
    validate,
)
from .exact_linalg import GF, QQ, Field, LiteralError, Matrix, span
from .modules import (
    ModulePresentation,
    antisymmetrize,
    split_extension,
    symmetrize,
    verify_module,
)
from .series import is_soluble, leib_ideal

FORMAT_VERSION = 1
_NAME = r"[A-Za-z_][A-Za-z0-9_]*"


class CatalogParseError(ValueError):
    def __init__(self, line: int, column: int, message: str):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line, self.column, self.message = line, column, message


@dataclass(frozen=True)
class CatalogDocument:
    format_version: int = FORMAT_VERSION
    entries: tuple = ()

    def algebras(self) -> list[AlgebraPresentation]:
        return [e for e in self.entries if isinstance(e, AlgebraPresentation)]

    def modules(self) -> list[ModulePresentation]:
        return [e for e in self.entries if isinstance(e, ModulePresentation)]

    def names(self) -> list[str]:
        return [e.name for e in self.entries]

    def get(self, name: str):
        for e in self.entries:
            if e.name == name:
                return e
        raise KeyError(name)

    def algebra(self, name: str) -> AlgebraPresentation:
        e = self.get(name)
        if not isinstance(e, AlgebraPresentation):
            raise KeyError(f"{name} is not an algebra entry")
        return e

    def module(self, name: str) -> ModulePresentation:
        e = self.get(name)
        if not isinstance(e, ModulePresentation):
            raise KeyError(f"{name} is not a module entry")
        return e


# -- parsing -----------------------------------------------------------------


@dataclass
class _Line:
    number: int
    text: str  # comment stripped, right-stripped
    indent: int


def _lines(text: str) -> list[_Line]:
    out = []
    for n, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].rstrip()
        if body.strip():
            out.append(_Line(n, body, len(body) - len(body.lstrip())))
    return out


def _col(line: _Line, token: str, start: int = 0) -> int:
    i = line.text.find(token, start)
    return (i if i >= 0 else line.indent) + 1


def _pieces(text: str, sep: str, offset: int) -> list[tuple[str, int]]:
    """Split on ``sep``; each stripped piece with its 1-based column in the line."""
    out = []
    for m in re.finditer(rf"[^{sep}]+", text):
        piece = m.group()
        lead = len(piece) - len(piece.lstrip())
        out.append((piece.strip(), offset + m.start() + lead + 1))
    return out


def _parse_index(tok: str, line: _Line, bound: int, what: str, col: int) -> int:
    if not re.fullmatch(r"[1-9][0-9]*", tok):
        raise CatalogParseError(line.number, col, f"expected a {what} index, got {tok!r}")
    i = int(tok)
    if i > bound:
        raise CatalogParseError(line.number, col, f"{what} index {i} exceeds dimension {bound}")
    return i - 1


def _parse_coeff(fld: Field, tok: str, line: _Line, col: int):
    try:
        return fld.parse(tok)
    except LiteralError as exc:
        raise CatalogParseError(line.number, col, str(exc)) from None


@dataclass
class _Stanza:
    kind: str
    name: str
    over: str | None
    header: _Line
    body: list = field(default_factory=list)


def _split_stanzas(lines: list[_Line]) -> tuple[int, list[_Stanza]]:
    if not lines:
        raise CatalogParseError(1, 1, "expected 'format <version>'")
    head = lines[0]
    m = re.fullmatch(r"\s*format\s+([0-9]+)", head.text)
    if not m:
        raise CatalogParseError(head.number, head.indent + 1, "expected 'format <version>'")
    version = int(m.group(1))
    if version != FORMAT_VERSION:
        raise CatalogParseError(head.number, _col(head, m.group(1)), f"unsupported format version {version}")
    stanzas: list[_Stanza] = []
    current = None
    for line in lines[1:]:
        s = line.text.strip()
        if current is None:
            m = re.fullmatch(rf"algebra\s+({_NAME})\s*\{{", s)
            if m:
                current = _Stanza("algebra", m.group(1), None, line)
                continue
            m = re.fullmatch(rf"module\s+({_NAME})\s+over\s+({_NAME})\s*\{{", s)
            if m:
                current = _Stanza("module", m.group(1), m.group(2), line)
                continue
            raise CatalogParseError(line.number, line.indent + 1, "expected 'algebra <name> {' or 'module <name> over <algebra> {'")
        if s == "}":
            stanzas.append(current)
            current = None
        else:
            current.body.append(line)
    if current is not None:
        raise CatalogParseError(current.header.number, current.header.indent + 1, f"stanza {current.name!r} is missing '}}'")
    return version, stanzas


def _key_values(st: _Stanza, allowed: tuple, list_keys: tuple):
    scalars: dict = {}
    listed: list = []
    for line in st.body:
        s = line.text.strip()
        m = re.fullmatch(r"([a-z]+)\s*:\s*(.*)", s)
        if m:
            key, value = m.groups()
            if key not in allowed:
                raise CatalogParseError(line.number, line.indent + 1, f"unknown field {key!r}; expected one of {', '.join(allowed)}")
            if key in scalars:
                raise CatalogParseError(line.number, line.indent + 1, f"duplicate field {key!r}")
            scalars[key] = (value.strip(), line)
            continue
        m = re.fullmatch(r"([a-z]+)\s+(.*)", s)
        if m and m.group(1) in list_keys:
            listed.append((m.group(1), m.group(2), line))
            continue
        word = s.split()[0] if s.split() else s
        expected = ", ".join([f"'{k}:'" for k in allowed] + [f"'{k} ...'" for k in list_keys])
        raise CatalogParseError(line.number, line.indent + 1, f"unknown field {word!r}; expected {expected}")
    for key in allowed:
        if key not in scalars:
            raise CatalogParseError(st.header.number, st.header.indent + 1, f"stanza {st.name!r} is missing '{key}:'")
    return scalars, listed


def _parse_dim(value: str, line: _Line) -> int:
    if not re.fullmatch(r"0|[1-9][0-9]*", value):
        raise CatalogParseError(line.number, _col(line, value), f"expected a dimension, got {value!r}")
    return int(value)


def _parse_algebra(st: _Stanza) -> AlgebraPresentation:
    scalars, listed = _key_values(st, ("field", "kind", "dim"), ("bracket",))
    fv, fline = scalars["field"]
    try:
        fld = Field.from_string(fv)
    except ValueError as exc:
        raise CatalogParseError(fline.number, _col(fline, fv), str(exc)) from None
    kv, kline = scalars["kind"]
    if kv not in (LIE, LEIBNIZ):
        raise CatalogParseError(kline.number, _col(kline, kv), f"expected 'lie' or 'leibniz', got {kv!r}")
    n = _parse_dim(*scalars["dim"])
    seen = set()
    triples = []
    for _, _, line in listed:
        m = re.fullmatch(r"\s*bracket\s+(\S+)\s+(\S+)\s*->\s*(.+)", line.text)
        if not m:
            raise CatalogParseError(line.number, line.indent + 1, "expected 'bracket i j -> k:coeff, ...'")
        i = _parse_index(m.group(1), line, n, "basis", m.start(1) + 1)
        j = _parse_index(m.group(2), line, n, "basis", m.start(2) + 1)
        if (i, j) in seen:
            raise CatalogParseError(line.number, line.indent + 1, f"duplicate bracket {i + 1} {j + 1}")
        seen.add((i, j))
        ks = set()
        for term, col in _pieces(m.group(3), ",", m.start(3)):
            tm = re.fullmatch(r"(\S+?):(\S+)", term)
            if not tm:
                raise CatalogParseError(line.number, col, f"expected 'k:coeff', got {term!r}")
            k = _parse_index(tm.group(1), line, n, "basis", col)
            if k in ks:
                raise CatalogParseError(line.number, col, f"duplicate term for e{k + 1}")
            ks.add(k)
            ccol = col + tm.start(2)
            c = _parse_coeff(fld, tm.group(2), line, ccol)
            if not c:
                raise CatalogParseError(line.number, ccol, "zero coefficients must be omitted")
            triples.append((i, j, k, c))
    return AlgebraPresentation(st.name, fld, n, kv, tuple(triples))


def _parse_matrix(fld: Field, text: str, d: int, line: _Line, offset: int) -> Matrix:
    rows = [_pieces(r, r"\s", offset + col - 1) for r, col in _pieces(text, ";", 0)]
    if len(rows) != d or any(len(r) != d for r in rows):
        raise CatalogParseError(line.number, offset + 1, f"expected a {d}x{d} matrix")
    return Matrix(fld, tuple(tuple(_parse_coeff(fld, t, line, c) for t, c in r) for r in rows), d)


def _parse_module(st: _Stanza, algebras: dict) -> ModulePresentation:
    if st.over not in algebras:
        raise CatalogParseError(st.header.number, _col(st.header, st.over), f"module references unknown algebra {st.over!r}")
    l = algebras[st.over]
    scalars, listed = _key_values(st, ("dim",), ("left", "right"))
    d = _parse_dim(*scalars["dim"])
    if d < 1:
        line = scalars["dim"][1]
        raise CatalogParseError(line.number, line.indent + 1, "module dimension must be at least 1")
    mats = {"left": {}, "right": {}}
    for side, _, line in listed:
        m = re.fullmatch(r"\s*[a-z]+\s+(\S+)\s*->\s*(.+)", line.text)
        if not m:
            raise CatalogParseError(line.number, line.indent + 1, f"expected '{side} i -> matrix rows'")
        i = _parse_index(m.group(1), line, l.dim, "basis", m.start(1) + 1)
        if i in mats[side]:
            raise CatalogParseError(line.number, line.indent + 1, f"duplicate {side} {i + 1}")
        mats[side][i] = _parse_matrix(l.field, m.group(2), d, line, m.start(2))
    if len(mats["left"]) != l.dim:
        missing = min(set(range(l.dim)) - set(mats["left"]))
        raise CatalogParseError(st.header.number, st.header.indent + 1, f"module {st.name!r} is missing 'left {missing + 1}'")
    right = None
    if mats["right"]:
        if len(mats["right"]) != l.dim:
            missing = min(set(range(l.dim)) - set(mats["right"]))
            raise CatalogParseError(st.header.number, st.header.indent + 1, f"module {st.name!r} is missing 'right {missing + 1}'")
        right = tuple(mats["right"][i] for i in range(l.dim))
    left = tuple(mats["left"][i] for i in range(l.dim))
    return ModulePresentation(st.name, l, d, left, right)


def parse_catalog(text: str) -> CatalogDocument:
    """Parse catalog text; errors carry line and column."""
    version, stanzas = _split_stanzas(_lines(text))
    algebras: dict = {}
    names: set = set()
    entries = []
    for st in stanzas:
        if st.name in names:
            raise CatalogParseError(st.header.number, _col(st.header, st.name), f"duplicate entry name {st.name!r}")
        names.add(st.name)
        if st.kind == "algebra":
            a = _parse_algebra(st)
            algebras[a.name] = a
            entries.append(a)
        else:
            entries.append(_parse_module(st, algebras))
    return CatalogDocument(version, tuple(entries))


# -- emitting ----------------------------------------------------------------


def _emit_algebra(a: AlgebraPresentation) -> list[str]:
    out = [f"algebra {a.name} {{", f"  field: {a.field}", f"  kind: {a.kind}", f"  dim: {a.dim}"]
    by_pair: dict = {}
    for i, j, k, c in a.brackets:
        by_pair.setdefault((i, j), []).append((k, c))
    for (i, j), terms in sorted(by_pair.items()):
        body = ", ".join(f"{k + 1}:{a.field.format(c)}" for k, c in sorted(terms))
        out.append(f"  bracket {i + 1} {j + 1} -> {body}")
    out.append("}")
    return out


def _emit_matrix(fld: Field, m: Matrix) -> str:
    return "; ".join(" ".join(fld.format(x) for x in r) for r in m.rows)


def _emit_module(m: ModulePresentation) -> list[str]:
    fld = m.field
    out = [f"module {m.name} over {m.algebra.name} {{", f"  dim: {m.dim_v}"]
    out += [f"  left {i + 1} -> {_emit_matrix(fld, a)}" for i, a in enumerate(m.left)]
    if m.right is not None:
        out += [f"  right {i + 1} -> {_emit_matrix(fld, a)}" for i, a in enumerate(m.right)]
    out.append("}")
    return out


def emit_catalog(doc: CatalogDocument) -> str:
    """Canonical text; ``parse_catalog(emit_catalog(d)) == d``."""
    blocks = [[f"format {doc.format_version}"]]
    for e in doc.entries:
        blocks.append(_emit_algebra(e) if isinstance(e, AlgebraPresentation) else _emit_module(e))
    return "\n\n".join("\n".join(b) for b in blocks) + "\n"


def check_document(doc: CatalogDocument) -> list[str]:
    """Semantic problems: invalid presentations, modules over algebras not in the document."""
    problems = []
    algebras = {a.name: a for a in doc.algebras()}
    for e in doc.entries:
        if isinstance(e, AlgebraPresentation):
            rep = validate(e)
            if not rep.valid:
                problems.append(str(rep))
        else:
            if algebras.get(e.algebra.name) != e.algebra:
                problems.append(f"{e.name}: algebra {e.algebra.name} not in catalog")
            rep = verify_module(e)
            if not rep.valid:
                problems.append(str(rep))
    return problems


# -- built-in catalog --------------------------------------------------------


def _lie(name, fld, dim, pairs):
    """Lie algebra from ``{(i, j): {k: c}}`` (1-based) for i < j; the opposite entries are filled in."""
    triples = []
    for (i, j), terms in pairs.items():
        for k, c in terms.items():
            triples.append((i - 1, j - 1, k - 1, c))
            triples.append((j - 1, i - 1, k - 1, -c))
    return AlgebraPresentation(name, fld, dim, LIE, tuple(triples))


def _matrices(fld, mats):
    return tuple(Matrix.from_rows(m, fld) for m in mats)


def build_builtin_document() -> CatalogDocument:
    """The built-in catalog, constructed from first principles."""
    F2, F3 = GF(2), GF(3)
    ab1 = AlgebraPresentation.abelian(QQ, 1, "ab1")
    ab2 = AlgebraPresentation.abelian(QQ, 2, "ab2")
    r2 = _lie("r2", QQ, 2, {(1, 2): {2: 1}})
    h3 = _lie("h3", QQ, 3, {(1, 2): {3: 1}})
    sl2 = _lie("sl2", QQ, 3, {(1, 2): {2: 2}, (1, 3): {3: -2}, (2, 3): {1: 1}})
    cyc2 = AlgebraPresentation("cyc2", QQ, 2, LEIBNIZ, ((0, 0, 1, 1),))
    lam = ModulePresentation("lam", r2, 1, _matrices(QQ, [[[1]], [[0]]]))
    triv = ModulePresentation("triv", r2, 1, _matrices(QQ, [[[0]], [[0]]]))
    rot = ModulePresentation("rot", ab1, 2, _matrices(QQ, [[[0, -1], [1, 0]]]))
    rot3, _ = split_extension(ab1, symmetrize(rot), "rot3")
    p3, _ = split_extension(r2, antisymmetrize(lam), "p3")

    r2_gf2 = _lie("r2_gf2", F2, 2, {(1, 2): {2: 1}})
    w = ModulePresentation("w", r2_gf2, 2, _matrices(F2, [[[0, 0], [0, 1]], [[0, 1], [1, 0]]]))
    e4_gf2, _ = split_extension(r2_gf2, symmetrize(w), "e4_gf2")
    p4_gf2, _ = split_extension(r2_gf2, antisymmetrize(w), "p4_gf2")
    h3_gf2 = _lie("h3_gf2", F2, 3, {(1, 2): {3: 1}})

    r2_gf3 = _lie("r2_gf3", F3, 2, {(1, 2): {2: 1}})
    h3_gf3 = _lie("h3_gf3", F3, 3, {(1, 2): {3: 1}})
    lam_gf3 = ModulePresentation("lam_gf3", r2_gf3, 1, _matrices(F3, [[[1]], [[0]]]))
    p3_gf3, _ = split_extension(r2_gf3, antisymmetrize(lam_gf3), "p3_gf3")
    cyc2_gf3 = AlgebraPresentation("cyc2_gf3", F3, 2, LEIBNIZ, ((0, 0, 1, 1),))
    entries = (
        ab1, ab2, r2, h3, sl2, rot3, cyc2, p3, lam, triv, rot,
        r2_gf2, h3_gf2, e4_gf2, p4_gf2, w,
        r2_gf3, h3_gf3, p3_gf3, cyc2_gf3, lam_gf3,
    )
    return CatalogDocument(FORMAT_VERSION, entries)


def builtin_catalog_text() -> str:
    return resources.files("solalg").joinpath("data/builtin.cat").read_text()


def load_builtin() -> CatalogDocument:
    return parse_catalog(builtin_catalog_text())


# -- counterexample generator ------------------------------------------------


class CounterexampleError(ValueError):
    pass


@dataclass
class Counterexample:
    algebra: AlgebraPresentation
    module_ideal: Ideal
    checks: dict  # check name -> bool

    @property
    def verified(self) -> bool:
        return all(self.checks.values())

    def text(self) -> str:
        lines = emit_catalog(CatalogDocument(FORMAT_VERSION, (self.algebra,))).rstrip("\n").split("\n")
        lines.append("")
        lines += [f"# check {name}: {'pass' if ok else 'FAIL'}" for name, ok in self.checks.items()]
        return "\n".join(lines) + "\n"


def generate_counterexample(base: AlgebraPresentation, module: ModulePresentation, name: str | None = None) -> Counterexample:
    """``P = V ⋊ L`` with ``VL = 0``: a non-Lie Leibniz algebra with ``P/Leib(P)`` equal to ``L``.

    Needs a soluble Lie ``base`` and a left module with ``L.V = V``; for a
    module with ``0 != L.V`` strictly inside ``V`` the Leib ideal of the
    extension is ``L.V``, not ``V``, so such input is rejected.
    """
    require_valid(base)
    if base.kind != LIE:
        raise CounterexampleError(f"base {base.name} must be a Lie algebra")
    if not is_soluble(base):
        raise CounterexampleError(f"base {base.name} is not soluble")
    if not module.algebra.structure_equal(base):
        raise CounterexampleError(f"module {module.name} is not over {base.name}")
    rep = verify_module(antisymmetrize(module))
    if not rep.valid:
        raise CounterexampleError(f"module {module.name} is not a left module: {rep}")
    d = module.dim_v
    image = _image_of_action(module)
    if image == 0:
        raise CounterexampleError(f"module {module.name} is trivial (L.V = 0); the extension would be a Lie algebra")
    if image < d:
        raise CounterexampleError(
            f"module {module.name} has L.V of dimension {image} < dim V = {d}; "
            "the Leib ideal of the extension would be L.V, not V"
        )
    p, v = split_extension(base, antisymmetrize(module), name or f"{base.name}_{module.name}_leib")
    q, _ = quotient(p, v)
    checks = {
        "not-lie": not validate(p, LIE).valid,
        "valid-leibniz": validate(p, LEIBNIZ).valid,
        "leib-equals-module": leib_ideal(p).space == v.space,
        "quotient-equals-base": q.structure_equal(base),
    }
    return Counterexample(p, v, checks)


def _image_of_action(m: ModulePresentation) -> int:
    cols = [c for a in m.left for c in a.columns()]
    return span(m.field, cols, m.dim_v).dim
