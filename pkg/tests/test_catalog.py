import pytest
from hypothesis import given, settings, strategies as st

from solalg.algebra import LEIBNIZ, LIE, validate
from solalg.catalog import (
    CatalogDocument,
    CatalogParseError,
    CounterexampleError,
    build_builtin_document,
    builtin_catalog_text,
    check_document,
    emit_catalog,
    generate_counterexample,
    parse_catalog,
)
from solalg.exact_linalg import GF, QQ
from solalg.generators import random_corpus
from solalg.modules import ModulePresentation
from solalg.exact_linalg import Matrix

R2_TEXT = """format 1
# a comment line

algebra r2 {
  field: Q
  kind: lie   # trailing comment
  dim: 2
  bracket 1 2 -> 2:1
  bracket 2 1 -> 2:-1
}
"""


def test_empty_catalog():
    doc = parse_catalog("format 1\n")
    assert doc == CatalogDocument(1, ())
    assert emit_catalog(doc) == "format 1\n"


def test_builtin_roundtrip_is_bit_exact():
    text = builtin_catalog_text()
    doc = parse_catalog(text)
    assert emit_catalog(doc) == text
    assert doc == build_builtin_document()
    names = set(doc.names())
    assert {"ab1", "r2", "h3", "r2_gf2", "e4_gf2", "p3", "sl2"} <= names
    assert check_document(doc) == []


def test_parse_small_document(builtin):
    doc = parse_catalog(R2_TEXT)
    assert doc.algebra("r2") == builtin.algebra("r2")
    # emit canonicalizes (drops comments and blank-line layout)
    assert emit_catalog(parse_catalog(emit_catalog(doc))) == emit_catalog(doc)


def test_p3_emit_order(builtin):
    text = emit_catalog(CatalogDocument(1, (builtin.algebra("p3"),)))
    lines = [l.strip() for l in text.splitlines() if l.strip().startswith("bracket")]
    assert lines == ["bracket 2 1 -> 1:1", "bracket 2 3 -> 3:1", "bracket 3 2 -> 3:-1"]


def test_gf3_residues(builtin):
    text = emit_catalog(CatalogDocument(1, (builtin.algebra("r2_gf3"),)))
    assert "bracket 2 1 -> 2:2" in text and "-" not in text.split("dim")[1].replace("->", "")


def _expect_error(text, line=None, fragment=""):
    with pytest.raises(CatalogParseError) as info:
        parse_catalog(text)
    if line is not None:
        assert info.value.line == line
    assert fragment in str(info.value)
    assert info.value.column >= 1
    return info.value


def test_rejects_noncanonical_coefficient():
    err = _expect_error(R2_TEXT.replace("2:1\n", "2:2/4\n", 1), 8, "lowest terms")
    assert err.column == R2_TEXT.splitlines()[7].index("2:1") + 3


def test_rejects_zero_term():
    err = _expect_error(R2_TEXT.replace("2:-1", "2:-1, 1:0"), 9, "zero")
    assert err.column == len("  bracket 2 1 -> 2:-1, 1:") + 1


def test_rejects_bad_fields():
    _expect_error(R2_TEXT.replace("field: Q", "field: GF(4)"), 5, "not prime")
    _expect_error(R2_TEXT.replace("field: Q", "field: R"), 5, "unknown field")
    _expect_error(R2_TEXT.replace("kind: lie", "kind: jordan"), 6, "lie")
    _expect_error(R2_TEXT.replace("dim: 2", "dim: 2\n  colour: red"), 8, "unknown field")


def test_rejects_structure_errors():
    _expect_error("", 1, "format")
    _expect_error("format 2\n", 1, "version")
    _expect_error(R2_TEXT.rstrip("}\n") + "\n", 4, "missing '}'")
    _expect_error(R2_TEXT + "\n" + R2_TEXT.split("\n", 1)[1], None, "duplicate entry")
    _expect_error(R2_TEXT.replace("bracket 1 2 -> 2:1", "bracket 1 3 -> 2:1"), 8, "exceeds")
    _expect_error(R2_TEXT.replace("bracket 2 1 -> 2:-1", "bracket 1 2 -> 1:1"), 9, "duplicate bracket")
    _expect_error(R2_TEXT.replace("  dim: 2\n", ""), 4, "missing 'dim:'")
    _expect_error(R2_TEXT + "\nmodule m over nope {\n  dim: 1\n}\n", 12, "unknown algebra")


def test_module_stanzas():
    base = R2_TEXT + "\nmodule lam over r2 {\n  dim: 1\n  left 1 -> 1\n  left 2 -> 0\n}\n"
    doc = parse_catalog(base)
    m = doc.module("lam")
    assert m.right is None and m.left[0].rows == ((1,),)
    _expect_error(base.replace("  left 2 -> 0\n", ""), 12, "missing 'left 2'")
    _expect_error(base.replace("left 2 -> 0\n", "left 2 -> 0\n  right 1 -> 1\n"), 12, "missing 'right 2'")
    _expect_error(base.replace("left 1 -> 1", "left 1 -> 1 0"), 14, "1x1 matrix")
    err = _expect_error(base.replace("left 2 -> 0", "left 2 -> 1/1"), 15, "denominator")
    assert err.column == len("  left 2 -> ") + 1


def test_parsed_invalid_algebra_is_reported_not_rejected():
    doc = parse_catalog(R2_TEXT.replace("2:-1", "2:1"))
    assert check_document(doc)


def test_counterexample_r2_lambda(builtin):
    ce = generate_counterexample(builtin.algebra("r2"), builtin.module("lam"), "p3")
    assert ce.algebra == builtin.algebra("p3")
    assert ce.verified and set(ce.checks) == {"not-lie", "valid-leibniz", "leib-equals-module", "quotient-equals-base"}
    assert ce.text().startswith(emit_catalog(CatalogDocument(1, (ce.algebra,))))


def test_counterexample_gf2(builtin):
    ce = generate_counterexample(builtin.algebra("r2_gf2"), builtin.module("w"), "p4_gf2")
    assert ce.verified and ce.algebra.dim == 4
    assert ce.algebra == builtin.algebra("p4_gf2")


def test_counterexample_rejections(builtin):
    r2 = builtin.algebra("r2")
    with pytest.raises(CounterexampleError, match="trivial"):
        generate_counterexample(r2, builtin.module("triv"))
    with pytest.raises(CounterexampleError, match="not soluble"):
        sl2 = builtin.algebra("sl2")
        generate_counterexample(sl2, ModulePresentation("z", sl2, 1, (Matrix.zero(QQ, 1, 1),) * 3))
    with pytest.raises(CounterexampleError, match="Lie"):
        generate_counterexample(builtin.algebra("p3"), builtin.module("lam"))
    # L.V is a proper nonzero submodule: x acts by a nilpotent Jordan block
    jordan = ModulePresentation("jordan", r2, 2, (Matrix.from_rows([[0, 1], [0, 0]], QQ), Matrix.zero(QQ, 2, 2)))
    with pytest.raises(CounterexampleError, match="L.V"):
        generate_counterexample(r2, jordan)


@settings(max_examples=15)
@given(st.integers(0, 100_000), st.sampled_from([0, 2, 3]))
def test_emit_parse_roundtrip_random(seed, p):
    fld = GF(p) if p else QQ
    algebras = tuple(random_corpus(fld, 4, 4, seed, leibniz_share=0.5))
    doc = CatalogDocument(1, algebras)
    text = emit_catalog(doc)
    again = parse_catalog(text)
    assert again == doc and emit_catalog(again) == text
    for a in again.algebras():
        assert validate(a).valid and a.kind in (LIE, LEIBNIZ)
