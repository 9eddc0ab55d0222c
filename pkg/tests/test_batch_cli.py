import json

import pytest

from solalg.batch import UnknownCheckError, run_batch
from solalg.catalog import builtin_catalog_text, parse_catalog
from solalg.cli import main

ALL_CHECKS = [
    "validate", "series", "nilradical-oracle", "char0-abelian", "fn-theorem:abelian",
    "leib-properties", "dichotomy", "certificate",
]

BROKEN = """format 1

algebra bad {
  field: Q
  kind: lie
  dim: 2
  bracket 1 2 -> 2:1
  bracket 2 1 -> 2:1
}
"""


def test_validate_on_builtins(builtin):
    report = run_batch(builtin, ["validate"])
    assert report.ok and len(report.results) == len(builtin.entries)


def test_char0_runs_only_on_rational_lie(builtin):
    report = run_batch(builtin, ["char0-abelian"])
    assert report.ok and report.results
    for r in report.results:
        a = builtin.algebra(r.entry)
        assert a.field.p == 0 and a.kind == "lie"


def test_fn_theorem_on_prime_fields(builtin):
    report = run_batch(builtin, ["fn-theorem:abelian"])
    assert report.ok
    assert {builtin.algebra(r.entry).field.p for r in report.results} == {2, 3}


def test_all_checks_pass_and_are_sorted(builtin):
    report = run_batch(builtin, ALL_CHECKS)
    assert report.ok, report.text()
    names = [r.entry for r in report.results]
    assert names == sorted(names)


def test_reports_are_deterministic(builtin):
    a, b = run_batch(builtin, ALL_CHECKS), run_batch(parse_catalog(builtin_catalog_text()), ALL_CHECKS)
    assert a.text() == b.text() and a.to_json() == b.to_json()
    doc = json.loads(a.to_json())
    assert doc["summary"]["failed"] == 0


def test_unknown_check(builtin):
    with pytest.raises(UnknownCheckError):
        run_batch(builtin, ["frobnicate"])
    with pytest.raises(UnknownCheckError):
        run_batch(builtin, ["validate:x"])


def test_failure_transcript():
    report = run_batch(parse_catalog(BROKEN), ["validate", "series"])
    assert not report.ok and report.failed == 1
    assert report.results[0].transcript == ("anticommutativity at (1, 2)",)
    assert "FAIL bad validate" in report.text()


# -- CLI ---------------------------------------------------------------------


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_cli_validate_builtin(capsys):
    code, out, _ = run(capsys, "validate")
    assert code == 0 and "p3: valid leibniz" in out


def test_cli_validate_failure(tmp_path, capsys):
    path = tmp_path / "bad.cat"
    path.write_text(BROKEN)
    code, out, _ = run(capsys, "validate", str(path))
    assert code == 1 and "INVALID" in out


def test_cli_input_errors(tmp_path, capsys):
    path = tmp_path / "bad.cat"
    path.write_text(BROKEN.replace("2:1\n", "2:2/4\n", 1))
    code, _, err = run(capsys, "info", str(path))
    assert code == 2 and "line 7, column 20" in err
    assert run(capsys, "info", str(tmp_path / "missing.cat"))[0] == 2
    assert run(capsys, "info", "--entry", "nope")[0] == 2
    assert run(capsys, "check", "--formation", "loc(")[0] == 2
    assert run(capsys, "batch", "--checks", "nope")[0] == 2
    assert run(capsys, "counterexample", "--base", "r2", "--module", "triv")[0] == 2


def test_cli_duplicate_names_across_files(tmp_path, capsys):
    path = tmp_path / "a.cat"
    path.write_text(builtin_catalog_text())
    assert run(capsys, "validate", str(path), str(path))[0] == 2


@pytest.mark.parametrize(
    "verb,extra,needle",
    [
        ("info", ["-e", "p3"], "Leib dim 1"),
        ("series", ["-e", "h3"], "derived dims [3, 1, 0]"),
        ("nilradical", ["-e", "e4_gf2"], "nilradical dim 2 = span{(1,0,0,0), (0,1,0,0)}"),
        ("chief-series", ["-e", "p3"], "antisymmetric"),
        ("leib", ["-e", "p3"], "span{(1,0,0)}"),
        ("check", ["--formation", "supersoluble", "-e", "r2"], "r2: in supersoluble"),
        ("fn-check", ["--inner", "abelian", "-e", "e4_gf2"], "agree=True"),
    ],
)
def test_cli_verbs(capsys, verb, extra, needle):
    code, out, _ = run(capsys, verb, *extra)
    assert code == 0 and needle in out


def test_cli_check_reports_non_membership(capsys):
    code, out, _ = run(capsys, "check", "--formation", "supersoluble", "-e", "e4_gf2")
    assert code == 1 and "not in supersoluble" in out


def test_cli_counterexample_output_parses(tmp_path, capsys):
    out_path = tmp_path / "p.cat"
    code, _, _ = run(capsys, "counterexample", "--base", "r2_gf2", "--module", "w", "--name", "p4", "--output", str(out_path))
    assert code == 0
    doc = parse_catalog(out_path.read_text())
    assert doc.algebra("p4").kind == "leibniz"


def test_cli_batch_json_is_byte_identical(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    checks = ",".join(ALL_CHECKS)
    assert main(["batch", "--checks", checks, "--format", "json", "-o", str(a)]) == 0
    assert main(["batch", "--checks", checks, "--format", "json", "-o", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
    assert json.loads(a.read_text())["summary"]["failed"] == 0
