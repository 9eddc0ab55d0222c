"""Batch verification over a catalog document with deterministic reports."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .algebra import (
    LEIBNIZ,
    LIE,
    AlgebraPresentation,
    as_leibniz,
    direct_sum,
    is_ideal,
    morphism,
    product_subspaces,
    quotient,
    summand_spaces,
    validate,
)
from .catalog import CatalogDocument
from .exact_linalg import Matrix
from .formations import (
    FormationSpec,
    MembershipCertificate,
    Soluble,
    Target,
    char0_abelian_quotient_check,
    evaluate_certificate,
    fn_theorem_check,
    parse_formation,
)
from .modules import ModulePresentation, classify_dichotomy, verify_module
from .oracles import max_nilpotent_ideal
from .series import (
    chief_series,
    derived_series,
    is_soluble,
    leib_ideal,
    lower_central_series,
    nilradical,
)

CHECKS = (
    "validate",
    "series",
    "nilradical-oracle",
    "char0-abelian",
    "fn-theorem",
    "leib-properties",
    "dichotomy",
    "certificate",
)
ORACLE_MAX_DIM = 4


class UnknownCheckError(ValueError):
    pass


@dataclass(frozen=True)
class CheckResult:
    entry: str
    check: str
    passed: bool
    details: str
    transcript: tuple = ()  # exact values, filled on failure

    def to_dict(self) -> dict:
        d = {"entry": self.entry, "check": self.check, "passed": self.passed, "details": self.details}
        if self.transcript:
            d["transcript"] = list(self.transcript)
        return d


@dataclass
class BatchReport:
    checks: tuple
    results: list = field(default_factory=list)

    @property
    def passed(self) -> int:
        return sum(r.passed for r in self.results)

    @property
    def failed(self) -> int:
        return len(self.results) - self.passed

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def text(self) -> str:
        lines = [f"checks: {', '.join(self.checks)}"]
        for r in self.results:
            lines.append(f"{'PASS' if r.passed else 'FAIL'} {r.entry} {r.check}: {r.details}")
            lines += [f"    {t}" for t in r.transcript]
        lines.append(f"summary: {len(self.results)} run, {self.passed} passed, {self.failed} failed")
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        doc = {
            "checks": list(self.checks),
            "results": [r.to_dict() for r in self.results],
            "summary": {"run": len(self.results), "passed": self.passed, "failed": self.failed},
        }
        return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def parse_check(name: str) -> tuple[str, FormationSpec | None]:
    base, _, arg = name.partition(":")
    if base not in CHECKS:
        raise UnknownCheckError(f"unknown check {name!r}; known: {', '.join(CHECKS)}")
    if base == "fn-theorem":
        return base, parse_formation(arg or "abelian")
    if arg:
        raise UnknownCheckError(f"check {base!r} takes no argument")
    return base, None


# -- individual checks: each returns None when not applicable ---------------


def _check_validate(e, _):
    rep = verify_module(e) if isinstance(e, ModulePresentation) else validate(e)
    kind = "module" if isinstance(e, ModulePresentation) else e.kind
    return rep.valid, f"valid {kind}" if rep.valid else "invalid", tuple(str(v) for v in rep.violations)


def _check_series(l: AlgebraPresentation, _):
    ds, ls = derived_series(l), lower_central_series(l)
    bad = []
    for label, s in (("derived", ds), ("lower central", ls)):
        for a, b in zip(s.terms, s.terms[1:]):
            if not (b < a and is_ideal(l, b)):
                bad.append(f"{label} term {b} is not a proper ideal of the previous term {a}")
    soluble = ds.reaches_zero
    detail = f"derived {list(ds.dims)} lower-central {list(ls.dims)} soluble={soluble} nilpotent={ls.reaches_zero}"
    return not bad, detail, tuple(bad)


def _check_nilradical(l: AlgebraPresentation, _):
    if not l.field.p or l.dim > ORACLE_MAX_DIM or not is_soluble(l):
        return None
    n = nilradical(l).space
    m = max_nilpotent_ideal(l)
    ok = n == m
    return ok, f"nilradical dim {n.dim}", () if ok else (f"nilradical {n}", f"oracle {m}")


def _check_char0(l: AlgebraPresentation, _):
    if l.field.p or l.kind != LIE or not is_soluble(l):
        return None
    r = char0_abelian_quotient_check(l)
    return r.passed, f"factors {list(r.factor_dims)}", () if r.passed else (str(r),)


def _check_fn(l: AlgebraPresentation, inner):
    if not l.field.p or not is_soluble(l):
        return None
    r = fn_theorem_check(l, inner)
    return r.agree, f"loc({inner})={r.loc_member} nilpotent-by({inner})={r.nilpotent_by_member}", () if r.agree else (str(r),)


def _check_leib(l: AlgebraPresentation, _):
    if l.kind != LEIBNIZ:
        return None
    li = leib_ideal(l).space
    bad = []
    if not product_subspaces(l, li, l.full).is_zero():
        bad.append(f"Leib(L)L = {product_subspaces(l, li, l.full)}")
    if not product_subspaces(l, li, li).is_zero():
        bad.append("Leib(L) is not abelian")
    if not is_ideal(l, li):
        bad.append("Leib(L) is not an ideal")
    q, _ = quotient(l, li)
    rep = validate(q, LIE)
    if not rep.valid:
        bad.append(f"L/Leib(L) is not Lie: {rep}")
    return not bad, f"Leib dim {li.dim}", tuple(bad)


def _check_dichotomy(l: AlgebraPresentation, _):
    if l.kind != LEIBNIZ or not is_soluble(l):
        return None
    labels, bad = [], []
    for j, f in enumerate(chief_series(l).factors, start=1):
        try:
            labels.append(classify_dichotomy(f))
        except ValueError as exc:
            bad.append(f"factor {j}: {exc}")
            labels.append("error")
    bad += [f"factor {j + 1} is neither" for j, x in enumerate(labels) if x == "neither"]
    return not bad, f"factors {labels}", tuple(bad)


def _check_certificate(p: AlgebraPresentation, _):
    """Certificate for ``(P/Leib P) ⊕ P`` with K0 = soluble and P declared."""
    if p.kind != LEIBNIZ or not is_soluble(p):
        return None
    lie_part, _ = quotient(p, leib_ideal(p), f"{p.name}_lie")
    total = direct_sum(as_leibniz(lie_part), p, f"{p.name}_cert")
    first, second = summand_spaces(as_leibniz(lie_part), p)
    # quotient by the first summand is a copy of P on the same coordinates
    q, _ = quotient(total, first)
    witness = morphism(q, p, Matrix.identity(p.field, p.dim))
    cert = MembershipCertificate(total, (second, first), (Target(), Target(0, witness)), (p,))
    res = evaluate_certificate(cert, Soluble())
    detail = f"{'accepted' if res.accepted else 'rejected'}; L/Leib(L) in soluble: {res.leib_quotient_in_k0}"
    return res.accepted, detail, tuple(res.reasons)


_RUNNERS = {
    "validate": _check_validate,
    "series": _check_series,
    "nilradical-oracle": _check_nilradical,
    "char0-abelian": _check_char0,
    "fn-theorem": _check_fn,
    "leib-properties": _check_leib,
    "dichotomy": _check_dichotomy,
    "certificate": _check_certificate,
}


def run_batch(doc: CatalogDocument, checks: list[str]) -> BatchReport:
    """Run the named checks on every applicable entry; results sorted by entry name, then check order."""
    parsed = [(name, *parse_check(name)) for name in checks]
    report = BatchReport(tuple(checks))
    for e in sorted(doc.entries, key=lambda x: x.name):
        is_module = isinstance(e, ModulePresentation)
        valid = (verify_module(e) if is_module else validate(e)).valid
        for label, base, arg in parsed:
            if base != "validate" and (is_module or not valid):
                continue
            out = _RUNNERS[base](e, arg)
            if out is None:
                continue
            ok, details, transcript = out
            report.results.append(CheckResult(e.name, label, ok, details, transcript if not ok else ()))
    return report
