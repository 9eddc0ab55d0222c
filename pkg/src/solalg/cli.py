"""Command line entry point: ``solalg <verb> [catalog ...] [options]``.

Exit codes: 0 everything passed, 1 a check failed, 2 bad input.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .algebra import LEIBNIZ, AlgebraPresentation, validate
from .batch import CHECKS, UnknownCheckError, run_batch
from .catalog import (
    CatalogDocument,
    CatalogParseError,
    CounterexampleError,
    generate_counterexample,
    load_builtin,
    parse_catalog,
)
from .formations import (
    FormationSyntaxError,
    formation_membership,
    fn_theorem_check,
    parse_formation,
)
from .modules import ModuleError, classify_dichotomy, verify_module
from .series import (
    NotSolubleError,
    chief_series,
    derived_series,
    is_nilpotent,
    is_soluble,
    leib_ideal,
    lower_central_series,
    nilradical,
)

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def load_documents(paths: list[str]) -> CatalogDocument:
    if not paths:
        return load_builtin()
    entries, seen = [], set()
    for p in paths:
        try:
            text = Path(p).read_text()
        except OSError as exc:
            raise InputError(f"{p}: {exc.strerror}") from None
        try:
            doc = parse_catalog(text)
        except CatalogParseError as exc:
            raise InputError(f"{p}: {exc}") from None
        for e in doc.entries:
            if e.name in seen:
                raise InputError(f"{p}: duplicate entry name {e.name!r} across catalogs")
            seen.add(e.name)
            entries.append(e)
    return CatalogDocument(entries=tuple(entries))


def _select_algebras(doc: CatalogDocument, names: list[str] | None) -> list[AlgebraPresentation]:
    if not names:
        return doc.algebras()
    out = []
    for n in names:
        try:
            out.append(doc.algebra(n))
        except KeyError as exc:
            raise InputError(f"unknown algebra entry {exc.args[0]!r}") from None
    return out


def _fmt_space(s) -> str:
    return str(s)


# -- verbs: each returns (lines, exit code) -----------------------------------


def cmd_validate(doc, args):
    lines, code = [], EXIT_OK
    names = set(args.entry or doc.names())
    unknown = names - set(doc.names())
    if unknown:
        raise InputError(f"unknown entry {sorted(unknown)[0]!r}")
    for e in doc.entries:
        if e.name not in names:
            continue
        if isinstance(e, AlgebraPresentation):
            rep = validate(e)
            label = e.kind
        else:
            rep = verify_module(e)
            label = f"module over {e.algebra.name}"
        lines.append(f"{e.name}: {'valid' if rep.valid else 'INVALID'} {label}")
        lines += [f"  {v}" for v in rep.violations]
        if not rep.valid:
            code = EXIT_FAIL
    return lines, code


def cmd_info(doc, args):
    lines = []
    for a in _select_algebras(doc, args.entry):
        valid = validate(a).valid
        lines.append(f"{a.name}: field {a.field}, kind {a.kind}, dim {a.dim}, {len(a.brackets)} nonzero structure constants")
        if not valid:
            lines.append("  invalid presentation")
            continue
        lines.append(f"  soluble {is_soluble(a)}, nilpotent {is_nilpotent(a)}")
        if a.kind == LEIBNIZ:
            lines.append(f"  Leib dim {leib_ideal(a).dim}")
    return lines, EXIT_OK


def cmd_series(doc, args):
    lines = []
    for a in _valid(_select_algebras(doc, args.entry), lines):
        ds, ls = derived_series(a), lower_central_series(a)
        lines.append(f"{a.name}: derived dims {list(ds.dims)}, lower central dims {list(ls.dims)}")
        for j, t in enumerate(ds.terms):
            lines.append(f"  L^({j}) = {_fmt_space(t)}")
        for j, t in enumerate(ls.terms, start=1):
            lines.append(f"  L^{j} = {_fmt_space(t)}")
    return lines, EXIT_OK


def _valid(algebras, lines):
    for a in algebras:
        if validate(a).valid:
            yield a
        else:
            lines.append(f"{a.name}: skipped, invalid presentation")


def _soluble(algebras, lines):
    for a in _valid(algebras, lines):
        if is_soluble(a):
            yield a
        else:
            lines.append(f"{a.name}: skipped, not soluble")


def cmd_nilradical(doc, args):
    lines = []
    for a in _soluble(_select_algebras(doc, args.entry), lines):
        n = nilradical(a)
        lines.append(f"{a.name}: nilradical dim {n.dim} = {_fmt_space(n.space)}")
    return lines, EXIT_OK


def cmd_chief(doc, args):
    lines = []
    for a in _soluble(_select_algebras(doc, args.entry), lines):
        cs = chief_series(a)
        lines.append(f"{a.name}: chief factor dims {list(cs.factor_dims)}")
        for j, (f, c) in enumerate(zip(cs.factors, cs.centralizers), start=1):
            kind = f" {classify_dichotomy(f)}" if a.kind == LEIBNIZ else ""
            lines.append(f"  I_{j} = {_fmt_space(cs.ideals[j])}; factor dim {f.dim_v}{kind}; centralizer {_fmt_space(c)}")
    return lines, EXIT_OK


def cmd_leib(doc, args):
    lines = []
    for a in _valid(_select_algebras(doc, args.entry), lines):
        li = leib_ideal(a)
        lines.append(f"{a.name}: Leib dim {li.dim} = {_fmt_space(li.space)}")
    return lines, EXIT_OK


def cmd_check(doc, args):
    spec = parse_formation(args.formation)
    lines, code = [], EXIT_OK
    for a in _valid(_select_algebras(doc, args.entry), lines):
        try:
            member = formation_membership(a, spec)
        except NotSolubleError:
            lines.append(f"{a.name}: {spec} undefined, not soluble")
            continue
        lines.append(f"{a.name}: {'in' if member else 'not in'} {spec}")
        if not member:
            code = EXIT_FAIL
    return lines, code


def cmd_fn(doc, args):
    inner = parse_formation(args.inner)
    lines, code = [], EXIT_OK
    for a in _soluble(_select_algebras(doc, args.entry), lines):
        r = fn_theorem_check(a, inner)
        lines.append(str(r))
        if not r.agree and not r.informational:
            code = EXIT_FAIL
    return lines, code


def cmd_counterexample(doc, args):
    try:
        base, mod = doc.algebra(args.base), doc.module(args.module)
    except KeyError as exc:
        raise InputError(f"unknown entry: {exc.args[0]}") from None
    try:
        ce = generate_counterexample(base, mod, args.name)
    except (CounterexampleError, ModuleError) as exc:
        raise InputError(str(exc)) from None
    return ce.text().rstrip("\n").split("\n"), EXIT_OK if ce.verified else EXIT_FAIL


def cmd_batch(doc, args):
    checks = [c.strip() for c in args.checks.split(",") if c.strip()]
    report = run_batch(doc, checks)
    text = report.to_json() if args.format == "json" else report.text()
    return text.rstrip("\n").split("\n"), EXIT_OK if report.ok else EXIT_FAIL


VERBS = {
    "validate": (cmd_validate, "validate every entry (algebras and modules)"),
    "info": (cmd_info, "summary of each algebra"),
    "series": (cmd_series, "derived and lower central series"),
    "nilradical": (cmd_nilradical, "nilradical of soluble algebras"),
    "chief-series": (cmd_chief, "a chief series with factors and centralizers"),
    "leib": (cmd_leib, "the Leib ideal spanned by squares"),
    "check": (cmd_check, "formation membership"),
    "fn-check": (cmd_fn, "compare loc(K) with nilpotent-by(K)"),
    "counterexample": (cmd_counterexample, "build a non-Lie Leibniz extension with VL = 0"),
    "batch": (cmd_batch, "run named checks and print a report"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="solalg", description="Exact computations with soluble Lie and Leibniz algebras.")
    sub = parser.add_subparsers(dest="verb", required=True)
    for verb, (_, help_text) in VERBS.items():
        p = sub.add_parser(verb, help=help_text)
        p.add_argument("catalogs", nargs="*", help="catalog files (default: built-in catalog)")
        p.add_argument("--output", "-o", help="write the report here instead of stdout")
        if verb != "counterexample" and verb != "batch":
            p.add_argument("--entry", "-e", action="append", help="restrict to this entry (repeatable)")
        if verb == "check":
            p.add_argument("--formation", required=True, help="e.g. loc(abelian), nilpotent-by(zero)")
        if verb == "fn-check":
            p.add_argument("--inner", default="abelian", help="inner formation K (default abelian)")
        if verb == "counterexample":
            p.add_argument("--base", required=True)
            p.add_argument("--module", required=True)
            p.add_argument("--name", help="name of the generated entry")
        if verb == "batch":
            p.add_argument("--checks", default="validate", help=f"comma separated; known: {', '.join(CHECKS)} (fn-theorem:<formation>)")
            p.add_argument("--format", choices=("text", "json"), default="text")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    func = VERBS[args.verb][0]
    try:
        doc = load_documents(args.catalogs)
        lines, code = func(doc, args)
    except (InputError, FormationSyntaxError, UnknownCheckError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    text = "\n".join(lines) + "\n"
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
