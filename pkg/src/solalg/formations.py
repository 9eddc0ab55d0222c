"""Formation predicates, local definitions and the membership certificate checker.

Formations are decidable predicate trees::

    zero | abelian | nilpotent | soluble | supersoluble
         | nilpotent-by(<spec>) | loc(<spec>)

``loc(K)`` holds when ``L / C_L(H/K)`` lies in ``K`` for every chief factor;
``nilpotent-by(K)`` when ``L / N(L)`` lies in ``K``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .algebra import (
    LIE,
    AlgebraPresentation,
    Ideal,
    Morphism,
    is_ideal,
    product_subspaces,
    quotient,
    require_valid,
    validate,
    validate_morphism,
)
from .series import (
    NotSolubleError,
    chief_series,
    is_nilpotent,
    is_soluble,
    leib_ideal,
    nilradical,
)

ZERO = "zero"
ABELIAN = "abelian"
NILPOTENT = "nilpotent"
SOLUBLE = "soluble"
SUPERSOLUBLE = "supersoluble"
NILPOTENT_BY = "nilpotent-by"
LOC = "loc"

_ATOMS = (ZERO, ABELIAN, NILPOTENT, SOLUBLE, SUPERSOLUBLE)
_WRAPPERS = (NILPOTENT_BY, LOC)


class FormationSyntaxError(ValueError):
    pass


@dataclass(frozen=True)
class FormationSpec:
    variant: str
    inner: "FormationSpec | None" = None

    def __post_init__(self):
        if self.variant in _ATOMS:
            if self.inner is not None:
                raise ValueError(f"{self.variant} takes no argument")
        elif self.variant in _WRAPPERS:
            if self.inner is None:
                raise ValueError(f"{self.variant} needs an inner formation")
        else:
            raise ValueError(f"unknown formation {self.variant!r}")

    def __str__(self):
        if self.inner is None:
            return self.variant
        return f"{self.variant}({self.inner})"

    @property
    def needs_chief_series(self) -> bool:
        return self.variant in (SUPERSOLUBLE, NILPOTENT_BY, LOC) or (
            self.inner is not None and self.inner.needs_chief_series
        )


def Zero():
    return FormationSpec(ZERO)


def Abelian():
    return FormationSpec(ABELIAN)


def Nilpotent():
    return FormationSpec(NILPOTENT)


def Soluble():
    return FormationSpec(SOLUBLE)


def Supersoluble():
    return FormationSpec(SUPERSOLUBLE)


def NilpotentBy(inner: FormationSpec):
    return FormationSpec(NILPOTENT_BY, inner)


def LocallyDefined(inner: FormationSpec):
    return FormationSpec(LOC, inner)


_TOKEN = re.compile(r"\s*(nilpotent-by|supersoluble|nilpotent|abelian|soluble|zero|loc|\(|\))")


def parse_formation(text: str) -> FormationSpec:
    pos = 0
    tokens = []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            raise FormationSyntaxError(f"unexpected input at column {pos + 1}: {text[pos:]!r}")
        tokens.append((m.group(1), m.start(1)))
        pos = m.end()

    def parse(i):
        if i >= len(tokens):
            raise FormationSyntaxError("unexpected end of formation spec")
        tok, col = tokens[i]
        if tok in _ATOMS:
            return FormationSpec(tok), i + 1
        if tok in _WRAPPERS:
            if i + 1 >= len(tokens) or tokens[i + 1][0] != "(":
                raise FormationSyntaxError(f"expected '(' after {tok} at column {col + 1}")
            inner, j = parse(i + 2)
            if j >= len(tokens) or tokens[j][0] != ")":
                raise FormationSyntaxError(f"expected ')' closing {tok} at column {col + 1}")
            return FormationSpec(tok, inner), j + 1
        raise FormationSyntaxError(f"unexpected {tok!r} at column {col + 1}")

    spec, end = parse(0)
    if end != len(tokens):
        raise FormationSyntaxError(f"trailing input at column {tokens[end][1] + 1}")
    return spec


def formation_membership(l: AlgebraPresentation, spec: FormationSpec) -> bool:
    require_valid(l)
    v = spec.variant
    if v == ZERO:
        return l.dim == 0
    if v == ABELIAN:
        return product_subspaces(l, l.full, l.full).is_zero()
    if v == NILPOTENT:
        return is_nilpotent(l)
    if v == SOLUBLE:
        return is_soluble(l)
    if not is_soluble(l):
        raise NotSolubleError(f"{spec} membership needs a soluble algebra; {l.name} is not")
    if v == SUPERSOLUBLE:
        return all(d == 1 for d in chief_series(l).factor_dims)
    if v == NILPOTENT_BY:
        q, _ = quotient(l, nilradical(l))
        return formation_membership(q, spec.inner)
    if v == LOC:
        cs = chief_series(l)
        return all(formation_membership(quotient(l, c)[0], spec.inner) for c in cs.centralizers)
    raise ValueError(f"unknown formation {spec}")


@dataclass
class FNReport:
    algebra: str
    inner: str
    loc_member: bool
    nilpotent_by_member: bool
    informational: bool  # characteristic 0: agreement is reported, not required

    @property
    def agree(self) -> bool:
        return self.loc_member == self.nilpotent_by_member

    def __str__(self):
        tag = " (informational, char 0)" if self.informational else ""
        return (
            f"{self.algebra}: loc({self.inner})={self.loc_member} "
            f"nilpotent-by({self.inner})={self.nilpotent_by_member} agree={self.agree}{tag}"
        )


def fn_theorem_check(l: AlgebraPresentation, inner: FormationSpec) -> FNReport:
    """Compare ``loc(inner)`` membership with ``L/N(L) ∈ inner``."""
    require_valid(l)
    if not is_soluble(l):
        raise NotSolubleError(f"{l.name} is not soluble")
    return FNReport(
        l.name,
        str(inner),
        formation_membership(l, LocallyDefined(inner)),
        formation_membership(l, NilpotentBy(inner)),
        informational=l.field.characteristic == 0,
    )


@dataclass
class Char0Report:
    algebra: str
    factor_dims: tuple
    quotient_abelian: tuple  # per chief factor

    @property
    def passed(self) -> bool:
        return all(self.quotient_abelian)

    def __str__(self):
        flags = ",".join("abelian" if a else "NON-ABELIAN" for a in self.quotient_abelian)
        return f"{self.algebra}: factors {self.factor_dims} L/C [{flags}] -> {'pass' if self.passed else 'FAIL'}"


def char0_abelian_quotient_check(l: AlgebraPresentation) -> Char0Report:
    """For every chief factor ``H/K`` check that ``L / C_L(H/K)`` is abelian."""
    if l.field.characteristic != 0:
        raise ValueError(f"{l.name} is over {l.field}; this check is for characteristic 0")
    if l.kind != LIE:
        raise ValueError(f"{l.name} is a {l.kind} presentation; this check is for Lie algebras")
    require_valid(l)
    cs = chief_series(l)
    flags = tuple(formation_membership(quotient(l, c)[0], Abelian()) for c in cs.centralizers)
    return Char0Report(l.name, cs.factor_dims, flags)


class CertificateError(ValueError):
    """Structurally malformed membership certificate."""


class LemmaViolation(AssertionError):
    """A well-formed certificate whose algebra nevertheless fails ``L/Leib(L) ∈ K0``."""


IN_K0 = "in-K0"


@dataclass(frozen=True)
class Target:
    """Either ``in-K0`` or the declared algebra ``index`` with an isomorphism ``L/N_i -> P_index``."""

    index: int | None = None
    witness: Morphism | None = None

    @property
    def in_k0(self) -> bool:
        return self.index is None


@dataclass(frozen=True)
class MembershipCertificate:
    algebra: AlgebraPresentation
    witness_ideals: tuple  # Ideal
    targets: tuple  # Target
    declared: tuple = ()  # Leibniz algebras P_j


@dataclass
class CertificateResult:
    accepted: bool
    reasons: list = field(default_factory=list)
    leib_quotient_in_k0: bool | None = None

    def __bool__(self):
        return self.accepted


def _is_lie(l: AlgebraPresentation) -> bool:
    return leib_ideal(l).space.is_zero() and validate(l, LIE).valid


def evaluate_certificate(c: MembershipCertificate, k0: FormationSpec) -> CertificateResult:
    """Full certificate check with reasons; see :func:`check_certificate`."""
    l = c.algebra
    require_valid(l)
    if len(c.witness_ideals) != len(c.targets) or not c.witness_ideals:
        raise CertificateError("need one target per witness ideal and at least one ideal")
    res = CertificateResult(True)
    for p in c.declared:
        require_valid(p)
        pq, _ = quotient(p, leib_ideal(p))
        if not formation_membership(pq, k0):
            raise CertificateError(f"declared algebra {p.name}: P/Leib(P) is not in {k0}")
    inter = l.full
    for n in c.witness_ideals:
        sp = n.space if isinstance(n, Ideal) else n
        if not is_ideal(l, sp):
            raise CertificateError(f"witness {sp} is not an ideal of {l.name}")
        inter = inter & sp
    if not inter.is_zero():
        res.accepted = False
        res.reasons.append(f"witness ideals intersect in {inter}, not 0")
    for idx, (n, t) in enumerate(zip(c.witness_ideals, c.targets)):
        q, _ = quotient(l, n)
        if t.in_k0:
            if not _is_lie(q):
                res.accepted = False
                res.reasons.append(f"ideal {idx + 1}: quotient is not a Lie algebra")
            elif not formation_membership(q, k0):
                res.accepted = False
                res.reasons.append(f"ideal {idx + 1}: quotient not in {k0}")
            continue
        if t.index is None or not 0 <= t.index < len(c.declared):
            raise CertificateError(f"ideal {idx + 1}: target index {t.index} out of range")
        p, w = c.declared[t.index], t.witness
        if w is None:
            raise CertificateError(f"ideal {idx + 1}: missing witnessing morphism")
        if not (w.source.structure_equal(q) and w.target.structure_equal(p)):
            res.accepted = False
            res.reasons.append(f"ideal {idx + 1}: witness does not map L/N_i to {p.name}")
            continue
        if not (validate_morphism(w).valid and w.surjective and w.kernel().is_zero()):
            res.accepted = False
            res.reasons.append(f"ideal {idx + 1}: witness is not an isomorphism")
    if res.accepted:
        lq, _ = quotient(l, leib_ideal(l))
        res.leib_quotient_in_k0 = formation_membership(lq, k0)
        if not res.leib_quotient_in_k0:
            raise LemmaViolation(f"{l.name}: certificate accepted but L/Leib(L) is not in {k0}")
    return res


def check_certificate(c: MembershipCertificate, k0: FormationSpec) -> bool:
    """Accept a subdirect-sum certificate for membership in the formation generated by K0 and the P_j.

    True iff the witness ideals meet in 0 and every quotient matches its
    declared target; on acceptance ``L/Leib(L) ∈ K0`` is verified as well and
    a failure there raises :class:`LemmaViolation`.
    """
    return evaluate_certificate(c, k0).accepted
