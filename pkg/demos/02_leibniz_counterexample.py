"""Non-Lie Leibniz algebras whose Lie quotient is a given Lie algebra.

Take r2 acting on a line through the character x -> 1, y -> 0 and let the
right action be zero.  The split extension P is Leibniz but not Lie, its
Leib ideal is the line, and P / Leib(P) is r2 again.
"""

from solalg import load_builtin, generate_counterexample, leib_ideal, quotient, validate
from solalg import chief_series, classify_dichotomy, check_certificate, MembershipCertificate, Target
from solalg.algebra import LIE, as_leibniz, direct_sum, morphism, summand_spaces
from solalg.exact_linalg import QQ, Matrix
from solalg.formations import Soluble

cat = load_builtin()
r2, lam = cat.algebra("r2"), cat.module("lam")

ce = generate_counterexample(r2, lam, "p3")
p3 = ce.algebra
print(ce.text())

print("as Lie:    ", validate(p3, LIE))
print("as Leibniz:", validate(p3))
print("Leib(P):   ", leib_ideal(p3).space)
print("P/Leib(P) == r2:", quotient(p3, leib_ideal(p3))[0].structure_equal(r2))

# chief factors of a Leibniz algebra are symmetric or antisymmetric
for f in chief_series(p3).factors:
    print("factor of dim", f.dim_v, "->", classify_dichotomy(f))

# subdirect-sum certificate for r2 + p3, K0 = soluble algebras
total = direct_sum(as_leibniz(r2), p3)
r2_part, p3_part = summand_spaces(r2, p3)
q, _ = quotient(total, r2_part)
witness = morphism(q, p3, Matrix.identity(QQ, 3))
cert = MembershipCertificate(total, (p3_part, r2_part), (Target(), Target(0, witness)), (p3,))
print("certificate accepted:", check_certificate(cert, Soluble()))

# the same recipe over GF(2) with the 2-dimensional module w
print(generate_counterexample(cat.algebra("r2_gf2"), cat.module("w"), "p4_gf2").text())
