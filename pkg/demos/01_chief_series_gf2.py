"""A 4-dimensional soluble Lie algebra over GF(2) and its chief series."""

from solalg import GF, Matrix, ModulePresentation, split_extension, symmetrize, validate
from solalg import chief_series, nilradical, formation_membership, parse_formation
from solalg.algebra import LIE, AlgebraPresentation, quotient
from solalg.oracles import max_nilpotent_ideal

F2 = GF(2)

# r2 over GF(2): [x, y] = y  (indices are 0-based here)
r2 = AlgebraPresentation.from_table("r2_gf2", F2, 2, LIE, {(0, 1): (0, 1), (1, 0): (0, 1)})

# W: x acts as diag(0, 1), y swaps the two basis vectors
W = ModulePresentation(
    "w", r2, 2,
    (Matrix.from_rows([[0, 0], [0, 1]], F2), Matrix.from_rows([[0, 1], [1, 0]], F2)),
)

e4, w_ideal = split_extension(r2, symmetrize(W), "e4_gf2")
print(validate(e4))

cs = chief_series(e4)
print("chief factor dims:", cs.factor_dims)
for j, (ideal, cent) in enumerate(zip(cs.ideals[1:], cs.centralizers), start=1):
    print(f"  I_{j} = {ideal}   C = {cent}")

# the nilradical is the intersection of the centralizers; compare with brute force
n = nilradical(e4).space
print("nilradical:", n, " oracle agrees:", n == max_nilpotent_ideal(e4))

# L / C(W) is r2 again, which is not abelian
q, _ = quotient(e4, cs.centralizers[0])
print("L/C(W) == r2:", q.structure_equal(r2))

for text in ("supersoluble", "loc(abelian)", "nilpotent-by(abelian)", "loc(soluble)"):
    print(f"{text:>24}: {formation_membership(e4, parse_formation(text))}")
