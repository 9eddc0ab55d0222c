"""Random soluble algebras: loc(K) against nilpotent-by(K), and the char-0 picture."""

from collections import Counter

from solalg import GF, QQ, char0_abelian_quotient_check, fn_theorem_check, parse_formation
from solalg.generators import random_corpus

inner_specs = [parse_formation(t) for t in ("zero", "abelian", "nilpotent", "soluble")]

tally = Counter()
for p in (2, 3):
    for l in random_corpus(GF(p), 20, 4, seed=p, leibniz_share=0.3):
        for inner in inner_specs:
            r = fn_theorem_check(l, inner)
            tally[(str(inner), r.loc_member, r.agree)] += 1

for (inner, member, agree), count in sorted(tally.items()):
    print(f"{inner:>10}  member={member!s:5}  agree={agree}  x{count}")

# over Q every chief factor quotient L/C is abelian
qs = random_corpus(QQ, 15, 6, seed=0)
print("char 0:", sum(char0_abelian_quotient_check(l).passed for l in qs), "of", len(qs), "pass")
