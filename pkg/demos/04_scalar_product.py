# The constant-term scalar product and the duality U_v <-> Uhat_{v.omega}
#
# (f, g)_q = CT(f g^club Theta) with Theta = prod (1 - x_i/x_j)/(1 - q x_i/x_j).

from qkeypoly.ctscalar import ct_oracle, scalar_q, verify_cauchy, verify_duality
from qkeypoly.multipoly import monomial

a, b = monomial((1, 0, 3)), monomial((0, 1, 3))
print("(x^103, x^013)_q        =", scalar_q(a, b))
print("series oracle, q^6 cap  =", ct_oracle(a, b, 6))

rep = verify_duality((2, 1, 0), 3)
print("\nGram matrix (U_v, Uhat_{u.omega})_q for lambda = 210:")
for v, row in zip(rep.left, rep.gram):
    print("".join(map(str, v)), " ".join(str(c) for c in row))
print("identity:", rep.passed)

for lam in [(2, 0, 0), (1, 1, 0), (3, 1, 0)]:
    print(f"duality for {lam}:", verify_duality(lam, 3).passed)

print("\nCauchy identity, n=3, x-degree <= 3:", verify_cauchy(3, 3)["pass"])
