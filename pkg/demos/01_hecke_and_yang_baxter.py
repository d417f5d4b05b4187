# Hecke algebra H_3 and its Yang-Baxter basis
#
# Y_sigma is a product of factors (T_i + 1/[k]_q) along a reduced word of
# sigma.  Each column below is one Y_sigma written in the T basis.

from qkeypoly import symgroup as sg
from qkeypoly.heckealg import bilinear, yang_baxter, yb_transition_matrix

perms = sg.all_perms(3)
m = yb_transition_matrix(3)
print("     " + "  ".join(f"{''.join(map(str, s)):>8}" for s in perms))
for s, row in zip(perms, m):
    print("".join(map(str, s)), " " + "  ".join(f"{('·' if not c else str(c)):>8}" for c in row))

# the top element has a short closed form: every T_sigma with coefficient 1
w = sg.longest(3)
print("\nY_321    =", yang_baxter(w))
print("Yhat_321 =", yang_baxter(w, "hat"))

# Y and Yhat are dual for the pairing <a, b> = coefficient of T_omega in a * phi(b)
nu = (2, 3, 1)
partner = sg.compose(w, nu)
print(f"\n<Y_{partner}, Yhat_{nu}> =", bilinear(yang_baxter(partner), yang_baxter(nu, "hat")))
print(f"<Y_{nu}, Yhat_{nu}> =", bilinear(yang_baxter(nu), yang_baxter(nu, "hat")))
