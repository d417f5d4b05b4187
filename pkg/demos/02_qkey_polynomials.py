# q-Key polynomials from x^210 and x^200
#
# U_v starts from x^lambda / d_lambda(q) and climbs with box operators,
# Uhat_v starts from x^lambda and climbs with nabla operators.

from qkeypoly import symgroup as sg
from qkeypoly.hall import hl_P
from qkeypoly.qkey import key_poly, transition_matrix, u_poly, uhat_poly

for v in sg.orbit((2, 1, 0)):
    print(f"U_{''.join(map(str, v))}    = {u_poly(v)}")
print()
for v in sg.orbit((2, 1, 0)):
    print(f"Uhat_{''.join(map(str, v))} = {uhat_poly(v)}")

# repeated parts: U_002 is the Hall-Littlewood P_2
print("\nU_002 == P_(2):", u_poly((0, 0, 2)) == hl_P((2,), 3))
print("U_020    =", u_poly((0, 2, 0)))
print("Uhat_020 =", uhat_poly((0, 2, 0)))

# at q = 0 the families become Demazure characters
v = (0, 1, 2)
print("\nU_012 at q=0 :", u_poly(v).specialize_q(0))
print("K_012        :", key_poly(v))

print("\nU -> K in weight 3:")
print(transition_matrix("U", "K", 3, 3))
