# Straightening Q_u for an arbitrary integer vector u
#
# Littlewood's rule moves an ascent one step at a time; a negative last
# entry kills the term.  The top term is predicted without expanding.

from qkeypoly.hall import p_of, predicted_top_term, straighten_Q, top_term

u = (-2, 3, 2)
e = straighten_Q(u)
print(f"Q_{u} =", e)
print("top term         :", top_term(e))
print("predicted (p, q^):", predicted_top_term(u))

for u in [(0, -1), (1, 3, 0), (0, 0, 3), (-1, 0, 1), (2, -1, 1, 1)]:
    e = straighten_Q(u)
    print(f"\nu = {u}: p(u) = {p_of(u)}")
    print("  ", e)

# the rewrite position does not matter
print("\nleftmost == rightmost:", straighten_Q((1, -1, 3), position="leftmost") == straighten_Q((1, -1, 3)))
