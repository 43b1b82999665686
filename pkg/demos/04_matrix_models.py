"""
Matrix models
=============

Free metabelian groups and the groups H_d sit inside 2x2 affine matrices over
a Laurent ring.  The catalog checks the identities that the rank formulas
lean on.
"""

from cbcalc import catalog
from cbcalc.laurent import LaurentRing, MagnusMatrix, format_x

R = LaurentRing(2)
x1 = MagnusMatrix(R.u(0), [R.one(), R.zero()])
x2 = MagnusMatrix(R.u(1), [R.zero(), R.one()])
c = x1.commutator(x2)
print("[x1, x2] =", c)

# the vector part of a commutator is killed by sum (1 - u_i) a_i
print("in N_0:", catalog.in_n0(R, c.m))

# %%
# H_1: e and f are diagonal, u is a translation.  [ue, uf] is nontrivial
# but vanishes when x = 1/2.

R1 = LaurentRing(1)
e = MagnusMatrix(R1.x(0), [R1.zero()])
f = MagnusMatrix(1 - R1.x(0), [R1.zero()])
u = MagnusMatrix(R1.one(), [R1.one()])
k = (u * e).commutator(u * f)
print("[ue, uf] m-part:", format_x(k.m[0]))

# %%
# Every catalog entry carries its own checks.

for name, params in [("FM", {"d": 3}), ("H", {"d": 3}), ("Lambda", {"d": 3}), ("Gn", {"d": 2, "n": 5}), ("ZWrZ", {})]:
    print(catalog.verify(catalog.get(name, **params)))
