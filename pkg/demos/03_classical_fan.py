"""
The Bieri-Strebel fan of Z[u, 1/u, 1/(1+u)]
===========================================

Three rays carry a valuation certificate; every other ray has an explicit
witness found by integer linear algebra.
"""

from collections import Counter

from cbcalc import sigma

m = sigma.ClassicalRing()
print("fan:", sorted(sigma.gamma_rays(m)))

for ray in [(1, 0), (0, 1), (-1, -1)]:
    cert = sigma.in_gamma_certificate(m, ray)
    print(ray, cert.describe(), "verified:", sigma.verify_certificate(m, cert))

# %%
# Off the fan, a witness is a monomial q with negative value whose action
# on 1 is an integer combination of monomials with non-negative value.

v = sigma.gamma_verdict(m, (2, 5))
w = v.witness
print(v.verdict, "q =", w.q, "=", " + ".join(f"{c}*{p}" for p, c in w.combination))

# %%
# A full sweep: 360 directions, three certificates, the rest witnesses.

verdicts = [sigma.gamma_verdict(m, r) for r in sigma.ray_sweep(360)]
print(Counter(v.verdict for v in verdicts))
print("largest witness window:", max(v.witness.window for v in verdicts if v.verdict == "NotInGamma"))

# %%
# Tensor powers have no antipodal pair in Γ, so the groups built on them are
# finitely presented.  A group ring has everything in Γ.

for d in (1, 2, 3):
    print(f"A({d}):", sigma.finitely_presented(sigma.tensor_power(d)).status)
print("Z[Z]:", sigma.finitely_presented(sigma.GroupRing(1)).status)
