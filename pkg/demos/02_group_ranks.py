"""
Group descriptors and their ranks
=================================

The rule engine reads a group descriptor and returns the Cantor-Bendixson
rank of the trivial subgroup, with the rules it used.
"""

from cbcalc.dsl import parse_dsl
from cbcalc.grouprank import cb_rank, cb_space, format_rank

for text in [
    "group Z^3",
    "group polycyclic(Z, Z, Z, nilpotent=true)",
    "group wreath(base=Z^2, d=3)",
    "group wreath(base=C(18), d=2)",
    "group wreath(base=C(18), d=1)",
    "group FM(3)",
    "group H(2)",
    "group Gn(2, 4)",
]:
    g = parse_dsl(text).descriptor
    value, trace = cb_rank(g)
    print(f"{text:45s} cb = {format_rank(value):8s} space = {format_rank(cb_space(g))}")

# %%
# A derivation shows which rule fired and with what data.

value, trace = cb_rank(parse_dsl("group Lambda(3)").descriptor)
for step in trace:
    print("  ", step)

# %%
# Turning off the exact rules leaves only the interval envelope; the exact
# answer always lands inside it.

g = parse_dsl("group Gamma(3)").descriptor
print("exact   :", format_rank(cb_rank(g)[0]))
print("envelope:", format_rank(cb_rank(g, exact_rules=False)[0]))
