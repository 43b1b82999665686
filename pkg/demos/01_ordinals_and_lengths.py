"""
Ordinals and module lengths
===========================

Cantor normal forms, the two sums, and the length of a module built from
critical pieces.
"""

from cbcalc.ordinal import parse_ordinal, add, natural_sum, reduce, degree, format_ordinal

a = parse_ordinal("w^2 + w*3 + 1")
b = parse_ordinal("w^3 + w")

# the ordinary sum lets the big term swallow everything below it
print("a + b   =", format_ordinal(add(a, b)))
print("b + a   =", format_ordinal(add(b, a)))
# the natural sum adds coefficients and does not care about order
print("a (+) b =", format_ordinal(natural_sum(a, b)))

# every ordinal is w*q + r with r finite; q is the "reduced" part
q, r = reduce(parse_ordinal("w^2*2 + w*5 + 7"))
print("reduce  =", format_ordinal(q), r)
print("deg b   =", format_ordinal(degree(b)))

# %%
# Modules are described by trees.  A critical module of dimension d has
# length w^d, a series adds lengths top-down, a direct sum adds them naturally.

from cbcalc.modlen import Critical, Series, DirectSum, Extension, Finite, length, reduced_length, krull_dim
from cbcalc.dsl import format_module

chain = Series(Critical(1), Critical(2), Critical(2))
print(format_module(chain), "->", length(chain), "; reduced", reduced_length(chain), "; dim", krull_dim(chain))

both = DirectSum(Critical(1), Critical(2))
print(format_module(both), "->", length(both))

# an extension only pins the length between the two sums
ext = Extension(Critical(2), Critical(1))
print(format_module(ext), "->", length(ext))
print("finite submodule collapses it:", length(Extension(Finite(3), Critical(1))))
