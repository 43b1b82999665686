"""Ordinal lengths of noetherian modules given by critical-series descriptors.

Descriptors are small immutable trees.  Leaves carry the facts one reads off
a critical series (dimension and multiplicity of each critical factor); the
inner nodes combine them.  Lengths of direct sums and of series are exact;
an extension only pins the length between the ordinary and the natural sum of
its pieces, so every result is an :class:`OrdinalInterval`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Union

from .errors import AmbiguousBound, DescriptorError, NotComputable
from .ordinal import (
    ZERO,
    Ordinal,
    add,
    degree,
    format_ordinal,
    natural_sum,
    omega_power,
    reduce,
)

__all__ = [
    "Critical",
    "TorsionFree",
    "Finite",
    "Series",
    "DirectSum",
    "Extension",
    "ModuleDescriptor",
    "OrdinalInterval",
    "length",
    "reduced_length",
    "krull_dim",
    "leading_coeff",
    "w_split",
    "e_split",
    "finite_action_bounds",
    "FiniteActionBound",
    "ZERO_MODULE",
]


@dataclass(frozen=True)
class Critical:
    """A ``dim``-critical module: length w^dim."""

    dim: int

    def __post_init__(self):
        if not isinstance(self.dim, int) or self.dim < 0:
            raise DescriptorError(f"critical dimension must be a natural number, got {self.dim!r}")


@dataclass(frozen=True)
class TorsionFree:
    """Torsion-free module of the given rank over a domain of Krull dimension ``dim``."""

    dim: int
    rank: int

    def __post_init__(self):
        if not isinstance(self.dim, int) or self.dim < 1:
            raise DescriptorError(f"torsion-free leaf needs dim >= 1, got {self.dim!r}")
        if not isinstance(self.rank, int) or self.rank < 1:
            raise DescriptorError(f"torsion-free leaf needs rank >= 1, got {self.rank!r}")


@dataclass(frozen=True)
class Finite:
    """Finite module of composition length ``length``; ``Finite(0)`` is the zero module."""

    length: int

    def __post_init__(self):
        if not isinstance(self.length, int) or self.length < 0:
            raise DescriptorError(f"finite length must be a natural number, got {self.length!r}")


@dataclass(frozen=True)
class Series:
    """Critical series listed bottom-up; dimensions weakly increase."""

    children: tuple

    def __init__(self, *children):
        if len(children) == 1 and isinstance(children[0], (list, tuple)):
            children = tuple(children[0])
        object.__setattr__(self, "children", tuple(children))
        if not self.children:
            raise DescriptorError("a series needs at least one factor")
        prev = -1
        for c in self.children:
            if not isinstance(c, (Critical, TorsionFree)):
                raise DescriptorError(f"series factors must be critical or torsion-free leaves, got {c!r}")
            if c.dim < prev:
                raise DescriptorError("series factor dimensions must weakly increase")
            prev = c.dim


@dataclass(frozen=True)
class DirectSum:
    children: tuple

    def __init__(self, *children):
        if len(children) == 1 and isinstance(children[0], (list, tuple)):
            children = tuple(children[0])
        object.__setattr__(self, "children", tuple(children))
        for c in self.children:
            _check(c)


@dataclass(frozen=True)
class Extension:
    """Module with submodule ``sub`` and quotient ``quot``."""

    sub: "ModuleDescriptor"
    quot: "ModuleDescriptor"

    def __post_init__(self):
        _check(self.sub)
        _check(self.quot)


ModuleDescriptor = Union[Critical, TorsionFree, Finite, Series, DirectSum, Extension]
_NODES = (Critical, TorsionFree, Finite, Series, DirectSum, Extension)
ZERO_MODULE = Finite(0)


def _check(m):
    if not isinstance(m, _NODES):
        raise DescriptorError(f"not a module descriptor: {m!r}")


@dataclass(frozen=True)
class OrdinalInterval:
    """``lower <= value <= upper`` (or ``< upper`` when ``upper_strict``)."""

    lower: Ordinal
    upper: Ordinal
    upper_strict: bool = False

    def __post_init__(self):
        if self.upper < self.lower or (self.upper_strict and self.upper == self.lower):
            raise ValueError(f"empty interval [{self.lower}, {self.upper}{')' if self.upper_strict else ']'}")

    @classmethod
    def exactly(cls, value) -> "OrdinalInterval":
        value = value if isinstance(value, Ordinal) else Ordinal.from_int(value)
        return cls(value, value)

    @property
    def exact(self) -> bool:
        return not self.upper_strict and self.lower == self.upper

    @property
    def value(self) -> Ordinal:
        if not self.exact:
            raise AmbiguousBound(f"{self} is not exact")
        return self.lower

    def __contains__(self, x):
        if x < self.lower:
            return False
        return x < self.upper if self.upper_strict else not (self.upper < x)

    def contains_interval(self, other: "OrdinalInterval") -> bool:
        if other.lower < self.lower:
            return False
        if self.upper < other.upper:
            return False
        if other.upper == self.upper and self.upper_strict and not other.upper_strict:
            return False
        return True

    def intersect(self, other: "OrdinalInterval") -> "OrdinalInterval":
        lower = max(self.lower, other.lower)
        if self.upper == other.upper:
            upper, strict = self.upper, self.upper_strict or other.upper_strict
        elif self.upper < other.upper:
            upper, strict = self.upper, self.upper_strict
        else:
            upper, strict = other.upper, other.upper_strict
        return OrdinalInterval(lower, upper, strict)

    def __str__(self):
        if self.exact:
            return format_ordinal(self.lower)
        return f"[{format_ordinal(self.lower)}, {format_ordinal(self.upper)}{')' if self.upper_strict else ']'}"

    def to_json(self):
        return {"lower": self.lower.to_json(), "upper": self.upper.to_json(), "upper_strict": self.upper_strict}


def _sum_intervals(a: OrdinalInterval, b: OrdinalInterval) -> OrdinalInterval:
    return OrdinalInterval(
        natural_sum(a.lower, b.lower),
        natural_sum(a.upper, b.upper),
        a.upper_strict or b.upper_strict,
    )


def _extension(quot: OrdinalInterval, sub: OrdinalInterval) -> OrdinalInterval:
    # quot + sub <= value <= quot (+) sub; collapses when sub is finite
    return OrdinalInterval(
        add(quot.lower, sub.lower),
        natural_sum(quot.upper, sub.upper),
        quot.upper_strict or sub.upper_strict,
    )


def _leaf_length(m) -> Ordinal:
    if isinstance(m, Critical):
        return omega_power(m.dim)
    if isinstance(m, TorsionFree):
        return omega_power(m.dim, m.rank)
    return Ordinal.from_int(m.length)


def length(m: ModuleDescriptor) -> OrdinalInterval:
    """Ordinal length of the described module."""
    _check(m)
    if isinstance(m, (Critical, TorsionFree, Finite)):
        return OrdinalInterval.exactly(_leaf_length(m))
    if isinstance(m, Series):
        total = ZERO
        for c in reversed(m.children):  # top factor first
            total = add(total, _leaf_length(c))
        return OrdinalInterval.exactly(total)
    if isinstance(m, DirectSum):
        out = OrdinalInterval.exactly(ZERO)
        for c in m.children:
            out = _sum_intervals(out, length(c))
        return out
    return _extension(length(m.quot), length(m.sub))


def _reduce_interval(iv: OrdinalInterval) -> OrdinalInterval:
    lo = reduce(iv.lower).quotient
    hi, rem = reduce(iv.upper)
    # value < w*hi + rem: strict only survives when rem == 0
    strict = iv.upper_strict and rem == 0
    return OrdinalInterval(lo, hi, strict)


def reduced_length(m: ModuleDescriptor) -> OrdinalInterval:
    """Reduced length: the quotient ``q`` in ``length = w*q + r``."""
    _check(m)
    if isinstance(m, DirectSum):
        out = OrdinalInterval.exactly(ZERO)
        for c in m.children:
            out = _sum_intervals(out, reduced_length(c))
        return out
    if isinstance(m, Extension):
        return _extension(reduced_length(m.quot), reduced_length(m.sub))
    return _reduce_interval(length(m))


def _endpoint_key(x: Ordinal):
    return (degree(x), x.leading_coefficient())


def krull_dim(m: ModuleDescriptor) -> int:
    """Krull dimension; -1 for the zero module."""
    iv = length(m)
    if iv.upper.is_zero():
        return -1
    if iv.lower.is_zero():
        raise AmbiguousBound(f"length {iv} does not determine the dimension")
    dl, du = degree(iv.lower), degree(iv.upper)
    if dl != du or not dl.is_finite():
        raise AmbiguousBound(f"length {iv} does not determine the dimension")
    return int(dl)


def leading_coeff(m: ModuleDescriptor) -> int:
    """Coefficient of w^dim in the length (0 for the zero module)."""
    iv = length(m)
    d = krull_dim(m)
    if d < 0:
        return 0
    lo, hi = iv.lower.coefficient(d), iv.upper.coefficient(d)
    if lo != hi or (iv.upper_strict and len(iv.upper.terms) == 1):
        raise AmbiguousBound(f"length {iv} does not determine the leading coefficient")
    return lo


def _assemble(parts, series: bool):
    parts = [p for p in parts if p != ZERO_MODULE]
    if not parts:
        return ZERO_MODULE
    if len(parts) == 1:
        return parts[0]
    return Series(*parts) if series else DirectSum(*parts)


def _split(m, bound: int):
    _check(m)
    if isinstance(m, Extension):
        raise NotComputable("the radical of an extension is not determined by its pieces")
    if isinstance(m, Finite):
        return m, ZERO_MODULE
    if isinstance(m, (Critical, TorsionFree)):
        return (m, ZERO_MODULE) if m.dim <= bound else (ZERO_MODULE, m)
    if isinstance(m, Series):
        low = [c for c in m.children if c.dim <= bound]
        high = [c for c in m.children if c.dim > bound]
        return _assemble(low, True), _assemble(high, True)
    pieces = [_split(c, bound) for c in m.children]
    return _assemble([p[0] for p in pieces], False), _assemble([p[1] for p in pieces], False)


def w_split(m: ModuleDescriptor):
    """Split off the largest submodule of Krull dimension <= 1.

    Returns ``(w_part, quotient)``.
    """
    return _split(m, 1)


def e_split(m: ModuleDescriptor):
    """Split off the largest finite submodule.  Returns ``(e_part, quotient)``."""
    return _split(m, 0)


@dataclass(frozen=True)
class FiniteActionBound:
    """Bounds on the reduced length when a finite group also acts.

    ``coefficient_range`` brackets the top coefficient of the invariant length
    at degree ``dim``; ``interval`` is the resulting range for the reduced length.
    """

    interval: OrdinalInterval
    dim: int
    coefficient_range: tuple
    rule: str


def finite_action_bounds(
    m: Optional[ModuleDescriptor],
    group_order: int,
    invariant_ideal_dim: Optional[int] = None,
) -> FiniteActionBound:
    """Reduced length of ``m`` counting only submodules stable under a finite group.

    The invariant top coefficient lies between ``ceil(l_d / n)`` and ``l_d``.
    When ``invariant_ideal_dim`` is given, ``m`` is a nonzero invariant ideal in
    a finitely generated domain of that dimension and the answer is exact.
    """
    if not isinstance(group_order, int) or group_order < 1:
        raise DescriptorError("group order must be a positive integer")
    if invariant_ideal_dim is not None:
        D = invariant_ideal_dim
        if D < 1:
            raise DescriptorError("invariant ideal needs a domain of dimension >= 1")
        value = omega_power(D - 1)
        if m is not None:
            lp = reduced_length(m)
            if lp.exact and lp.value != value:
                raise DescriptorError(f"an ideal in a domain of dimension {D} has reduced length {value}, descriptor gives {lp}")
        return FiniteActionBound(OrdinalInterval.exactly(value), D, (1, 1), "invariant-ideal")
    if m is None:
        raise DescriptorError("a module descriptor is required without the invariant-ideal flag")
    full = length(m)
    if not full.exact:
        raise AmbiguousBound(f"length {full} is not exact")
    d = krull_dim(m)
    lp = reduced_length(m).value
    if d <= 0:
        return FiniteActionBound(OrdinalInterval.exactly(ZERO), d, (0, 0), "finite")
    top = leading_coeff(m)
    lo_c = math.ceil(top / group_order)
    lower = reduce(omega_power(d, lo_c)).quotient
    rule = "top-coefficient"
    if lp == omega_power(d - 1):
        rule = "critical-reduced-length"
    return FiniteActionBound(OrdinalInterval(lower, lp), d, (lo_c, top), rule)
