"""Cantor-Bendixson ranks of finitely generated (virtually) metabelian groups.

A group is described by a :data:`GroupDescriptor`; :func:`cb_rank` runs a
fixed list of rules over it and returns either an exact ordinal or an
:class:`~cbcalc.modlen.OrdinalInterval`, together with a
:class:`DerivationTrace` naming every rule that fired.

Rules, in the order they are tried (exact rules first, caps last):

====  ========================================================================
R1    supersolvable / nilpotent polycyclic: Hirsch length
R2    polycyclic: [#infinite factors of the normal series, Hirsch length]
R3    Z^k wr Z^d = w^d * k
R4    C_m wr Z^(d+1) = w^d * delta(m);  C_m wr Z = delta(m) + 1
R5    module contains its own centralizer and has no dimension <= 1 part
R6    reduced length of M/W(M) plus the Hirsch-radical contribution
R7    torsion-free module of rank r over a prime quotient of dimension d >= 2
R8    free metabelian group on d generators: w^d * (d - 1)
R9    fallback  l'(M) <= cb < l'(M) + w
R10   split and d-generated: cb < w^d
R11   d-generated: cb <= w^d * (d - 1);  Q-rank q: cb < w^(q+1)
R12   finite extension acting on an invariant ideal of a domain of dim D
====  ========================================================================
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Union

from .errors import AmbiguousBound, DescriptorError, HypothesisNotEstablished, NotComputable
from .modlen import (
    ZERO_MODULE,
    Critical,
    Finite,
    ModuleDescriptor,
    OrdinalInterval,
    Series,
    TorsionFree,
    _check as _check_module,
    finite_action_bounds,
    reduced_length,
    w_split,
)
from .ordinal import OMEGA, ONE, ZERO, Ordinal, add, format_ordinal, omega_power

__all__ = [
    "InfiniteCyclic",
    "FreeAbelian",
    "FiniteFactor",
    "Cyclic",
    "Polycyclic",
    "FreeAbelianByFinite",
    "Wreath",
    "FreeMetabelian",
    "MetabelianExt",
    "VirtuallyMetabelian",
    "WreathPermutational",
    "GroupDescriptor",
    "Condensation",
    "COND",
    "UNKNOWN",
    "TraceStep",
    "DerivationTrace",
    "delta",
    "hirsch_length",
    "metabelian_model",
    "reduced_length_group",
    "cb_rank",
    "cb_space",
    "cb_external",
    "format_rank",
    "RULES",
]


# -- descriptors ----------------------------------------------------------------

@dataclass(frozen=True)
class InfiniteCyclic:
    rank = 1


@dataclass(frozen=True)
class FreeAbelian:
    rank: int

    def __post_init__(self):
        if not isinstance(self.rank, int) or self.rank < 0:
            raise DescriptorError(f"free abelian rank must be a natural number, got {self.rank!r}")


@dataclass(frozen=True)
class FiniteFactor:
    order: Optional[int] = None
    rank = 0


@dataclass(frozen=True)
class Cyclic:
    """Finite cyclic group of order ``m``."""

    order: int

    def __post_init__(self):
        if not isinstance(self.order, int) or self.order < 2:
            raise DescriptorError(f"cyclic base needs order >= 2, got {self.order!r}")


@dataclass(frozen=True)
class Polycyclic:
    """Polycyclic group given by the factors of a normal series."""

    factors: tuple
    supersolvable: bool = False
    nilpotent: bool = False

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))
        for f in self.factors:
            if not isinstance(f, (InfiniteCyclic, FreeAbelian, FiniteFactor)):
                raise DescriptorError(f"not a polycyclic factor: {f!r}")


@dataclass(frozen=True)
class FreeAbelianByFinite:
    """Z^rank extended by a finite group; ``irreducibles`` counts the rational
    irreducible constituents of the action on Q^rank."""

    rank: int
    irreducibles: int

    def __post_init__(self):
        if self.rank < 0 or self.irreducibles < 0:
            raise DescriptorError("rank and irreducible count must be natural numbers")
        if (self.rank == 0) != (self.irreducibles == 0) or self.irreducibles > self.rank:
            raise DescriptorError(f"Q^{self.rank} cannot split into {self.irreducibles} irreducibles")


@dataclass(frozen=True)
class Wreath:
    """Standard wreath product ``base wr Z^top_rank``."""

    base: Union[FreeAbelian, Cyclic]
    top_rank: int

    def __post_init__(self):
        if isinstance(self.base, FreeAbelian):
            if self.base.rank < 1:
                raise DescriptorError("wreath base Z^k needs k >= 1")
        elif not isinstance(self.base, Cyclic):
            raise DescriptorError(f"wreath base must be Z^k or C_m, got {self.base!r}")
        if not isinstance(self.top_rank, int) or self.top_rank < 0:
            raise DescriptorError("wreath top rank must be a natural number")


@dataclass(frozen=True)
class FreeMetabelian:
    d: int

    def __post_init__(self):
        if not isinstance(self.d, int) or self.d < 2:
            raise DescriptorError("free metabelian groups are taken on d >= 2 generators")


@dataclass(frozen=True)
class MetabelianExt:
    """Extension ``1 -> M -> G -> Q -> 1`` with M, Q abelian; M given as a Z[Q]-module.

    ``prime_quotient`` is ``(coheight, rank)``: M is a torsion-free module of
    that rank over Z[Q]/P with Z[Q]/P of Krull dimension ``coheight``.
    """

    module: ModuleDescriptor
    q_rank: int
    q_torsion_free: bool = True
    split: bool = False
    generators: Optional[int] = None
    faithful: bool = False
    module_contains_centralizer: bool = False
    prime_quotient: Optional[tuple] = None

    def __post_init__(self):
        _check_module(self.module)
        if not isinstance(self.q_rank, int) or self.q_rank < 0:
            raise DescriptorError("q_rank must be a natural number")
        if self.generators is not None:
            if self.generators < 1:
                raise DescriptorError("generator count must be positive")
            if self.q_rank > self.generators:
                raise DescriptorError(f"a {self.generators}-generated group has abelianization rank <= {self.generators}")
        if self.prime_quotient is not None:
            d, r = self.prime_quotient
            if d < 0 or r < 1:
                raise DescriptorError("prime quotient needs coheight >= 0 and rank >= 1")
            object.__setattr__(self, "prime_quotient", (int(d), int(r)))


@dataclass(frozen=True)
class VirtuallyMetabelian:
    """Finite extension of index ``index`` of a metabelian group ``inner``."""

    inner: "GroupDescriptor"
    index: int
    invariant_ideal_dim: Optional[int] = None

    def __post_init__(self):
        if not isinstance(self.inner, (MetabelianExt, FreeMetabelian, Wreath)):
            raise DescriptorError("the finite-index subgroup must be metabelian")
        if not isinstance(self.index, int) or self.index < 1:
            raise DescriptorError("index must be a positive integer")
        if self.invariant_ideal_dim is not None and self.invariant_ideal_dim < 1:
            raise DescriptorError("invariant ideal needs a domain of dimension >= 1")


@dataclass(frozen=True)
class WreathPermutational:
    """Permutational wreath product H wr_X G, described by its qualitative flags."""

    base_nontrivial: bool
    diag_orbits_infinite: bool
    finitely_presented: bool = False


GroupDescriptor = Union[
    Polycyclic, FreeAbelianByFinite, Wreath, FreeMetabelian, MetabelianExt, VirtuallyMetabelian, WreathPermutational
]
_GROUP_NODES = (Polycyclic, FreeAbelianByFinite, Wreath, FreeMetabelian, MetabelianExt, VirtuallyMetabelian, WreathPermutational)


# -- rank values ------------------------------------------------------------------

class Condensation:
    """The condensation symbol: a point of the perfect kernel.  Not an ordinal."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "COND"

    def __str__(self):
        return "COND"

    def __reduce__(self):
        return (Condensation, ())


class _Unknown:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "UNKNOWN"

    __str__ = __repr__

    def __bool__(self):
        return False


COND = Condensation()
UNKNOWN = _Unknown()


def format_rank(value, unicode: bool = False) -> str:
    if value is COND:
        return "𝔠" if unicode else "COND"
    if value is UNKNOWN:
        return "UNKNOWN"
    if isinstance(value, OrdinalInterval):
        s = str(value)
        return s.replace("w", "ω") if unicode else s
    return format_ordinal(value, unicode=unicode)


# -- traces -------------------------------------------------------------------------

RULES = {
    "R1": "Hirsch length equals the rank for supersolvable polycyclic groups",
    "R2": "infinite factors of a normal series bound the rank of a polycyclic group",
    "R3": "free abelian base wreath product formula",
    "R4": "finite cyclic base wreath product formula",
    "R5": "module containing its own centralizer, no dimension <= 1 part",
    "R6": "reduced length of M/W(M) plus Hirsch length of the Hirsch radical",
    "R7": "torsion-free module over a prime quotient with faithful action",
    "R8": "free metabelian group formula",
    "R9": "module reduced length sandwich l'(M) <= cb < l'(M) + w",
    "R10": "split d-generated metabelian groups have cb < w^d",
    "R11": "d-generated bound and abelianization-rank bound",
    "R12": "finite group acting on an invariant ideal of a domain",
    "AF": "Z^k by finite: number of rational irreducible constituents",
    "VF": "finite group action bounds on the top coefficient",
    "CBLP": "rank equals reduced length under max-n with residually finite quotients",
    "CB+1": "rank of the space of normal subgroups is cb + 1",
    "FP": "finitely presented groups have equal intrinsic and external rank",
    "WRC": "wreath products with infinitely many diagonal orbits condense",
}


@dataclass(frozen=True)
class TraceStep:
    rule: str
    citation: str
    value: object
    note: str = ""

    def to_json(self):
        v = self.value
        return {
            "rule": self.rule,
            "citation": self.citation,
            "value": format_rank(v),
            "note": self.note,
        }

    def __str__(self):
        s = f"{self.rule:<5} {format_rank(self.value)}  -- {self.citation}"
        return f"{s} ({self.note})" if self.note else s


@dataclass
class DerivationTrace:
    steps: list = field(default_factory=list)

    def add(self, rule: str, value, note: str = ""):
        self.steps.append(TraceStep(rule, RULES[rule], value, note))
        return value

    @property
    def final(self):
        return self.steps[-1].value if self.steps else None

    @property
    def rules(self) -> list:
        return [s.rule for s in self.steps]

    def to_json(self):
        return [s.to_json() for s in self.steps]

    def __str__(self):
        return "\n".join(str(s) for s in self.steps)

    def __iter__(self):
        return iter(self.steps)

    def __len__(self):
        return len(self.steps)


# -- helpers -----------------------------------------------------------------------

def delta(m: int) -> int:
    """Number of prime factors of ``m`` counted with multiplicity."""
    if m < 1:
        raise ValueError("delta is defined for positive integers")
    count, p = 0, 2
    while p * p <= m:
        while m % p == 0:
            m //= p
            count += 1
        p += 1 if p == 2 else 2
    return count + (1 if m > 1 else 0)


def hirsch_length(g: Polycyclic) -> int:
    """Sum of the torsion-free ranks of the factors."""
    return sum(f.rank for f in g.factors)


def metabelian_model(g) -> MetabelianExt:
    """Express a wreath product or free metabelian group as an extension descriptor."""
    if isinstance(g, MetabelianExt):
        return g
    if isinstance(g, FreeMetabelian):
        d = g.d
        return MetabelianExt(TorsionFree(d + 1, d - 1), q_rank=d, split=False, generators=d,
                             faithful=True, module_contains_centralizer=True)
    if isinstance(g, Wreath):
        d = g.top_rank
        if isinstance(g.base, FreeAbelian):
            k = g.base.rank
            module = TorsionFree(d + 1, k)
            gens = k + d
        else:
            k = delta(g.base.order)
            module = Series(*[Critical(d)] * k) if d >= 1 else Finite(k)
            gens = 1 + d
        return MetabelianExt(module, q_rank=d, split=True, generators=gens,
                             faithful=True, module_contains_centralizer=True)
    raise DescriptorError(f"{type(g).__name__} has no metabelian model")


def _as_interval(x) -> OrdinalInterval:
    return x if isinstance(x, OrdinalInterval) else OrdinalInterval.exactly(x)


def _caps(g: MetabelianExt):
    caps = []
    caps.append(("R11", OrdinalInterval(ZERO, omega_power(g.q_rank + 1), True), f"Q-rank {g.q_rank}"))
    if g.generators is not None:
        d = g.generators
        if g.split:
            caps.append(("R10", OrdinalInterval(ZERO, omega_power(d), True), f"split, {d} generators"))
        if d >= 2:
            caps.append(("R11", OrdinalInterval(ZERO, omega_power(d, d - 1)), f"{d} generators"))
    return caps


def _apply_caps(value: OrdinalInterval, g: MetabelianExt, trace: DerivationTrace) -> OrdinalInterval:
    for rule, cap, note in _caps(g):
        if value.exact:
            if value.value not in cap:
                raise DescriptorError(f"inconsistent flags: {value} violates {rule} bound {cap} ({note})")
            continue
        try:
            new = value.intersect(cap)
        except ValueError:
            raise DescriptorError(f"inconsistent flags: {value} is disjoint from {rule} bound {cap} ({note})") from None
        if new != value:
            value = trace.add(rule, new, note)
    return value


def _module_w_zero(module) -> Optional[bool]:
    try:
        w, _ = w_split(module)
    except NotComputable:
        return None
    return w == ZERO_MODULE


def _metabelian(g: MetabelianExt, trace: DerivationTrace, exact_rules: bool) -> OrdinalInterval:
    lp = reduced_length(g.module)
    if g.prime_quotient is not None:
        d, r = g.prime_quotient
        if d >= 2 and lp.exact and lp.value != omega_power(d - 1, r):
            raise DescriptorError(
                f"prime quotient of dimension {d}, rank {r} needs module reduced length "
                f"{format_ordinal(omega_power(d - 1, r))}, descriptor gives {lp}")
    if exact_rules:
        if g.prime_quotient is not None and g.faithful and g.prime_quotient[0] >= 2:
            d, r = g.prime_quotient
            v = trace.add("R7", OrdinalInterval.exactly(omega_power(d - 1, r)), f"coheight {d}, rank {r}")
            return _apply_caps(v, g, trace)
        w_zero = _module_w_zero(g.module)
        if g.module_contains_centralizer and w_zero and lp.exact:
            v = trace.add("R5", lp)
            return _apply_caps(v, g, trace)
        if w_zero is not None:
            w, rest = w_split(g.module)
            rest_lp = reduced_length(rest)
            if g.faithful and w_zero and rest_lp.exact:
                v = trace.add("R6", rest_lp, "faithful action, W(M) = 0: Hir(G) trivial")
                return _apply_caps(v, g, trace)
            if rest == ZERO_MODULE and lp.exact and g.q_torsion_free:
                total = add(lp.value, g.q_rank)
                v = trace.add("R6", OrdinalInterval.exactly(total), "M = W(M): G is its own Hirsch radical")
                return _apply_caps(v, g, trace)
    v = trace.add("R9", OrdinalInterval(lp.lower, add(lp.upper, OMEGA), True))
    return _apply_caps(v, g, trace)


def _polycyclic(g: Polycyclic, trace: DerivationTrace, exact_rules: bool) -> OrdinalInterval:
    h = hirsch_length(g)
    if exact_rules and (g.supersolvable or g.nilpotent):
        return trace.add("R1", OrdinalInterval.exactly(h), f"h = {h}")
    infinite = sum(1 for f in g.factors if f.rank > 0)
    return trace.add("R2", OrdinalInterval(Ordinal.from_int(infinite), Ordinal.from_int(h)),
                     f"{infinite} infinite factors, h = {h}")


def _wreath(g: Wreath, trace: DerivationTrace) -> OrdinalInterval:
    d = g.top_rank
    if isinstance(g.base, FreeAbelian):
        k = g.base.rank
        return trace.add("R3", OrdinalInterval.exactly(omega_power(d, k)), f"k = {k}, d = {d}")
    m = g.base.order
    dm = delta(m)
    if d >= 2:
        v = omega_power(d - 1, dm)
    elif d == 1:
        v = Ordinal.from_int(dm + 1)
    else:
        v = ZERO
    return trace.add("R4", OrdinalInterval.exactly(v), f"delta({m}) = {dm}, top rank {d}")


def _virtually(g: VirtuallyMetabelian, trace: DerivationTrace, exact_rules: bool) -> OrdinalInterval:
    inner = metabelian_model(g.inner)
    lp = reduced_length(inner.module)
    w_zero = _module_w_zero(inner.module)
    own_centralizer = inner.module_contains_centralizer and w_zero
    if exact_rules and own_centralizer:
        if g.invariant_ideal_dim is not None:
            fa = finite_action_bounds(inner.module, g.index, g.invariant_ideal_dim)
            return trace.add("R12", fa.interval, f"ideal in a domain of dimension {g.invariant_ideal_dim}, index {g.index}")
        if lp.exact:
            fa = finite_action_bounds(inner.module, g.index)
            return trace.add("VF", fa.interval, f"index {g.index}, top coefficient in {list(fa.coefficient_range)}")
    if not exact_rules:
        lower = ZERO
        if lp.exact:
            lower = finite_action_bounds(inner.module, g.index).interval.lower
        return trace.add("R9", OrdinalInterval(lower, add(lp.upper, OMEGA), True), "envelope of the metabelian subgroup")
    raise NotComputable("virtually metabelian group without centralizer information")


def reduced_length_group(g: GroupDescriptor, exact_rules: bool = True):
    """Reduced length of ``g`` as ``(OrdinalInterval, DerivationTrace)``.

    With ``exact_rules=False`` only the interval rules (R2, R9 and the caps)
    are used, which gives the envelope every exact answer must lie in.
    """
    trace = DerivationTrace()
    if not isinstance(g, _GROUP_NODES):
        raise DescriptorError(f"not a group descriptor: {g!r}")
    if isinstance(g, Polycyclic):
        return _polycyclic(g, trace, exact_rules), trace
    if isinstance(g, FreeAbelianByFinite):
        if exact_rules:
            return trace.add("AF", OrdinalInterval.exactly(g.irreducibles), f"rank {g.rank}"), trace
        return trace.add("R2", OrdinalInterval(Ordinal.from_int(min(1, g.rank)), Ordinal.from_int(g.rank))), trace
    if isinstance(g, WreathPermutational):
        raise NotComputable("no rank rule for permutational wreath products")
    if isinstance(g, VirtuallyMetabelian):
        return _virtually(g, trace, exact_rules), trace
    if exact_rules and isinstance(g, Wreath):
        v = _wreath(g, trace)
        return _apply_caps(v, metabelian_model(g), trace), trace
    if exact_rules and isinstance(g, FreeMetabelian):
        v = trace.add("R8", OrdinalInterval.exactly(omega_power(g.d, g.d - 1)), f"d = {g.d}")
        return _apply_caps(v, metabelian_model(g), trace), trace
    return _metabelian(metabelian_model(g), trace, exact_rules), trace


def _check_class(g):
    if isinstance(g, WreathPermutational):
        raise HypothesisNotEstablished(
            "permutational wreath products need not satisfy max-n; the rank bridge does not apply")
    if not isinstance(g, _GROUP_NODES):
        raise DescriptorError(f"not a group descriptor: {g!r}")


def cb_rank(g: GroupDescriptor, exact_rules: bool = True):
    """Cantor-Bendixson rank of the trivial subgroup among normal subgroups of ``g``.

    Returns ``(value, trace)`` where ``value`` is an :class:`Ordinal` when the
    rules pin it down and an :class:`OrdinalInterval` otherwise.
    """
    _check_class(g)
    iv, trace = reduced_length_group(g, exact_rules)
    value = iv.value if iv.exact else iv
    trace.add("CBLP", value)
    return value, trace


def cb_space(g: GroupDescriptor):
    """Cantor-Bendixson rank of the whole space of normal subgroups: cb + 1."""
    value, _ = cb_rank(g)
    if isinstance(value, OrdinalInterval):
        raise AmbiguousBound(f"cb is only known to lie in {value}")
    return add(value, ONE)


def cb_external(g: GroupDescriptor, finitely_presented=None):
    """Rank of ``g`` as a point of the space of marked groups.

    ``finitely_presented`` is a verdict from elsewhere (catalog or Bieri-Strebel
    check); ``None`` means unknown.  Returns an ordinal, an interval, ``COND``
    or ``UNKNOWN``.
    """
    if isinstance(g, WreathPermutational):
        if g.base_nontrivial and g.diag_orbits_infinite:
            return COND
        return UNKNOWN
    if finitely_presented is True:
        value, _ = cb_rank(g)
        return value
    return UNKNOWN
