"""Bieri-Strebel invariant Γ(M) for modules built from Z[u, (u+u^2)^-1].

``Q = Z^2`` acts on the classical ring by ``(m, n) . P = P u^m (1+u)^n``.
A character ``v`` of ``Q`` lies in Γ(M) when M is not finitely generated
over the monoid ring of ``Q_v = {q : v(q) >= 0}``.  Two kinds of evidence
are produced here, both re-checkable with exact arithmetic:

* a certificate: a valuation on M that is nonnegative on ``Q_v`` but takes
  arbitrarily negative values on M (so ``v`` is in Γ);
* a witness: ``q`` with ``v(q) < 0`` and ``q . 1`` an explicit integer
  combination of ``p . 1`` with ``v(p) >= 0`` (so ``qV ⊂ V`` and ``v`` is
  not in Γ).

The witness search is only a semidecision and gives up with
:class:`Inconclusive` once the exponent window is exhausted.
"""

from __future__ import annotations

import math
import os
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence, Union

from .errors import NotComputable
from .hnf import IntegerLattice
from .laurent import LaurentElement, LaurentRing, ord_onepu, ord_u, top_deg

__all__ = [
    "Character",
    "normalize_ray",
    "parse_ray",
    "ClassicalRing",
    "Tensor",
    "GroupRing",
    "ExplicitFan",
    "tensor_power",
    "CLASSICAL_FAN",
    "ORDER_THREE_MATRIX",
    "gamma_rays",
    "ProductBound",
    "gamma_outer_bound",
    "Certificate",
    "Witness",
    "InGamma",
    "NotInGamma",
    "Inconclusive",
    "in_gamma_certificate",
    "verify_certificate",
    "not_in_gamma_witness",
    "verify_witness",
    "gamma_verdict",
    "GammaPM",
    "gamma_pm",
    "FPVerdict",
    "finitely_presented",
    "fp_full_projection_subgroup",
    "fp_finite_index_overgroup",
    "ray_sweep",
    "default_window",
    "module_to_json",
    "module_from_json",
    "verdict_from_json",
    "format_module",
    "CLASSICAL_IDENTITIES",
]

DEFAULT_WINDOW = 12


def default_window() -> int:
    raw = os.environ.get("CBCALC_WINDOW")
    if raw:
        try:
            w = int(raw)
        except ValueError:
            raise ValueError(f"CBCALC_WINDOW must be a positive integer, got {raw!r}") from None
        if w < 1:
            raise ValueError(f"CBCALC_WINDOW must be a positive integer, got {raw!r}")
        return w
    return DEFAULT_WINDOW


# -- characters ------------------------------------------------------------------------

def normalize_ray(v: Sequence) -> tuple:
    """Primitive integer vector on the same open ray as ``v``."""
    fr = [Fraction(x) for x in v]
    if not any(fr):
        raise ValueError("the zero character has no ray")
    den = 1
    for x in fr:
        den = den * x.denominator // math.gcd(den, x.denominator)
    ints = [int(x * den) for x in fr]
    g = 0
    for x in ints:
        g = math.gcd(g, x)
    return tuple(x // g for x in ints)


@dataclass(frozen=True)
class Character:
    """A homomorphism ``Q = Z^n -> Q`` given by rational coefficients."""

    coefficients: tuple

    def __init__(self, coefficients):
        object.__setattr__(self, "coefficients", tuple(Fraction(c) for c in coefficients))

    @property
    def rank(self) -> int:
        return len(self.coefficients)

    def is_zero(self) -> bool:
        return not any(self.coefficients)

    @property
    def ray(self) -> tuple:
        return normalize_ray(self.coefficients)

    def __call__(self, q: Sequence[int]) -> Fraction:
        return sum((c * x for c, x in zip(self.coefficients, q)), Fraction(0))


def parse_ray(text: str) -> tuple:
    """``"a,b,..."`` with rational entries (``3/2`` allowed) to a primitive ray."""
    try:
        parts = [Fraction(p.strip()) for p in text.split(",")]
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"bad ray {text!r}: expected comma-separated rationals") from None
    return normalize_ray(parts)


def _dot(v, q):
    return sum(a * b for a, b in zip(v, q))


# -- modules --------------------------------------------------------------------------

@dataclass(frozen=True)
class ClassicalRing:
    """``Z[u, (u+u^2)^-1]`` (optionally with coefficients mod ``modulus``), Q = Z^2."""

    modulus: Optional[int] = None

    def __post_init__(self):
        if self.modulus is not None and self.modulus < 2:
            raise ValueError("coefficient modulus must be at least 2")

    @property
    def q_rank(self) -> int:
        return 2


@dataclass(frozen=True)
class Tensor:
    """Tensor product over Z; Q is the product of the children's groups."""

    children: tuple

    def __init__(self, *children):
        if len(children) == 1 and isinstance(children[0], (list, tuple)):
            children = tuple(children[0])
        if not children:
            raise ValueError("a tensor product needs at least one factor")
        object.__setattr__(self, "children", tuple(children))

    @property
    def q_rank(self) -> int:
        return sum(c.q_rank for c in self.children)


@dataclass(frozen=True)
class GroupRing:
    """The free module ``Z[Z^rank]``; Γ is the whole character space."""

    rank: int
    modulus: Optional[int] = None

    @property
    def q_rank(self) -> int:
        return self.rank


@dataclass(frozen=True)
class ExplicitFan:
    """Synthetic module whose Γ is declared, used to exercise the fp logic."""

    rank: int
    rays: frozenset = field(default_factory=frozenset)

    def __init__(self, rank, rays=()):
        object.__setattr__(self, "rank", rank)
        object.__setattr__(self, "rays", frozenset(normalize_ray(r) for r in rays))

    @property
    def q_rank(self) -> int:
        return self.rank


BSModule = Union[ClassicalRing, Tensor, GroupRing, ExplicitFan]


def tensor_power(d: int, modulus: Optional[int] = None) -> Tensor:
    """The ring ``A_d`` seen as the ``d``-fold tensor power of the classical ring."""
    if d < 1:
        raise ValueError("need d >= 1")
    return Tensor(*[ClassicalRing(modulus)] * d)


def _leaves(m) -> list:
    if isinstance(m, Tensor):
        out = []
        for c in m.children:
            out.extend(_leaves(c))
        return out
    return [m]


def _classical_leaves(m):
    leaves = _leaves(m)
    if all(isinstance(x, ClassicalRing) for x in leaves):
        return leaves
    return None


def _common_modulus(leaves):
    mods = {x.modulus for x in leaves}
    if len(mods) != 1:
        # Z/k ⊗ Z/l = Z/gcd(k, l); Z ⊗ Z/k = Z/k
        g = 0
        for x in mods:
            g = math.gcd(g, x or 0)
        return g or None
    return mods.pop()


def format_module(m) -> str:
    if isinstance(m, ClassicalRing):
        return "classical" if m.modulus is None else f"classical(mod={m.modulus})"
    if isinstance(m, Tensor):
        return "tensor(" + ", ".join(format_module(c) for c in m.children) + ")"
    if isinstance(m, GroupRing):
        return f"groupring({m.rank})" if m.modulus is None else f"groupring({m.rank}, mod={m.modulus})"
    if isinstance(m, ExplicitFan):
        rays = ", ".join("(" + ",".join(map(str, r)) + ")" for r in sorted(m.rays))
        return f"fan(rank={m.rank}, rays=[{rays}])"
    raise TypeError(f"not a Bieri-Strebel module: {m!r}")


def module_to_json(m):
    if isinstance(m, ClassicalRing):
        return {"kind": "classical", "modulus": m.modulus}
    if isinstance(m, Tensor):
        return {"kind": "tensor", "children": [module_to_json(c) for c in m.children]}
    if isinstance(m, GroupRing):
        return {"kind": "groupring", "rank": m.rank, "modulus": m.modulus}
    if isinstance(m, ExplicitFan):
        return {"kind": "fan", "rank": m.rank, "rays": [list(r) for r in sorted(m.rays)]}
    raise TypeError(f"not a Bieri-Strebel module: {m!r}")


def module_from_json(obj):
    kind = obj["kind"]
    if kind == "classical":
        return ClassicalRing(obj.get("modulus"))
    if kind == "tensor":
        return Tensor(*[module_from_json(c) for c in obj["children"]])
    if kind == "groupring":
        return GroupRing(obj["rank"], obj.get("modulus"))
    if kind == "fan":
        return ExplicitFan(obj["rank"], [tuple(r) for r in obj["rays"]])
    raise ValueError(f"unknown module kind {kind!r}")


# -- the classical fan ------------------------------------------------------------------

CLASSICAL_FAN = frozenset({(1, 0), (0, 1), (-1, -1)})

# exponent action of u -> -(1+u)/u on (m, n) row vectors
ORDER_THREE_MATRIX = ((-1, 1), (-1, 0))

# exact identities behind the (1,1) case: (lhs, rhs) in one variable
CLASSICAL_IDENTITIES = (
    ("1/(1+u)", "u^2/(1+u) - (1+u) + 2"),
    ("1/u", "(1+u)^2/u - 2 - u"),
)

# ray -> (valuation name, exponent (m, n) of the family generator)
_CERTS = {
    (1, 0): ("ord_u", (-1, 0)),
    (0, 1): ("ord_onepu", (0, -1)),
    (-1, -1): ("neg_top_deg", (1, 0)),
}

_VALUATIONS = {
    "ord_u": lambda a, i: ord_u(a, i),
    "ord_onepu": lambda a, i: ord_onepu(a, i),
    "neg_top_deg": lambda a, i: -top_deg(a, i),
}


def gamma_rays(m) -> frozenset:
    """The rays of Γ(M) (the zero character is implicit)."""
    if isinstance(m, ClassicalRing):
        return CLASSICAL_FAN
    if isinstance(m, ExplicitFan):
        return m.rays
    if isinstance(m, Tensor) and len(m.children) == 1:
        return gamma_rays(m.children[0])
    if isinstance(m, GroupRing):
        raise NotComputable("Γ of a free group ring is the whole character space; use gamma_pm")
    raise NotComputable("only an outer bound is known for tensor products; use gamma_outer_bound")


@dataclass(frozen=True)
class ProductBound:
    """Outer bound ``Γ(M) ⊂ Γ(M_1) × ... × Γ(M_k)`` over the flattened factors.

    ``factors[i]`` is a frozenset of rays, or None when the factor's Γ is the
    whole space.  ``exact`` is True only for a single factor.
    """

    factors: tuple
    ranks: tuple
    exact: bool

    def blocks(self, v):
        out, pos = [], 0
        for r in self.ranks:
            out.append(tuple(v[pos:pos + r]))
            pos += r
        return out

    def __contains__(self, v) -> bool:
        if len(v) != sum(self.ranks):
            raise ValueError("character has the wrong rank")
        for fac, blk in zip(self.factors, self.blocks(v)):
            if not any(blk) or fac is None:
                continue
            if normalize_ray(blk) not in fac:
                return False
        return True

    def to_json(self):
        return {
            "kind": "outer-bound" if not self.exact else "exact",
            "factors": [None if f is None else [list(r) for r in sorted(f)] for f in self.factors],
            "ranks": list(self.ranks),
        }


def gamma_outer_bound(m) -> ProductBound:
    leaves = _leaves(m)
    factors = []
    for x in leaves:
        if isinstance(x, GroupRing):
            factors.append(None)
        else:
            factors.append(gamma_rays(x))
    return ProductBound(tuple(factors), tuple(x.q_rank for x in leaves), len(leaves) == 1)


# -- verdict records --------------------------------------------------------------------

@dataclass(frozen=True)
class Certificate:
    """A valuation showing ``ray`` is in Γ.

    ``valuation`` is applied to variable ``leaf``; ``family`` is the exponent
    vector of a monomial whose powers have unbounded negative value.
    """

    ray: tuple
    valuation: str
    functional: tuple
    leaf: int
    family: tuple

    def to_json(self):
        return {
            "ray": list(self.ray),
            "valuation": self.valuation,
            "functional": list(self.functional),
            "leaf": self.leaf,
            "family": list(self.family),
        }

    @classmethod
    def from_json(cls, obj):
        return cls(tuple(obj["ray"]), obj["valuation"], tuple(obj["functional"]), obj["leaf"], tuple(obj["family"]))

    def describe(self) -> str:
        name = {"ord_u": "ord_u", "ord_onepu": "ord_{1+u}", "neg_top_deg": "-top_deg", "support": "support-min", "declared": "declared"}[self.valuation]
        return f"{name} on factor {self.leaf + 1}, family q^k with q = {list(self.family)}"


@dataclass(frozen=True)
class Witness:
    """``q . 1 = sum c * p . 1`` with ``v(q) < 0 <= v(p)`` (mod ``modulus`` if set)."""

    ray: tuple
    q: tuple
    combination: tuple  # ((p exponent tuple, integer coefficient), ...)
    window: int
    modulus: Optional[int] = None
    declared: bool = False

    def to_json(self):
        return {
            "ray": list(self.ray),
            "q": None if self.q is None else list(self.q),
            "combination": [[list(p), c] for p, c in self.combination],
            "window": self.window,
            "modulus": self.modulus,
            "declared": self.declared,
        }

    @classmethod
    def from_json(cls, obj):
        return cls(
            tuple(obj["ray"]),
            None if obj["q"] is None else tuple(obj["q"]),
            tuple((tuple(p), c) for p, c in obj["combination"]),
            obj["window"],
            obj.get("modulus"),
            obj.get("declared", False),
        )


@dataclass(frozen=True)
class InGamma:
    ray: tuple
    certificate: Certificate
    verdict = "InGamma"

    def to_json(self):
        return {"verdict": self.verdict, "ray": list(self.ray), "certificate": self.certificate.to_json()}


@dataclass(frozen=True)
class NotInGamma:
    ray: tuple
    witness: Witness
    verdict = "NotInGamma"

    def to_json(self):
        return {"verdict": self.verdict, "ray": list(self.ray), "witness": self.witness.to_json()}


@dataclass(frozen=True)
class Inconclusive:
    ray: tuple
    window: int
    reason: str = "window exhausted"
    verdict = "Inconclusive"

    def to_json(self):
        return {"verdict": self.verdict, "ray": list(self.ray), "window": self.window, "reason": self.reason}


def verdict_from_json(obj):
    kind = obj["verdict"]
    ray = tuple(obj["ray"])
    if kind == "InGamma":
        return InGamma(ray, Certificate.from_json(obj["certificate"]))
    if kind == "NotInGamma":
        return NotInGamma(ray, Witness.from_json(obj["witness"]))
    if kind == "Inconclusive":
        return Inconclusive(ray, obj["window"], obj.get("reason", "window exhausted"))
    raise ValueError(f"unknown verdict {kind!r}")


# -- certificates -----------------------------------------------------------------------

def _check_rank(m, v):
    if len(v) != m.q_rank:
        raise ValueError(f"character of rank {len(v)} for a module with Q of rank {m.q_rank}")


def in_gamma_certificate(m, v) -> Optional[Certificate]:
    """Valuation certificate for ``v ∈ Γ(M)``, or None if none applies."""
    _check_rank(m, v)
    ray = normalize_ray(v)
    if isinstance(m, ExplicitFan):
        return Certificate(ray, "declared", ray, 0, ()) if ray in m.rays else None
    if isinstance(m, GroupRing):
        # every character: the minimum of v over the support is a valuation
        return Certificate(ray, "support", ray, 0, tuple(-x for x in ray))
    leaves = _classical_leaves(m)
    if leaves is None:
        return None
    blocks = [ray[2 * i:2 * i + 2] for i in range(len(leaves))]
    support = [i for i, b in enumerate(blocks) if any(b)]
    if len(support) != 1:
        return None
    i = support[0]
    sub = normalize_ray(blocks[i])
    if sub not in _CERTS:
        return None
    name, fam = _CERTS[sub]
    family = [0] * len(ray)
    family[2 * i:2 * i + 2] = fam
    return Certificate(ray, name, ray, i, tuple(family))


def _monomial(ring: LaurentRing, q) -> LaurentElement:
    return ring.monomial(q[0::2], q[1::2])


def verify_certificate(m, cert: Certificate, samples: int = 100, seed: int = 0, family_terms: int = 6) -> bool:
    """Independent check of a certificate with exact arithmetic."""
    if cert.valuation == "declared":
        return isinstance(m, ExplicitFan) and cert.ray in m.rays
    ray = cert.ray
    rng = random.Random(seed)
    if cert.valuation == "support":
        if not isinstance(m, GroupRing):
            return False
        # support valuation of a monomial is v(exponent); family q^k has v = k v(family) -> -inf
        if _dot(ray, cert.family) >= 0:
            return False
        return True
    leaves = _classical_leaves(m)
    if leaves is None or not 0 <= cert.leaf < len(leaves):
        return False
    ring = LaurentRing(len(leaves))
    w = _VALUATIONS.get(cert.valuation)
    if w is None:
        return False
    i = cert.leaf
    # the induced functional on Q, read off on generators u_j and 1+u_j
    functional = []
    for j in range(len(leaves)):
        functional.append(w(ring.u(j), i))
        functional.append(w(ring.onepu(j), i))
    if normalize_ray(functional) != ray:
        return False
    # nonnegative on sampled monomials of Q_v
    checked = 0
    while checked < samples:
        q = tuple(rng.randint(-20, 20) for _ in ray)
        if _dot(ray, q) < 0:
            continue
        if w(_monomial(ring, q), i) < 0:
            return False
        checked += 1
    # family with unbounded negative values
    base = _monomial(ring, cert.family)
    step = w(base, i)
    if step >= 0:
        return False
    for k in range(1, family_terms + 1):
        if w(base ** k, i) != k * step:
            return False
    return True


# -- witnesses ---------------------------------------------------------------------------

def _binom_row(n):
    row = [1]
    for k in range(n):
        row.append(row[-1] * (n - k) // (k + 1))
    return row


class _ClassicalSearch:
    """Incremental Z-span search in one variable with a fixed exponent offset."""

    def __init__(self, ray, cap: int, modulus: Optional[int]):
        self.ray = ray
        self.cap = cap
        self.modulus = modulus
        self.length = 4 * cap + 1
        self.lattice = IntegerLattice(self.length)
        self.seen = set()
        if modulus:
            for j in range(self.length):
                vec = [0] * self.length
                vec[j] = modulus
                self.lattice.add(vec, ("mod", j))

    def vector(self, m, n):
        # u^(m+cap) (1+u)^(n+cap)
        a, b = m + self.cap, n + self.cap
        vec = [0] * self.length
        for j, c in enumerate(_binom_row(b)):
            vec[a + j] = c
        return vec

    def grow(self, window):
        ray = self.ray
        for m in range(-window, window + 1):
            for n in range(-window, window + 1):
                if (m, n) in self.seen or ray[0] * m + ray[1] * n < 0:
                    continue
                self.seen.add((m, n))
                self.lattice.add(self.vector(m, n), (m, n))

    def find(self, window):
        ray = self.ray
        cands = [
            (m, n)
            for m in range(-window, window + 1)
            for n in range(-window, window + 1)
            if ray[0] * m + ray[1] * n < 0
        ]
        cands.sort(key=lambda q: (abs(q[0]) + abs(q[1]), q))
        for q in cands:
            sol = self.lattice.solve(self.vector(*q))
            if sol is not None:
                comb = tuple(sorted((p, c) for p, c in sol.items() if not (isinstance(p[0], str))))
                return q, comb
        return None


def _classical_witness(ray, window, modulus, start=1):
    search = _ClassicalSearch(ray, window, modulus)
    for w in range(start, window + 1):
        search.grow(w)
        found = search.find(w)
        if found is not None:
            return found[0], found[1], w
    return None


def not_in_gamma_witness(m, v, window: Optional[int] = None, *, verify: bool = True):
    """Search for a witness of ``v ∉ Γ(M)`` by iterative deepening up to ``window``."""
    _check_rank(m, v)
    window = default_window() if window is None else window
    if window < 1:
        raise ValueError("window must be at least 1")
    ray = normalize_ray(v)
    if isinstance(m, ExplicitFan):
        if ray in m.rays:
            return Inconclusive(ray, window, "declared ray of Γ")
        return NotInGamma(ray, Witness(ray, None, (), window, None, declared=True))
    if isinstance(m, GroupRing):
        return Inconclusive(ray, window, "Γ of a free group ring is the whole space")
    leaves = _classical_leaves(m)
    if leaves is None:
        return Inconclusive(ray, window, "no witness search for this module kind")
    modulus = _common_modulus(leaves)
    for i in range(len(leaves)):
        block = ray[2 * i:2 * i + 2]
        if not any(block):
            continue
        sub = normalize_ray(block)
        if sub in CLASSICAL_FAN:
            continue
        found = _classical_witness(sub, window, modulus)
        if found is None:
            continue
        q, comb, used = found
        q_full = _embed(q, i, len(leaves))
        comb_full = tuple((_embed(p, i, len(leaves)), c) for p, c in comb)
        wit = Witness(ray, q_full, comb_full, used, modulus)
        if verify and not verify_witness(m, wit):
            raise AssertionError(f"internal error: witness for {ray} failed re-verification")
        return NotInGamma(ray, wit)
    reason = "window exhausted"
    if len(leaves) > 1 and ray in gamma_outer_bound(m):
        reason = "inside the product outer bound; only Γ± is decided for tensors"
    return Inconclusive(ray, window, reason)


def _embed(p, i, k):
    out = [0] * (2 * k)
    out[2 * i:2 * i + 2] = p
    return tuple(out)


def verify_witness(m, wit: Witness) -> bool:
    """Recompute a witness identity with exact Laurent arithmetic."""
    if wit.declared:
        return isinstance(m, ExplicitFan) and wit.ray not in m.rays
    leaves = _classical_leaves(m)
    if leaves is None or wit.q is None:
        return False
    ray = wit.ray
    if len(wit.q) != m.q_rank or _dot(ray, wit.q) >= 0:
        return False
    for p, _ in wit.combination:
        if len(p) != m.q_rank or _dot(ray, p) < 0:
            return False
    ring = LaurentRing(len(leaves))
    diff = _monomial(ring, wit.q)
    for p, c in wit.combination:
        diff = diff - c * _monomial(ring, p)
    modulus = _common_modulus(leaves)
    if modulus != wit.modulus:
        return False
    if modulus is None:
        return diff.is_zero()
    return all(c % modulus == 0 for c in diff.num.values())


def gamma_verdict(m, v, window: Optional[int] = None):
    """Certificate if one applies, otherwise a witness search."""
    cert = in_gamma_certificate(m, v)
    if cert is not None:
        return InGamma(cert.ray, cert)
    return not_in_gamma_witness(m, v, window)


# -- Γ± and finite presentability -------------------------------------------------------

@dataclass(frozen=True)
class GammaPM:
    status: str  # "Zero" | "NonZero" | "Unknown"
    pair: Optional[tuple] = None
    reason: str = ""

    def to_json(self):
        return {"status": self.status, "pair": None if self.pair is None else [list(r) for r in self.pair], "reason": self.reason}


def gamma_pm(m) -> GammaPM:
    if isinstance(m, ClassicalRing):
        return GammaPM("Zero", reason="three-ray fan has no antipodal pair")
    if isinstance(m, ExplicitFan):
        for r in sorted(m.rays):
            neg = tuple(-x for x in r)
            if neg in m.rays:
                return GammaPM("NonZero", (r, neg), "declared fan contains an antipodal pair")
        return GammaPM("Zero", reason="declared fan has no antipodal pair")
    if isinstance(m, GroupRing):
        e = tuple(1 if i == 0 else 0 for i in range(m.rank))
        return GammaPM("NonZero", (e, tuple(-x for x in e)), "Γ is the whole space")
    if isinstance(m, Tensor):
        subs = [gamma_pm(c) for c in m.children]
        if len(subs) == 1:
            return subs[0]
        if all(s.status == "Zero" for s in subs):
            return GammaPM("Zero", reason="tensor of factors with trivial Γ±")
        return GammaPM("Unknown", reason="a factor has nontrivial or unknown Γ±")
    raise TypeError(f"not a Bieri-Strebel module: {m!r}")


@dataclass(frozen=True)
class FPVerdict:
    status: str  # "Yes" | "No" | "Unknown"
    chain: tuple = ()

    def __bool__(self):
        return self.status == "Yes"

    def to_json(self):
        return {"finitely_presented": self.status, "chain": list(self.chain)}


def finitely_presented(m) -> FPVerdict:
    """Verdict for a metabelian extension of Q by the module ``m``.

    Finitely presented exactly when Γ±(M) = {0} (Bieri-Strebel).
    """
    pm = m if isinstance(m, GammaPM) else gamma_pm(m)
    if pm.status == "Zero":
        return FPVerdict("Yes", (f"Γ± = {{0}}: {pm.reason}",))
    if pm.status == "NonZero":
        return FPVerdict("No", (f"Γ± contains {list(pm.pair[0])} and {list(pm.pair[1])}",))
    return FPVerdict("Unknown", (pm.reason,))


def fp_full_projection_subgroup(parent: FPVerdict, note: str = "") -> FPVerdict:
    """A subgroup mapping onto Q inherits finite presentation from the group."""
    step = "subgroup surjecting onto the abelian quotient" + (f" ({note})" if note else "")
    if parent.status == "Yes":
        return FPVerdict("Yes", parent.chain + (step,))
    return FPVerdict("Unknown", parent.chain + (step + ": parent not known to be finitely presented",))


def fp_finite_index_overgroup(sub: FPVerdict, note: str = "") -> FPVerdict:
    """Finite presentation passes between a group and its finite-index subgroups."""
    step = "finite-index overgroup" + (f" ({note})" if note else "")
    return FPVerdict(sub.status, sub.chain + (step,))


# -- sweeps -----------------------------------------------------------------------------

def ray_sweep(count: int = 360, radius: int = 1000) -> list:
    """Primitive rays at ``count`` equally spaced angles (rounded, deduplicated)."""
    out, seen = [], set()
    for k in range(count):
        t = 2 * math.pi * k / count
        r = normalize_ray((round(radius * math.cos(t)), round(radius * math.sin(t))))
        if r not in seen:
            seen.add(r)
            out.append(r)
    return out
