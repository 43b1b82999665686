"""Brute-force verifiers on finite instances.

A finite abelian group is ``Z^k / R`` for a full-rank relation lattice R;
its subgroups are the lattices L with ``R ⊂ L ⊂ Z^k``, stored in Hermite
normal form so each has exactly one key.  An action is a list of integer
matrices acting on row vectors.  Lengths are computed from the definition:
``l(M/L) = max l(M/L') + 1`` over ``L' ⊋ L``.  Only principal (cyclic)
submodules ``L' = L + <x>`` are tried, which gives the same maximum because
every nonzero submodule contains a principal one and length can only grow
when the submodule shrinks.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

from . import ordinal as O
from .errors import TooLarge
from .grouprank import delta
from .hnf import IntegerLattice, hnf, smith_invariants

__all__ = [
    "MAX_ORDER",
    "FiniteModuleInstance",
    "Report",
    "exhaustive_length",
    "quotient_lengths",
    "abelian_groups",
    "check_delta",
    "check_ext_bounds",
    "check_convex_realization",
    "check_finite_action_bounds",
    "finite_action_case",
    "recheck_sigma_artifacts",
    "recheck_ordinal_laws",
    "recursive_natural_sum_table",
    "random_ordinal",
    "SUITES",
    "run_suite",
]

MAX_ORDER = 2 ** 14


@dataclass(frozen=True)
class Report:
    suite: str
    cases: int
    violations: tuple = ()
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_json(self):
        return {
            "suite": self.suite,
            "passed": self.passed,
            "cases": self.cases,
            "violations": list(self.violations),
            "details": self.details,
        }

    def __str__(self):
        status = "PASS" if self.passed else "FAIL"
        s = f"{self.suite}: {status} ({self.cases} cases, {len(self.violations)} violations)"
        for v in self.violations[:5]:
            s += f"\n  {v}"
        return s


# -- instances ----------------------------------------------------------------------------

def _key(rows) -> tuple:
    return tuple(hnf(rows))


def _reduce(x, basis):
    """Canonical representative of ``x`` modulo a full-rank HNF basis."""
    x = list(x)
    for i, row in enumerate(basis):
        q = x[i] // row[i]
        if q:
            x = [a - q * b for a, b in zip(x, row)]
    return tuple(x)


def _reps(basis):
    return itertools.product(*[range(row[i]) for i, row in enumerate(basis)])


class FiniteModuleInstance:
    """Finite abelian group ``Z^k / R`` with an optional action by integer matrices."""

    def __init__(self, orders: Sequence[int] = (), action: Sequence = (), *, relations=None):
        if relations is None:
            orders = [int(o) for o in orders]
            if any(o < 1 for o in orders):
                raise ValueError("cyclic orders must be positive")
            k = len(orders)
            relations = [[o if i == j else 0 for j in range(k)] for i, o in enumerate(orders)]
        else:
            relations = [list(r) for r in relations]
            k = len(relations[0]) if relations else 0
        self.rank = k
        self.relations = _key(relations) if k else ()
        if k and len(self.relations) != k:
            raise ValueError("relations must have full rank (the group must be finite)")
        self.order = math.prod(r[i] for i, r in enumerate(self.relations)) if k else 1
        if self.order > MAX_ORDER:
            raise TooLarge(f"order {self.order} exceeds the exhaustive bound {MAX_ORDER}")
        self.action = tuple(tuple(tuple(int(x) for x in row) for row in a) for a in action)
        for a in self.action:
            if len(a) != k or any(len(row) != k for row in a):
                raise ValueError("action matrices must be k x k")
            for r in self.relations:
                if not self._in(self._apply(r, a), self.relations):
                    raise ValueError("action matrix is not well defined on the quotient")
        self._memo: dict = {}

    @classmethod
    def cyclic_sum(cls, orders):
        return cls(orders)

    @staticmethod
    def _apply(x, a):
        k = len(x)
        return tuple(sum(x[i] * a[i][j] for i in range(k)) for j in range(k))

    @staticmethod
    def _in(x, basis) -> bool:
        return not any(_reduce(x, basis))

    @property
    def trivial_action(self) -> bool:
        ident = tuple(tuple(int(i == j) for j in range(self.rank)) for i in range(self.rank))
        return all(a == ident for a in self.action)

    def invariant_factors(self):
        return tuple(smith_invariants(self.relations, self.rank))

    def submodule(self, basis, x) -> tuple:
        """HNF key of ``L + <x>`` closed under the action."""
        lat = IntegerLattice(self.rank, track=False)
        for r in basis:
            lat.add(r)
        frontier = [x]
        lat.add(x)
        while frontier:
            y = frontier.pop()
            for a in self.action:
                z = self._apply(y, a)
                if not lat.contains(z):
                    lat.add(z)
                    frontier.append(z)
        return tuple(lat.basis())

    def children(self, basis):
        """Distinct invariant lattices ``L + <x>`` strictly above ``L``."""
        seen = set()
        for x in _reps(basis):
            if not any(x):
                continue
            key = self.submodule(basis, x)
            if key in seen:
                continue
            seen.add(key)
            yield key

    def length_above(self, basis) -> int:
        """Length of ``Z^k / L``."""
        basis = tuple(basis)
        if all(row[i] == 1 for i, row in enumerate(basis)):
            return 0
        if self.trivial_action:
            return _trivial_length(tuple(smith_invariants(basis, self.rank)))
        hit = self._memo.get(basis)
        if hit is not None:
            return hit
        best = max(self.length_above(c) + 1 for c in self.children(basis))
        self._memo[basis] = best
        return best

    def length(self) -> int:
        if not self.rank:
            return 0
        return self.length_above(self.relations)

    def invariant_lattices(self):
        """All invariant lattices between R and Z^k (breadth-first)."""
        start = self.relations
        seen = {start}
        frontier = [start]
        while frontier:
            nxt = []
            for b in frontier:
                for c in self.children(b):
                    if c not in seen:
                        seen.add(c)
                        nxt.append(c)
            frontier = nxt
        return seen

    def sub_instance(self, basis) -> "FiniteModuleInstance":
        """The submodule ``L / R`` as an instance of its own (coordinates in L's basis)."""
        B = [list(r) for r in basis]
        Binv = _inverse(B)
        rel = [[int(x) for x in _vecmat(r, Binv)] for r in self.relations]
        action = []
        for a in self.action:
            # row b of B maps to b a, expressed in B-coordinates
            m = [[int(x) for x in _vecmat(self._apply(b, a), Binv)] for b in B]
            action.append(m)
        return FiniteModuleInstance(relations=rel, action=action)

    def __repr__(self):
        return f"FiniteModuleInstance(invariants={list(self.invariant_factors())}, action={len(self.action)} matrices)"


def _inverse(m):
    n = len(m)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for c in range(n):
        p = next(r for r in range(c, n) if a[r][c] != 0)
        a[c], a[p] = a[p], a[c]
        piv = a[c][c]
        a[c] = [x / piv for x in a[c]]
        for r in range(n):
            if r != c and a[r][c] != 0:
                f = a[r][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return [row[n:] for row in a]


def _vecmat(v, m):
    out = [sum(Fraction(v[i]) * m[i][j] for i in range(len(v))) for j in range(len(m[0]))]
    for x in out:
        if x.denominator != 1:
            raise ValueError("submodule basis change is not integral")
    return out


@lru_cache(maxsize=None)
def _trivial_length(invariants: tuple) -> int:
    """Length of ``prod Z/d_i`` by recursion over its cyclic subgroups."""
    if not invariants:
        return 0
    k = len(invariants)
    rel = [[d if i == j else 0 for j in range(k)] for i, d in enumerate(invariants)]
    basis = _key(rel)
    best = 0
    seen = set()
    for x in _reps(basis):
        if not any(x):
            continue
        key = _key(list(basis) + [list(x)])
        if key in seen:
            continue
        seen.add(key)
        child = tuple(smith_invariants(key, k))
        best = max(best, _trivial_length(child) + 1)
    return best


def exhaustive_length(m: FiniteModuleInstance) -> int:
    return m.length()


def quotient_lengths(m: FiniteModuleInstance, stop_at_full: bool = True) -> set:
    """Lengths realized by quotients ``M/N`` over invariant submodules N."""
    total = m.length()
    want = set(range(total + 1))
    found = set()
    start = m.relations
    seen = {start}
    frontier = [start]
    found.add(m.length_above(start))
    while frontier and not (stop_at_full and found >= want):
        nxt = []
        for b in frontier:
            for c in m.children(b):
                if c not in seen:
                    seen.add(c)
                    found.add(m.length_above(c))
                    nxt.append(c)
        frontier = nxt
    return found


# -- finite abelian groups -----------------------------------------------------------------

def _partitions(n, largest=None):
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for k in range(min(n, largest), 0, -1):
        for rest in _partitions(n - k, k):
            yield (k,) + rest


def _factor(n):
    out, p = [], 2
    while p * p <= n:
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        if e:
            out.append((p, e))
        p += 1
    if n > 1:
        out.append((n, 1))
    return out


def abelian_groups(order: int):
    """Cyclic decompositions (lists of prime-power orders) of all abelian groups of ``order``."""
    choices = []
    for p, e in _factor(order):
        choices.append([tuple(p ** k for k in part) for part in _partitions(e)])
    for combo in itertools.product(*choices):
        yield tuple(x for part in combo for x in part)


def check_delta(max_order: int = 128) -> Report:
    violations = []
    cases = 0
    for n in range(1, max_order + 1):
        for orders in abelian_groups(n):
            cases += 1
            got = exhaustive_length(FiniteModuleInstance(orders))
            if got != delta(n):
                violations.append({"orders": list(orders), "length": got, "delta": delta(n)})
    return Report("delta", cases, tuple(violations), {"max_order": max_order})


# -- random instances ----------------------------------------------------------------------

def _random_orders(rng, max_order):
    while True:
        k = rng.randint(1, 3)
        orders = [rng.choice([2, 3, 4, 5, 6, 8, 9]) for _ in range(k)]
        if math.prod(orders) <= max_order:
            return orders


def _random_action(rng, orders, count):
    k = len(orders)
    mats = []
    for _ in range(count):
        a = []
        for i in range(k):
            row = []
            for j in range(k):
                step = orders[j] // math.gcd(orders[i], orders[j])
                row.append(step * rng.randrange(orders[j]))
            a.append(row)
        mats.append(a)
    return mats


def _random_instance(rng, max_order=64):
    orders = _random_orders(rng, max_order)
    action = _random_action(rng, orders, rng.randint(0, 2))
    return FiniteModuleInstance(orders, action)


def _direct_sum(a_orders, a_action, b_orders, b_action):
    ka, kb = len(a_orders), len(b_orders)
    n = max(len(a_action), len(b_action))
    ident = lambda k: [[int(i == j) for j in range(k)] for i in range(k)]  # noqa: E731
    mats = []
    for t in range(n):
        x = a_action[t] if t < len(a_action) else ident(ka)
        y = b_action[t] if t < len(b_action) else ident(kb)
        m = [[0] * (ka + kb) for _ in range(ka + kb)]
        for i in range(ka):
            for j in range(ka):
                m[i][j] = x[i][j]
        for i in range(kb):
            for j in range(kb):
                m[ka + i][ka + j] = y[i][j]
        mats.append(m)
    return FiniteModuleInstance(list(a_orders) + list(b_orders), mats)


def check_ext_bounds(samples: int = 1000, seed: int = 0, max_order: int = 64) -> Report:
    """``l(G/N) + l(N) <= l(G) <= l(G/N) ⊕ l(N)``, with ⊕ equality on direct sums."""
    rng = random.Random(seed)
    violations = []
    for case in range(samples):
        if case % 2:
            oa = _random_orders(rng, 8)
            ob = _random_orders(rng, max(2, max_order // math.prod(oa)))
            if math.prod(oa) * math.prod(ob) > max_order:
                ob = [2]
            aa, ab = _random_action(rng, oa, 1), _random_action(rng, ob, 1)
            g = _direct_sum(oa, aa, ob, ab)
            first = FiniteModuleInstance(oa, aa).length()
            second = FiniteModuleInstance(ob, ab).length()
            total = g.length()
            if O.natural_sum(first, second) != O.Ordinal.from_int(total):
                violations.append({"case": case, "kind": "direct-sum", "parts": [first, second], "length": total})
            continue
        g = _random_instance(rng, max_order)
        k = g.rank
        x = tuple(rng.randrange(g.relations[i][i]) for i in range(k))
        n_basis = g.submodule(g.relations, x)
        quot = g.length_above(n_basis)
        sub = g.sub_instance(n_basis).length()
        total = g.length()
        lo = O.add(quot, sub)
        hi = O.natural_sum(quot, sub)
        if not (lo <= total <= hi):
            violations.append({"case": case, "kind": "extension", "quotient": quot, "sub": sub, "length": total})
    return Report("ext-bounds", samples, tuple(violations), {"seed": seed, "max_order": max_order})


def check_convex_realization(m: Optional[FiniteModuleInstance] = None, max_order: int = 64) -> Report:
    """Every value below the length is the length of some quotient."""
    instances = [m] if m is not None else [FiniteModuleInstance(o) for n in range(1, max_order + 1) for o in abelian_groups(n)]
    violations = []
    realized = {}
    for inst in instances:
        total = inst.length()
        got = quotient_lengths(inst)
        if not set(range(total + 1)) <= got:
            violations.append({"instance": repr(inst), "length": total, "realized": sorted(got)})
        if m is not None:
            realized = {"length": total, "realized": sorted(got)}
    return Report("convex-realization", len(instances), tuple(violations), realized)


def _matrix_order(a, p, limit=10000):
    k = len(a)
    ident = tuple(tuple(int(i == j) for j in range(k)) for i in range(k))
    cur = tuple(tuple(x % p for x in row) for row in a)
    for n in range(1, limit + 1):
        if cur == ident:
            return n
        cur = tuple(tuple(sum(cur[i][t] * a[t][j] for t in range(k)) % p for j in range(k)) for i in range(k))
    return None


def _det_mod(a, p):
    m = [[x % p for x in row] for row in a]
    n = len(m)
    det = 1
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c]), None)
        if piv is None:
            return 0
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det = det * m[c][c] % p
        inv = pow(m[c][c], -1, p)
        for r in range(c + 1, n):
            f = m[r][c] * inv % p
            m[r] = [(x - f * y) % p for x, y in zip(m[r], m[c])]
    return det % p


def finite_action_case(p: int, matrix) -> dict:
    """``l_G <= l <= n l_G`` for the cyclic group generated by ``matrix`` on F_p^dim."""
    dim = len(matrix)
    n = _matrix_order(matrix, p)
    plain = FiniteModuleInstance([p] * dim).length()
    equivariant = FiniteModuleInstance([p] * dim, [matrix]).length()
    ok = equivariant <= plain <= n * equivariant
    return {"p": p, "dim": dim, "n": n, "l_G": equivariant, "l": plain, "ok": ok}


def check_finite_action_bounds(samples: int = 200, seed: int = 0, primes=(2, 3, 5), max_dim: int = 4) -> Report:
    rng = random.Random(seed)
    violations = []
    for case in range(samples):
        p = rng.choice(primes)
        dim = rng.randint(1, max_dim)
        while True:
            a = [[rng.randrange(p) for _ in range(dim)] for _ in range(dim)]
            if _det_mod(a, p):
                break
        res = finite_action_case(p, a)
        if not res["ok"]:
            violations.append({"case": case, **res, "matrix": a})
    return Report("finite-action", samples, tuple(violations), {"seed": seed, "primes": list(primes), "max_dim": max_dim})


# -- Bieri-Strebel artifacts -----------------------------------------------------------------

def _binom(n, k):
    return math.comb(n, k)


def _expand(q, shift):
    """Integer polynomial ``prod u_i^(m_i+S) (1+u_i)^(n_i+S)`` as a dict."""
    poly = {(): 1}
    for i in range(0, len(q), 2):
        a, b = q[i] + shift, q[i + 1] + shift
        new = {}
        for e, c in poly.items():
            for j in range(b + 1):
                key = e + (a + j,)
                new[key] = new.get(key, 0) + c * _binom(b, j)
        poly = new
    return poly


def _recheck_witness(wit_json) -> Optional[str]:
    if wit_json.get("declared"):
        return None
    q = wit_json["q"]
    ray = wit_json["ray"]
    comb = wit_json["combination"]
    mod = wit_json.get("modulus")
    if sum(a * b for a, b in zip(ray, q)) >= 0:
        return "v(q) is not negative"
    for p, _ in comb:
        if sum(a * b for a, b in zip(ray, p)) < 0:
            return f"term {p} has negative value"
    shift = max([abs(x) for x in q] + [abs(x) for p, _ in comb for x in p] + [0])
    total = dict(_expand(q, shift))
    for p, c in comb:
        for e, v in _expand(p, shift).items():
            total[e] = total.get(e, 0) - c * v
    bad = [v for v in total.values() if (v % mod if mod else v)]
    return "identity does not hold" if bad else None


_CLASSICAL_VALUES = {
    # valuation of u^m (1+u)^n as a functional of (m, n)
    "ord_u": (1, 0),
    "ord_onepu": (0, 1),
    "neg_top_deg": (-1, -1),
}


def _recheck_certificate(cert_json, samples=100, seed=0) -> Optional[str]:
    name = cert_json["valuation"]
    if name in ("declared", "support"):
        return None
    ray = tuple(cert_json["ray"])
    leaf = cert_json["leaf"]
    base = _CLASSICAL_VALUES.get(name)
    if base is None:
        return f"unknown valuation {name}"
    functional = [0] * len(ray)
    functional[2 * leaf:2 * leaf + 2] = base
    g = 0
    for x in ray:
        g = math.gcd(g, x)
    if tuple(functional) != ray:
        return "valuation functional does not match the ray"
    rng = random.Random(seed)
    checked = 0
    while checked < samples:
        q = [rng.randint(-20, 20) for _ in ray]
        if sum(a * b for a, b in zip(ray, q)) < 0:
            continue
        if sum(a * b for a, b in zip(functional, q)) < 0:
            return f"negative on Q_v monomial {q}"
        checked += 1
    fam = cert_json["family"]
    if sum(a * b for a, b in zip(functional, fam)) >= 0:
        return "family does not decrease"
    return None


def recheck_sigma_artifacts(verdicts, points: int = 3, seed: int = 0) -> Report:
    """Re-verify serialized Γ verdicts with code independent of the search.

    Also re-checks the two one-variable identities behind the (1,1) case by
    evaluating both sides at random rational points.
    """
    from .laurent import LaurentRing, evaluate
    from .sigma import CLASSICAL_IDENTITIES

    violations = []
    rng = random.Random(seed)
    R = LaurentRing(1)
    for lhs, rhs in CLASSICAL_IDENTITIES:
        a, b = R.parse(lhs), R.parse(rhs)
        if a != b:
            violations.append({"identity": f"{lhs} = {rhs}", "error": "exact check failed"})
        for _ in range(points):
            t = Fraction(rng.randint(1, 50), rng.randint(1, 50))
            if evaluate(a, [t]) != evaluate(b, [t]):
                violations.append({"identity": f"{lhs} = {rhs}", "error": f"differs at {t}"})
    cases = len(CLASSICAL_IDENTITIES)
    for v in verdicts:
        obj = v if isinstance(v, dict) else v.to_json()
        cases += 1
        err = None
        if obj["verdict"] == "NotInGamma":
            err = _recheck_witness(obj["witness"])
        elif obj["verdict"] == "InGamma":
            err = _recheck_certificate(obj["certificate"])
        if err:
            violations.append({"ray": obj["ray"], "verdict": obj["verdict"], "error": err})
    return Report("sigma-artifacts", cases, tuple(violations), {"seed": seed})


# -- ordinal laws ----------------------------------------------------------------------------

def recursive_natural_sum_table(bound: int):
    """``a ⊕ b`` for ``a, b < bound`` straight from the recursive definition.

    ``a ⊕ b = sup{(a' ⊕ b) + 1, (a ⊕ b') + 1 : a' < a, b' < b}``, evaluated
    with running maxima over the already computed row and column.
    """
    table = [[0] * bound for _ in range(bound)]
    col_best = [-1] * bound  # max over a' < a of table[a'][b], per b
    for a in range(bound):
        row_best = -1
        for b in range(bound):
            v = max(col_best[b], row_best) + 1
            table[a][b] = v
            row_best = max(row_best, v)
        for b in range(bound):
            col_best[b] = max(col_best[b], table[a][b])
    return table


def random_ordinal(rng, max_finite_exp: int = 5) -> O.Ordinal:
    """Random CNF ordinal below ``w^w * 10``."""
    terms = []
    if rng.random() < 0.3:
        terms.append((O.OMEGA, rng.randint(1, 9)))
    for e in range(max_finite_exp, -1, -1):
        if rng.random() < 0.4:
            terms.append((O.Ordinal.from_int(e), rng.randint(1, 9)))
    return O.Ordinal(tuple(terms))


def recheck_ordinal_laws(samples: int = 10_000, seed: int = 0, finite_bound: int = 500) -> Report:
    rng = random.Random(seed)
    violations = []

    def fail(law, *xs):
        if len(violations) < 50:
            violations.append({"law": law, "args": [O.format_ordinal(x) for x in xs]})

    Z = O.ZERO
    for _ in range(samples):
        a, b, c = random_ordinal(rng), random_ordinal(rng), random_ordinal(rng)
        ns, ad = O.natural_sum, O.add
        if ns(a, b) != ns(b, a):
            fail("natural-sum commutative", a, b)
        if ns(ns(a, b), c) != ns(a, ns(b, c)):
            fail("natural-sum associative", a, b, c)
        if ad(ad(a, b), c) != ad(a, ad(b, c)):
            fail("sum associative", a, b, c)
        if not (ns(a, Z) == ns(Z, a) == ad(a, Z) == ad(Z, a) == a):
            fail("zero identity", a)
        if a < b:
            if not ns(a, c) < ns(b, c):
                fail("natural-sum monotone", a, b, c)
            if not ad(c, a) < ad(c, b):
                fail("sum right-monotone", a, b, c)
        if not b.is_zero() and a < O.omega_power(O.degree(b)) and ad(a, b) != b:
            fail("absorption", a, b)
        q, r = O.reduce(a)
        if ad(O.omega_times(q), r) != a or not (0 <= r):
            fail("reduce reconstruction", a)
        if not a.is_zero() and not b.is_zero() and O.degree(ns(a, b)) != max(O.degree(a), O.degree(b)):
            fail("degree of natural sum", a, b)
        if not a.is_zero():
            big = O.add(O.OMEGA, a)  # an exponent >= w
            if O.reduce(O.omega_power(big)) != (O.omega_power(big), 0):
                fail("reduce fixed point", big)
    table = recursive_natural_sum_table(finite_bound)
    finite_bad = 0
    for x in range(finite_bound):
        ox = O.Ordinal.from_int(x)
        row = table[x]
        for y in range(finite_bound):
            if int(O.natural_sum(ox, y)) != row[y]:
                finite_bad += 1
                if finite_bad <= 5:
                    violations.append({"law": "finite natural sum vs recursion", "args": [x, y]})
    return Report("ordinal-laws", samples + finite_bound ** 2, tuple(violations),
                  {"seed": seed, "samples": samples, "finite_bound": finite_bound})


# -- suites ------------------------------------------------------------------------------------

def _sigma_suite(seed=0, samples=None):
    from .sigma import ClassicalRing, gamma_verdict, ray_sweep

    m = ClassicalRing()
    verdicts = [gamma_verdict(m, r) for r in ray_sweep(360)]
    return recheck_sigma_artifacts(verdicts, seed=seed)


SUITES = {
    "delta": lambda seed=0, samples=None: check_delta(128),
    "ext-bounds": lambda seed=0, samples=None: check_ext_bounds(samples or 1000, seed),
    "convex": lambda seed=0, samples=None: check_convex_realization(max_order=64),
    "finite-action": lambda seed=0, samples=None: check_finite_action_bounds(samples or 200, seed),
    "ordinal-laws": lambda seed=0, samples=None: recheck_ordinal_laws(samples or 10_000, seed),
    "sigma": _sigma_suite,
}


def run_suite(name: str, seed: int = 0, samples: Optional[int] = None):
    if name == "all":
        return [SUITES[k](seed=seed, samples=samples) for k in sorted(SUITES)]
    if name not in SUITES:
        raise KeyError(f"unknown oracle suite {name!r}; known: {', '.join(sorted(SUITES))}, all")
    return [SUITES[name](seed=seed, samples=samples)]
