"""Registry of named groups with expected ranks and executable checks.

Each entry carries a group descriptor, the rank it should have, a finite
presentability verdict with its justification chain, and a list of named
structural checks that are run with exact arithmetic by :func:`verify`.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .errors import CatalogError, VerificationFailure
from .grouprank import (
    COND,
    Cyclic,
    FreeAbelian,
    FreeMetabelian,
    InfiniteCyclic,
    MetabelianExt,
    Polycyclic,
    VirtuallyMetabelian,
    Wreath,
    WreathPermutational,
    cb_external,
    cb_rank,
    delta,
    format_rank,
)
from .laurent import LaurentRing, MagnusMatrix, automorphism_power, evaluate, format_x
from .modlen import Critical, OrdinalInterval, Series, TorsionFree
from .ordinal import Ordinal, omega_power
from .sigma import (
    FPVerdict,
    GroupRing,
    finitely_presented,
    fp_finite_index_overgroup,
    fp_full_projection_subgroup,
    tensor_power,
)

__all__ = ["CatalogEntry", "CheckResult", "VerificationReport", "get", "list_names", "verify", "ALIASES", "MAX_VERIFY_D"]

MAX_VERIFY_D = 4


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    params: dict
    descriptor: object
    expected_rank: object  # Ordinal, OrdinalInterval or COND
    rank_kind: str  # "cb" or "cb_external"
    fp: FPVerdict
    checks: tuple
    citations: tuple
    bs_module: object = None
    notes: tuple = ()

    @property
    def label(self) -> str:
        if not self.params:
            return self.name
        return f"{self.name}(" + ", ".join(f"{k}={v}" for k, v in self.params.items()) + ")"

    @property
    def d(self) -> Optional[int]:
        return self.params.get("d")

    def to_json(self):
        return {
            "name": self.name,
            "params": dict(self.params),
            "expected_rank": format_rank(self.expected_rank),
            "rank_kind": self.rank_kind,
            "fp": self.fp.to_json(),
            "checks": list(self.checks),
            "citations": list(self.citations),
            "notes": list(self.notes),
        }


# -- entry builders -------------------------------------------------------------------

def _int_param(params, key, lo, default=None):
    v = params.get(key, default)
    if v is None:
        raise CatalogError(f"missing parameter {key!r}")
    try:
        v = int(v)
    except (TypeError, ValueError):
        raise CatalogError(f"parameter {key!r} must be an integer, got {v!r}") from None
    if v < lo:
        raise CatalogError(f"parameter {key!r} must be >= {lo}, got {v}")
    return v


_POLYCYCLIC_FP = FPVerdict("Yes", ("polycyclic groups are finitely presented",))


def _zk(p):
    k = _int_param(p, "k", 1)
    g = Polycyclic((FreeAbelian(k),), supersolvable=True, nilpotent=True)
    return CatalogEntry("Zk", {"k": k}, g, Ordinal.from_int(k), "cb", _POLYCYCLIC_FP, ("g",),
                        ("cb of a free abelian group is its rank",))


def _heisenberg(p):
    g = Polycyclic((InfiniteCyclic(), InfiniteCyclic(), InfiniteCyclic()), supersolvable=True, nilpotent=True)
    return CatalogEntry("Heisenberg", {}, g, Ordinal.from_int(3), "cb", _POLYCYCLIC_FP, ("g",),
                        ("Hirsch length of a nilpotent group",))


def _zk_wr_zd(p):
    k = _int_param(p, "k", 1)
    d = _int_param(p, "d", 0)
    g = Wreath(FreeAbelian(k), d)
    if d == 0:
        fp = _POLYCYCLIC_FP
        module = None
    else:
        module = GroupRing(d)
        fp = finitely_presented(module)
    return CatalogEntry("ZkWrZd", {"k": k, "d": d}, g, omega_power(d, k), "cb", fp, ("g", "fp"),
                        ("free abelian base wreath product formula",), module)


def _cm_wr_zd(p):
    m = _int_param(p, "m", 2)
    d = _int_param(p, "d", 1)
    g = Wreath(Cyclic(m), d)
    dm = delta(m)
    expected = Ordinal.from_int(dm + 1) if d == 1 else omega_power(d - 1, dm)
    module = GroupRing(d, m)
    return CatalogEntry("CmWrZd", {"m": m, "d": d}, g, expected, "cb", finitely_presented(module), ("g", "fp"),
                        ("finite cyclic base wreath product formula",), module)


def _fm(p):
    d = _int_param(p, "d", 2)
    g = FreeMetabelian(d)
    fp = FPVerdict("Unknown", ("no Bieri-Strebel data recorded for free metabelian groups",))
    return CatalogEntry("FM", {"d": d}, g, omega_power(d, d - 1), "cb", fp, ("c", "d", "g"),
                        ("Magnus embedding; torsion-free commutator module of rank d-1",))


def _h_descriptor(d):
    return MetabelianExt(TorsionFree(d + 1, 1), q_rank=2 * d, split=True, generators=2 * d + 1,
                         faithful=True, module_contains_centralizer=True)


def _h_fp(d):
    return finitely_presented(tensor_power(d))


def _h(p):
    d = _int_param(p, "d", 1)
    return CatalogEntry("H", {"d": d}, _h_descriptor(d), omega_power(d), "cb", _h_fp(d), ("a", "fp", "g"),
                        ("ideal of A_d, Krull dimension d+1", "tensor power of the classical ring has trivial Γ±"),
                        tensor_power(d))


def _gamma(p):
    d = _int_param(p, "d", 1)
    g = VirtuallyMetabelian(_h_descriptor(d), index=d, invariant_ideal_dim=d + 1)
    fp = fp_finite_index_overgroup(_h_fp(d), f"contains H_{d} with index {d}")
    return CatalogEntry("Gamma", {"d": d}, g, omega_power(d), "cb", fp, ("a", "fp", "g"),
                        ("invariant ideals under a finite cyclic shift",), tensor_power(d))


def _gamma_prime(p):
    d = _int_param(p, "d", 1)
    if d % 2 == 0:
        raise CatalogError(f"GammaPrime needs odd d, got {d}")
    g = VirtuallyMetabelian(_h_descriptor(d), index=2 * d, invariant_ideal_dim=d + 1)
    fp = fp_finite_index_overgroup(fp_finite_index_overgroup(_h_fp(d), f"Gamma_{d} contains H_{d}"), f"contains Gamma_{d} with index 2")
    return CatalogEntry("GammaPrime", {"d": d}, g, omega_power(d), "cb", fp, ("a", "b", "fp", "g"),
                        ("order 2d automorphism with gamma^(d+1) = shift",), tensor_power(d))


def _lambda_prime_descriptor(d):
    return MetabelianExt(TorsionFree(d + 1, 1), q_rank=2 * d, faithful=True, module_contains_centralizer=True,
                         prime_quotient=(d + 1, 1))


def _lambda_prime_fp(d):
    return fp_full_projection_subgroup(_h_fp(d), f"inside H_{d}, onto Z^{2 * d}")


def _lambda_prime(p):
    d = _int_param(p, "d", 1)
    return CatalogEntry("LambdaPrime", {"d": d}, _lambda_prime_descriptor(d), omega_power(d), "cb",
                        _lambda_prime_fp(d), ("a", "e", "fp", "g"),
                        ("kernel of Z[Q] -> Z[1/2], all generators to 1/2",), tensor_power(d))


def _lambda(p):
    d = _int_param(p, "d", 1)
    g = VirtuallyMetabelian(_lambda_prime_descriptor(d), index=2 * d, invariant_ideal_dim=d + 1)
    fp = fp_finite_index_overgroup(_lambda_prime_fp(d), f"contains LambdaPrime_{d} with finite index")
    checks = ("a", "b", "e", "fp", "g") if d % 2 else ("a", "e", "fp", "g")
    notes = () if d % 2 else ("the two-generator construction uses gamma, defined for odd d; "
                              "for even d only the descriptor-level facts are checked",)
    return CatalogEntry("Lambda", {"d": d}, g, omega_power(d), "cb", fp, checks,
                        ("generated by ue_1 and gamma",), tensor_power(d), notes)


def _gn(p):
    d = _int_param(p, "d", 2)
    n = _int_param(p, "n", 1)
    module = Series(*[Critical(d)] * n)
    g = MetabelianExt(module, q_rank=d, split=True, generators=d, faithful=True, module_contains_centralizer=True)
    fp = FPVerdict("Unknown", ("not recorded",))
    return CatalogEntry("Gn", {"d": d, "n": n}, g, omega_power(d - 1, n), "cb", fp, ("f", "g"),
                        ("A_n = Z[Q]/(2 - x_2)^n, split and d-generated",))


def _zwrz(p):
    g = WreathPermutational(base_nontrivial=True, diag_orbits_infinite=True, finitely_presented=False)
    fp = finitely_presented(GroupRing(1))
    return CatalogEntry("ZWrZ", {}, g, COND, "cb_external", fp, ("fp", "g"),
                        ("infinitely many diagonal orbits give a condensation point",), GroupRing(1))


_BUILDERS = {
    "Zk": _zk,
    "Heisenberg": _heisenberg,
    "ZkWrZd": _zk_wr_zd,
    "CmWrZd": _cm_wr_zd,
    "FM": _fm,
    "H": _h,
    "Gamma": _gamma,
    "GammaPrime": _gamma_prime,
    "Lambda": _lambda,
    "LambdaPrime": _lambda_prime,
    "Gn": _gn,
    "ZWrZ": _zwrz,
}

ALIASES = {
    "Z^k": "Zk",
    "heisenberg": "Heisenberg",
    "wreath-free": "ZkWrZd",
    "wreath-cyclic": "CmWrZd",
    "Γ": "Gamma",
    "Γ'": "GammaPrime",
    "Λ": "Lambda",
    "Λ'": "LambdaPrime",
    "G_n": "Gn",
    "Z≀Z": "ZWrZ",
    "ZwrZ": "ZWrZ",
}

# positional parameter order for calls like Gn(2, 5)
POSITIONAL = {
    "Zk": ("k",),
    "ZkWrZd": ("k", "d"),
    "CmWrZd": ("m", "d"),
    "FM": ("d",),
    "H": ("d",),
    "Gamma": ("d",),
    "GammaPrime": ("d",),
    "Lambda": ("d",),
    "LambdaPrime": ("d",),
    "Gn": ("d", "n"),
    "Heisenberg": (),
    "ZWrZ": (),
}


def canonical_name(name: str) -> str:
    key = ALIASES.get(name, name)
    if key not in _BUILDERS:
        lowered = {k.lower(): k for k in _BUILDERS}
        key = lowered.get(key.lower())
        if key is None:
            raise CatalogError(f"unknown catalog entry {name!r}; known: {', '.join(sorted(_BUILDERS))}")
    return key


def get(name: str, *args, **params) -> CatalogEntry:
    key = canonical_name(name)
    order = POSITIONAL[key]
    if len(args) > len(order):
        raise CatalogError(f"{key} takes at most {len(order)} positional parameters")
    for k, v in zip(order, args):
        if k in params:
            raise CatalogError(f"parameter {k!r} given twice")
        params[k] = v
    unknown = set(params) - set(order)
    if unknown:
        raise CatalogError(f"{key} has no parameter(s) {', '.join(sorted(unknown))}")
    return _BUILDERS[key](params)


def list_names() -> list:
    return sorted(_BUILDERS)


# -- verification ------------------------------------------------------------------------

@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""
    values: dict = field(default_factory=dict)

    def to_json(self):
        return {"check": self.name, "passed": self.passed, "detail": self.detail, "values": self.values}


@dataclass
class VerificationReport:
    entry: str
    results: list

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def to_json(self):
        return {"entry": self.entry, "passed": self.passed, "checks": [r.to_json() for r in self.results]}

    def __str__(self):
        lines = [f"{self.entry}: {'PASS' if self.passed else 'FAIL'}"]
        for r in self.results:
            lines.append(f"  [{'pass' if r.passed else 'FAIL'}] {r.name}: {r.detail}")
        return "\n".join(lines)


def _h_generators(d):
    """Matrices of e_i, f_i, u in the u-coordinates (x_i = -u_i)."""
    R = LaurentRing(d)
    zero = [R.zero()]
    e = [MagnusMatrix(R.x(i), zero) for i in range(d)]
    f = [MagnusMatrix(1 - R.x(i), zero) for i in range(d)]
    u = MagnusMatrix(R.one(), [R.one()])
    return R, e, f, u


def _check_a(entry):
    d = entry.d
    R, e, f, u = _h_generators(d)
    diag = e + f
    for i, a in enumerate(diag):
        for b in diag[i + 1:]:
            if a * b != b * a:
                return CheckResult("a", False, "diagonal generators do not commute")
    c = (u * e[0]).commutator(u * f[0])
    if c.is_identity():
        return CheckResult("a", False, "[ue_1, uf_1] is trivial")
    return CheckResult("a", True, "diagonal generators commute; [ue_1, uf_1] != 1",
                       {"commutator_m": format_x(c.m[0]), "commutator_t": str(c.t)})


def gamma_images(d):
    """The automorphism x_i -> 1 - x_(i+1) in u-coordinates: u_i -> -(1 + u_(i+1))."""
    R = LaurentRing(d)
    return [-(R.onepu((i + 1) % d)) for i in range(d)]


def _check_b(entry):
    d = entry.d
    if d % 2 == 0:
        return CheckResult("b", False, "gamma needs odd d")
    R = LaurentRing(d)
    ident = [R.u(i) for i in range(d)]
    g = gamma_images(d)
    order = None
    cur = ident
    for k in range(1, 2 * d + 1):
        cur = [img.substitute(g) for img in cur]
        if cur == ident:
            order = k
            break
    if order != 2 * d:
        return CheckResult("b", False, f"gamma has order {order}, expected {2 * d}")
    shift = [R.u((i + 1) % d) for i in range(d)]
    if automorphism_power(g, d + 1) != shift:
        return CheckResult("b", False, "gamma^(d+1) is not the shift")
    flip = [1 - R.x(i) for i in range(d)]
    if [(-img) for img in automorphism_power(g, d)] != flip:
        return CheckResult("b", False, "gamma^d does not send x_i to 1 - x_i")
    return CheckResult("b", True, f"gamma has order {2 * d}, gamma^{d + 1} = shift, gamma^{d}: x_i -> 1 - x_i")


def _magnus_generators(d):
    R = LaurentRing(d)
    gens = []
    for i in range(d):
        m = [R.zero()] * d
        m[i] = R.one()
        gens.append(MagnusMatrix(R.u(i), m))
    return R, gens


def _magnus_formula(R, d, i, j):
    ui, uj = R.u(i), R.u(j)
    scale = (ui * uj).inverse()
    m = [R.zero()] * d
    m[i] = scale * (1 - uj)
    m[j] = -(scale * (1 - ui))
    return m


def _check_c(entry):
    d = entry.d
    R, gens = _magnus_generators(d)
    pairs = 0
    for i in range(d):
        for j in range(i + 1, d):
            c = gens[i].commutator(gens[j])
            if c.t != 1 or list(c.m) != _magnus_formula(R, d, i, j):
                return CheckResult("c", False, f"[x_{i + 1}, x_{j + 1}] does not match the formula")
            pairs += 1
    return CheckResult("c", True, f"{pairs} pairs match the commutator formula", {"pairs": pairs})


def _random_word(rng, gens, length):
    w = None
    for _ in range(length):
        g = rng.choice(gens)
        if rng.random() < 0.5:
            g = g.inverse()
        w = g if w is None else w * g
    return w


def in_n0(R, m) -> bool:
    """``sum (1 - u_i) a_i == 0``."""
    total = R.zero()
    for i, a in enumerate(m):
        total = total + (1 - R.u(i)) * a
    return total.is_zero()


def _check_d(entry, samples=12, seed=7):
    d = entry.d
    R, gens = _magnus_generators(d)
    rng = random.Random(seed)
    for _ in range(samples):
        prod = MagnusMatrix.identity(R, d)
        for _ in range(rng.randint(1, 2)):
            a = _random_word(rng, gens, rng.randint(1, 3))
            b = _random_word(rng, gens, rng.randint(1, 3))
            prod = prod * a.commutator(b)
        if prod.t != 1 or not in_n0(R, prod.m):
            return CheckResult("d", False, "a commutator product leaves N_0")
    return CheckResult("d", True, f"{samples} sampled commutator products lie in N_0", {"samples": samples, "seed": seed})


def _check_e(entry, samples=10, seed=11):
    d = entry.d
    R, e, f, u = _h_generators(d)
    gens = [u * x for x in e] + [u * x for x in f]
    half = [Fraction(-1, 2)] * d  # x_i = 1/2
    for g in gens:
        if evaluate(g.t, half) != Fraction(1, 2):
            return CheckResult("e", False, "a generator does not specialize to 1/2")
    rng = random.Random(seed)
    c0 = gens[0].commutator(gens[d])
    checked = [c0]
    for _ in range(samples):
        a = _random_word(rng, gens, rng.randint(1, 3))
        b = _random_word(rng, gens, rng.randint(1, 3))
        checked.append(a.commutator(b))
    for c in checked:
        if c.t != 1 or evaluate(c.m[0], half) != 0:
            return CheckResult("e", False, "a commutator does not vanish at x = 1/2")
    if c0.m[0].is_zero():
        return CheckResult("e", False, "[ue_1, uf_1] is trivial")
    return CheckResult("e", True, f"all {2 * d} generators map to 1/2; {len(checked)} kernel elements vanish",
                       {"samples": len(checked), "seed": seed})


# univariate integer polynomials as coefficient lists (lowest degree first)

def _ptrim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def _pmul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _ptrim(out)


def _padd(a, b):
    n = max(len(a), len(b))
    return _ptrim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def _pmod_monic(a, m):
    """Remainder of ``a`` modulo the monic polynomial ``m``."""
    a = list(a)
    while len(a) >= len(m):
        c = a[-1]
        shift = len(a) - len(m)
        for i, x in enumerate(m):
            a[shift + i] -= c * x
        _ptrim(a)
    return a


def gn_inverse_identity(n: int) -> bool:
    """``(1 - u) * -(1 + y + ... + y^(n-1)) == 1`` modulo ``y^n`` with ``y = 2 - u``."""
    y = [2, -1]
    one_minus_u = [1, -1]
    series, power = [], [1]
    for _ in range(n):
        series = _padd(series, power)
        power = _pmul(power, y)
    prod = _pmul(one_minus_u, [-c for c in series])
    modulus = [1]
    for _ in range(n):
        modulus = _pmul(modulus, [-2, 1])  # (u - 2)^n, monic; same ideal as y^n
    return _pmod_monic(prod, modulus) == [1]


def _check_f(entry, max_n=8):
    d, n = entry.params["d"], entry.params["n"]
    R = LaurentRing(d)
    zero = [R.zero()]
    g1 = MagnusMatrix(R.u(0), [R.one()])   # m_1 e_1 with m_1 = 1
    g2 = MagnusMatrix(R.u(1), zero)        # m_2 e_2 with m_2 = 0
    c = g1.commutator(g2)
    scaled = c.m[0] * R.u(0) * R.u(1)
    if c.t != 1 or scaled != 1 - R.u(1):
        return CheckResult("f", False, "u_1 u_2 [m_1 e_1, m_2 e_2] != 1 - u_2")
    for k in range(1, max(n, max_n) + 1):
        if not gn_inverse_identity(k):
            return CheckResult("f", False, f"inverse series fails modulo (2 - u_2)^{k}")
    return CheckResult("f", True, f"commutator gives 1 - u_2, invertible modulo (2 - u_2)^k for k <= {max(n, max_n)}",
                       {"generator_element": str(scaled)})


def _check_g(entry):
    if entry.rank_kind == "cb_external":
        got = cb_external(entry.descriptor, entry.fp.status == "Yes")
    else:
        got, _ = cb_rank(entry.descriptor)
    ok = got == entry.expected_rank
    return CheckResult("g", ok, f"{entry.rank_kind} = {format_rank(got)} (expected {format_rank(entry.expected_rank)})",
                       {"value": format_rank(got)})


def _check_fp(entry):
    if entry.bs_module is None:
        return CheckResult("fp", True, f"{entry.fp.status} ({'; '.join(entry.fp.chain)})")
    direct = finitely_presented(entry.bs_module)
    # a justification chain must not contradict the module verdict it starts from
    ok = direct.status == entry.fp.status or entry.fp.status == "Unknown"
    return CheckResult("fp", ok, f"{entry.fp.status} via {'; '.join(entry.fp.chain)}",
                       {"module_verdict": direct.status})


_CHECKS = {"a": _check_a, "b": _check_b, "c": _check_c, "d": _check_d, "e": _check_e, "f": _check_f, "g": _check_g, "fp": _check_fp}


def verify(entry: CatalogEntry, *, max_d: int = MAX_VERIFY_D, raise_on_failure: bool = True) -> VerificationReport:
    """Run every check listed for ``entry``.

    Raises :class:`VerificationFailure` naming the first failed check unless
    ``raise_on_failure`` is False.
    """
    d = entry.params.get("d")
    if d is not None and d > max_d:
        raise CatalogError(f"verification is limited to d <= {max_d} (got d = {d})")
    results = []
    for name in entry.checks:
        try:
            results.append(_CHECKS[name](entry))
        except Exception as exc:  # a crashing check is a failed check
            results.append(CheckResult(name, False, f"{type(exc).__name__}: {exc}"))
    report = VerificationReport(entry.label, results)
    if raise_on_failure:
        for r in results:
            if not r.passed:
                raise VerificationFailure(r.name, r.detail, report)
    return report
