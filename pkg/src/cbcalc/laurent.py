"""Exact arithmetic in Z[u_1^±, ..., u_d^±, (1+u_1)^-1, ..., (1+u_d)^-1].

Elements are stored as ``numerator / (prod u_i^a_i * prod (1+u_i)^b_i)`` with
an integer polynomial numerator kept as a sparse ``{exponent tuple: coeff}``
map.  The normal form has the smallest possible denominator exponents, so
equality is structural.

The same ring is often written with generators ``x_i`` and ``1 - x_i``
(inverting ``s = prod x_i (1 - x_i)``).  The substitution ``x_i = -u_i``
identifies the two; :meth:`LaurentRing.x` builds ``x_i`` and
:func:`format_x` prints an element in the ``x`` presentation.
"""

from __future__ import annotations

import ast
import re
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import ArityError, NotAnEndomorphism, NotInvertible, ParseError, ValuationOfZero

__all__ = [
    "LaurentRing",
    "LaurentElement",
    "LocalizedLaurentElement",
    "MagnusMatrix",
    "substitute",
    "compose",
    "automorphism_power",
    "induced_exponent_matrix",
    "ord_u",
    "ord_onepu",
    "top_deg",
    "format_x",
    "evaluate",
]


# -- sparse polynomial helpers (dict: exponent tuple -> nonzero int) -------------------

def _padd(a: dict, b: dict, sign: int = 1) -> dict:
    out = dict(a)
    for e, c in b.items():
        v = out.get(e, 0) + sign * c
        if v:
            out[e] = v
        else:
            out.pop(e, None)
    return out


def _pmul(a: dict, b: dict) -> dict:
    if len(a) < len(b):
        a, b = b, a
    out: dict = {}
    for eb, cb in b.items():
        for ea, ca in a.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            v = out.get(e, 0) + ca * cb
            if v:
                out[e] = v
            else:
                del out[e]
    return out


def _pshift(a: dict, shift: Sequence[int]) -> dict:
    if not any(shift):
        return a
    return {tuple(x + s for x, s in zip(e, shift)): c for e, c in a.items()}


def _pmul_onepu(a: dict, i: int, k: int) -> dict:
    for _ in range(k):
        sh = [0] * len(next(iter(a))) if a else []
        if not a:
            return a
        sh[i] = 1
        a = _padd(a, _pshift(a, sh))
    return a


def _pdiv_onepu(a: dict, i: int):
    """Exact quotient of ``a`` by ``1 + u_i``, or None if it does not divide."""
    if not a:
        return {}
    # group by the other exponents, divide each univariate slice
    slices: dict = {}
    for e, c in a.items():
        key = e[:i] + e[i + 1:]
        slices.setdefault(key, {})[e[i]] = c
    out = {}
    for key, coeffs in slices.items():
        top = max(coeffs)
        # synthetic division by (u + 1): root -1
        q = [0] * top
        carry = 0
        for k in range(top, 0, -1):
            carry = coeffs.get(k, 0) - carry
            q[k - 1] = carry
        if coeffs.get(0, 0) - carry != 0:
            return None
        for k, c in enumerate(q):
            if c:
                out[key[:i] + (k,) + key[i:]] = c
    return out


def _low(a: dict, i: int) -> int:
    return min(e[i] for e in a)


def _high(a: dict, i: int) -> int:
    return max(e[i] for e in a)


class LaurentElement:
    """Element of the localized Laurent ring in ``nvars`` variables (immutable)."""

    __slots__ = ("nvars", "num", "du", "dv", "_hash")

    def __init__(self, nvars: int, num: dict, du: Sequence[int] = None, dv: Sequence[int] = None, *, _normal=False):
        self.nvars = nvars
        du = tuple(du) if du is not None else (0,) * nvars
        dv = tuple(dv) if dv is not None else (0,) * nvars
        if _normal:
            self.num, self.du, self.dv = num, du, dv
        else:
            self.num, self.du, self.dv = _normalize(nvars, {e: c for e, c in num.items() if c}, du, dv)
        self._hash = None

    # arithmetic ------------------------------------------------------------------
    def _coerce(self, other) -> "LaurentElement":
        if isinstance(other, LaurentElement):
            if other.nvars != self.nvars:
                raise ArityError(f"variable count mismatch: {self.nvars} vs {other.nvars}")
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return LaurentRing(self.nvars).const(other)
        raise TypeError(f"cannot combine LaurentElement with {type(other).__name__}")

    def __add__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        du = tuple(max(a, b) for a, b in zip(self.du, other.du))
        dv = tuple(max(a, b) for a, b in zip(self.dv, other.dv))
        return LaurentElement(self.nvars, _padd(self._lift(du, dv), other._lift(du, dv)), du, dv)

    __radd__ = __add__

    def __neg__(self):
        return LaurentElement(self.nvars, {e: -c for e, c in self.num.items()}, self.du, self.dv, _normal=True)

    def __sub__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        du = tuple(a + b for a, b in zip(self.du, other.du))
        dv = tuple(a + b for a, b in zip(self.dv, other.dv))
        return LaurentElement(self.nvars, _pmul(self.num, other.num), du, dv)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = LaurentRing(self.nvars).one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __truediv__(self, other):
        other = self._coerce(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def _lift(self, du, dv) -> dict:
        """Numerator over the larger denominator ``u^du (1+u)^dv``."""
        num = _pshift(self.num, [a - b for a, b in zip(du, self.du)])
        for i, (a, b) in enumerate(zip(dv, self.dv)):
            if a > b:
                num = _pmul_onepu(num, i, a - b)
        return num

    def __eq__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            other = LaurentRing(self.nvars).const(other)
        if not isinstance(other, LaurentElement):
            return NotImplemented
        return (self.nvars, self.num, self.du, self.dv) == (other.nvars, other.num, other.du, other.dv)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.num.items()), self.du, self.dv))
        return self._hash

    def is_zero(self) -> bool:
        return not self.num

    def __bool__(self):
        return bool(self.num)

    # units -----------------------------------------------------------------------
    def unit_factorization(self):
        """``(sign, a, b)`` with ``self = sign * prod u^a (1+u)^b``, or None if not a unit."""
        if not self.num:
            return None
        num = self.num
        lows = [_low(num, i) for i in range(self.nvars)]
        num = _pshift(num, [-x for x in lows])
        bs = []
        for i in range(self.nvars):
            k = 0
            while True:
                q = _pdiv_onepu(num, i)
                if q is None:
                    break
                num, k = q, k + 1
            bs.append(k)
        zero = (0,) * self.nvars
        if len(num) != 1 or zero not in num or abs(num[zero]) != 1:
            return None
        a = tuple(l - d for l, d in zip(lows, self.du))
        b = tuple(k - d for k, d in zip(bs, self.dv))
        return num[zero], a, b

    def is_unit(self) -> bool:
        return self.unit_factorization() is not None

    def inverse(self) -> "LaurentElement":
        f = self.unit_factorization()
        if f is None:
            raise NotInvertible(f"{self} is not a unit")
        sign, a, b = f
        return _unit(self.nvars, sign, [-x for x in a], [-x for x in b])

    # text ------------------------------------------------------------------------
    def __str__(self):
        return _format(self, _var_names(self.nvars, "u"), "1+")

    def __repr__(self):
        return f"LaurentElement({str(self)!r})"

    def substitute(self, images):
        return substitute(self, images)


LocalizedLaurentElement = LaurentElement


def _normalize(nvars, num, du, dv):
    if not num:
        return {}, (0,) * nvars, (0,) * nvars
    du, dv = list(du), list(dv)
    shift = [0] * nvars
    for i in range(nvars):
        if du[i] > 0:
            k = min(du[i], _low(num, i))
            shift[i] = -k
            du[i] -= k
    num = _pshift(num, shift)
    for i in range(nvars):
        while dv[i] > 0:
            q = _pdiv_onepu(num, i)
            if q is None:
                break
            num = q
            dv[i] -= 1
    return num, tuple(du), tuple(dv)


def _unit(nvars, sign, a, b) -> LaurentElement:
    num = {tuple(max(0, x) for x in a): sign}
    num = _pmul_onepu_multi(num, [max(0, x) for x in b])
    return LaurentElement(nvars, num, [max(0, -x) for x in a], [max(0, -x) for x in b])


def _pmul_onepu_multi(num, ks):
    for i, k in enumerate(ks):
        if k:
            num = _pmul_onepu(num, i, k)
    return num


def _var_names(nvars, letter):
    if nvars == 1:
        return [letter]
    return [f"{letter}{i + 1}" for i in range(nvars)]


def _format_poly(num: dict, names) -> str:
    if not num:
        return "0"
    parts = []
    for e in sorted(num, reverse=True):
        c = num[e]
        mono = "*".join(n if k == 1 else f"{n}^{k}" for n, k in zip(names, e) if k)
        if not mono:
            body = str(abs(c))
        elif abs(c) == 1:
            body = mono
        else:
            body = f"{abs(c)}*{mono}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)


def _format(a: LaurentElement, names, onep: str, num=None) -> str:
    num = a.num if num is None else num
    top = _format_poly(num, names)
    den = []
    for n, k in zip(names, a.du):
        if k:
            den.append(n if k == 1 else f"{n}^{k}")
    for n, k in zip(names, a.dv):
        if k:
            den.append(f"({onep}{n})" if k == 1 else f"({onep}{n})^{k}")
    if not den:
        return top
    if len(num) > 1:
        top = f"({top})"
    return f"{top}/{den[0]}" if len(den) == 1 else f"{top}/({'*'.join(den)})"


def format_x(a: LaurentElement) -> str:
    """Print ``a`` in the generators ``x_i = -u_i`` and ``1 - x_i = 1 + u_i``."""
    total_du = sum(a.du)
    sign = -1 if total_du % 2 else 1
    num = {e: sign * c * (-1) ** sum(e) for e, c in a.num.items()}
    return _format(a, _var_names(a.nvars, "x"), "1-", num)


class LaurentRing:
    """Factory for elements in a fixed number of variables."""

    def __init__(self, nvars: int):
        if nvars < 1:
            raise ArityError("need at least one variable")
        self.nvars = nvars

    def __eq__(self, other):
        return isinstance(other, LaurentRing) and other.nvars == self.nvars

    def __hash__(self):
        return hash(("LaurentRing", self.nvars))

    def __repr__(self):
        return f"LaurentRing({self.nvars})"

    def zero(self):
        return LaurentElement(self.nvars, {})

    def one(self):
        return self.const(1)

    def const(self, c: int):
        return LaurentElement(self.nvars, {(0,) * self.nvars: c} if c else {})

    def u(self, i: int):
        """The variable ``u_i`` (0-based index)."""
        e = [0] * self.nvars
        e[i] = 1
        return LaurentElement(self.nvars, {tuple(e): 1})

    def onepu(self, i: int):
        return self.u(i) + 1

    def x(self, i: int):
        return -self.u(i)

    def monomial(self, a: Sequence[int], b: Sequence[int] = None, sign: int = 1):
        """``sign * prod u_i^a_i (1+u_i)^b_i`` for integer exponents of any sign."""
        b = b if b is not None else [0] * self.nvars
        return _unit(self.nvars, sign, list(a), list(b))

    def parse(self, text: str) -> LaurentElement:
        return _parse(self, text)

    def random_element(self, rng, terms: int = 3, degree: int = 3, coeff: int = 5, den: int = 2):
        num = {}
        for _ in range(terms):
            e = tuple(rng.randint(0, degree) for _ in range(self.nvars))
            num[e] = num.get(e, 0) + rng.randint(-coeff, coeff)
        du = [rng.randint(0, den) for _ in range(self.nvars)]
        dv = [rng.randint(0, den) for _ in range(self.nvars)]
        return LaurentElement(self.nvars, num, du, dv)


# -- parsing -------------------------------------------------------------------------

_NAME = re.compile(r"^([ux])(\d*)$")


def _parse(ring: LaurentRing, text: str) -> LaurentElement:
    src = text.replace("^", "**")
    try:
        tree = ast.parse(src, mode="eval")
    except SyntaxError as exc:
        raise ParseError(f"cannot parse Laurent expression {text!r}: {exc.msg}", exc.offset and exc.offset - 1, text) from None

    def walk(node):
        if isinstance(node, ast.Expression):
            return walk(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, int) and not isinstance(node.value, bool):
            return ring.const(node.value)
        if isinstance(node, ast.Name):
            m = _NAME.match(node.id)
            if not m:
                raise ParseError(f"unknown variable {node.id!r}", node.col_offset, text)
            idx = int(m.group(2)) - 1 if m.group(2) else 0
            if m.group(2) == "" and ring.nvars != 1:
                raise ParseError(f"bare {node.id!r} is ambiguous with {ring.nvars} variables", node.col_offset, text)
            if not 0 <= idx < ring.nvars:
                raise ParseError(f"variable {node.id!r} out of range for {ring.nvars} variables", node.col_offset, text)
            return ring.u(idx) if m.group(1) == "u" else ring.x(idx)
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            v = walk(node.operand)
            return -v if isinstance(node.op, ast.USub) else v
        if isinstance(node, ast.BinOp):
            left = walk(node.left)
            if isinstance(node.op, ast.Pow):
                exp = node.right
                neg = False
                if isinstance(exp, ast.UnaryOp) and isinstance(exp.op, ast.USub):
                    exp, neg = exp.operand, True
                if not (isinstance(exp, ast.Constant) and isinstance(exp.value, int)):
                    raise ParseError("exponents must be integer literals", node.col_offset, text)
                try:
                    return left ** (-exp.value if neg else exp.value)
                except NotInvertible as exc:
                    raise ParseError(str(exc), node.col_offset, text) from None
            right = walk(node.right)
            if isinstance(node.op, ast.Add):
                return left + right
            if isinstance(node.op, ast.Sub):
                return left - right
            if isinstance(node.op, ast.Mult):
                return left * right
            if isinstance(node.op, ast.Div):
                try:
                    return left / right
                except NotInvertible as exc:
                    raise ParseError(str(exc), node.col_offset, text) from None
        raise ParseError(f"unsupported syntax in {text!r}", getattr(node, "col_offset", None), text)

    return walk(tree)


# -- valuations --------------------------------------------------------------------------

def ord_u(a: LaurentElement, i: int) -> int:
    """Order of vanishing along ``u_i = 0``."""
    if not a.num:
        raise ValuationOfZero("valuation of zero")
    return _low(a.num, i) - a.du[i]


def ord_onepu(a: LaurentElement, i: int) -> int:
    """Order of vanishing along ``u_i = -1``."""
    if not a.num:
        raise ValuationOfZero("valuation of zero")
    num, k = a.num, 0
    while True:
        q = _pdiv_onepu(num, i)
        if q is None:
            break
        num, k = q, k + 1
    return k - a.dv[i]


def top_deg(a: LaurentElement, i: int) -> int:
    """Degree in ``u_i`` at infinity (``-top_deg`` is the valuation there)."""
    if not a.num:
        raise ValuationOfZero("valuation of zero")
    return _high(a.num, i) - a.du[i] - a.dv[i]


# -- ring homomorphisms ------------------------------------------------------------------

def substitute(a: LaurentElement, images: Sequence[LaurentElement]) -> LaurentElement:
    """Apply the ring homomorphism ``u_i -> images[i]``.

    The images of ``u_i`` and of ``1 + u_i`` must be units, otherwise the map
    does not extend to the localized ring.
    """
    if len(images) != a.nvars:
        raise ArityError(f"need {a.nvars} images, got {len(images)}")
    images = list(images)
    target = images[0].nvars
    for img in images:
        if img.nvars != target:
            raise ArityError("images live in rings of different sizes")
    inv_u, inv_v = [], []
    for i, img in enumerate(images):
        try:
            inv_u.append(img.inverse() if a.du[i] else None)
            inv_v.append((img + 1).inverse() if a.dv[i] else None)
        except NotInvertible:
            raise NotAnEndomorphism(f"image of u{i + 1} or 1+u{i + 1} is not a unit") from None
    ring = LaurentRing(target)
    powers = [dict() for _ in images]

    def power(i, k):
        cache = powers[i]
        if k not in cache:
            cache[k] = images[i] ** k
        return cache[k]

    out = ring.zero()
    for e, c in a.num.items():
        term = ring.const(c)
        for i, k in enumerate(e):
            if k:
                term = term * power(i, k)
        out = out + term
    for i in range(a.nvars):
        if a.du[i]:
            out = out * inv_u[i] ** a.du[i]
        if a.dv[i]:
            out = out * inv_v[i] ** a.dv[i]
    return out


def check_endomorphism(images: Sequence[LaurentElement]):
    for i, img in enumerate(images):
        if not img.is_unit() or not (img + 1).is_unit():
            raise NotAnEndomorphism(f"image of u{i + 1} or 1+u{i + 1} is not a unit")


def compose(first: Sequence[LaurentElement], second: Sequence[LaurentElement]):
    """Images of the map 'apply ``first``, then ``second``'."""
    return [substitute(img, second) for img in first]


def automorphism_power(images: Sequence[LaurentElement], k: int):
    ring = LaurentRing(len(images))
    result = [ring.u(i) for i in range(ring.nvars)]
    for _ in range(k):
        result = compose(result, images)
    return result


def induced_exponent_matrix(images: Sequence[LaurentElement]):
    """Exponent action of a map sending generators to monomial units.

    Rows are the exponent vectors ``(a_1..a_d, b_1..b_d)`` of the images of
    ``u_1..u_d`` followed by ``1+u_1..1+u_d``, so ``u^a (1+u)^b`` goes to
    ``± u^a' (1+u)^b'`` with ``(a', b') = (a, b) @ matrix``.
    """
    d = len(images)
    rows = []
    for gen in list(images) + [img + 1 for img in images]:
        f = gen.unit_factorization()
        if f is None:
            raise NotAnEndomorphism(f"{gen} is not a monomial unit")
        rows.append(list(f[1]) + list(f[2]))
    return rows


def evaluate(a: LaurentElement, point: Sequence) -> Fraction:
    """Exact value at a rational point (raises ZeroDivisionError off the domain)."""
    point = [Fraction(p) for p in point]
    total = Fraction(0)
    for e, c in a.num.items():
        t = Fraction(c)
        for p, k in zip(point, e):
            t *= p ** k
        total += t
    for p, k in zip(point, a.du):
        total /= p ** k
    for p, k in zip(point, a.dv):
        total /= (1 + p) ** k
    return total


# -- 2x2 affine matrices -----------------------------------------------------------------

class MagnusMatrix:
    """The matrix ``[[t, m], [0, 1]]`` with ``t`` a unit and ``m`` a vector."""

    __slots__ = ("t", "m")

    def __init__(self, t: LaurentElement, m: Iterable[LaurentElement]):
        m = tuple(m)
        for x in m:
            if x.nvars != t.nvars:
                raise ArityError("entries live in different rings")
        if not t.is_unit():
            raise NotInvertible(f"diagonal entry {t} is not a unit")
        self.t = t
        self.m = m

    @classmethod
    def identity(cls, ring: LaurentRing, k: int):
        return cls(ring.one(), [ring.zero()] * k)

    def __mul__(self, other: "MagnusMatrix") -> "MagnusMatrix":
        if len(self.m) != len(other.m):
            raise ArityError("matrix vector parts differ in length")
        return MagnusMatrix(self.t * other.t, [self.t * b + a for a, b in zip(self.m, other.m)])

    def inverse(self) -> "MagnusMatrix":
        ti = self.t.inverse()
        return MagnusMatrix(ti, [-(ti * a) for a in self.m])

    def commutator(self, other: "MagnusMatrix") -> "MagnusMatrix":
        """``self^-1 other^-1 self other``."""
        return self.inverse() * other.inverse() * self * other

    def is_identity(self) -> bool:
        return self.t == 1 and all(x.is_zero() for x in self.m)

    def __eq__(self, other):
        if not isinstance(other, MagnusMatrix):
            return NotImplemented
        return self.t == other.t and self.m == other.m

    def __hash__(self):
        return hash((self.t, self.m))

    def __repr__(self):
        return f"MagnusMatrix(t={self.t}, m=[{', '.join(map(str, self.m))}])"
