"""Ordinals below epsilon_0 in Cantor normal form.

An :class:`Ordinal` is an immutable tuple of ``(exponent, coefficient)``
terms with strictly decreasing exponents (themselves ordinals) and positive
integer coefficients.  The empty tuple is 0.

Text syntax uses ``w`` (or ``ω``) for omega::

    w^w*3 + w + 1
    w^(w+1) + w^2*4 + 7

Only the operations needed for lengths of modules are provided: comparison,
ordinary sum, natural (Hessenberg) sum, the reduction ``a = w*q + r`` and the
degree.  There is deliberately no general multiplication.
"""

from __future__ import annotations

import re
from functools import total_ordering
from typing import Iterable, NamedTuple

from .errors import DegreeOfZero, ParseError

__all__ = [
    "Ordinal",
    "ReducedPair",
    "ZERO",
    "ONE",
    "OMEGA",
    "omega_power",
    "compare",
    "add",
    "natural_sum",
    "reduce",
    "degree",
    "omega_times",
    "format_ordinal",
    "parse_ordinal",
    "evaluate",
    "from_json",
]


def _coerce(x) -> "Ordinal":
    if isinstance(x, Ordinal):
        return x
    if isinstance(x, int) and not isinstance(x, bool):
        return Ordinal.from_int(x)
    raise TypeError(f"cannot interpret {x!r} as an ordinal")


@total_ordering
class Ordinal:
    """An ordinal below epsilon_0, stored in Cantor normal form."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Iterable[tuple["Ordinal", int]] = ()):
        terms = tuple((_coerce(e), int(c)) for e, c in terms)
        for i, (e, c) in enumerate(terms):
            if c < 1:
                raise ValueError("Cantor normal form coefficients must be positive")
            if i and not _cmp(terms[i - 1][0], e) > 0:
                raise ValueError("Cantor normal form exponents must strictly decrease")
        self._terms = terms
        self._hash = None

    @classmethod
    def from_int(cls, n: int) -> "Ordinal":
        if n < 0:
            raise ValueError("ordinals are non-negative")
        return ZERO if n == 0 else cls(((ZERO, n),))

    @property
    def terms(self) -> tuple[tuple["Ordinal", int], ...]:
        return self._terms

    def is_zero(self) -> bool:
        return not self._terms

    def is_finite(self) -> bool:
        return not self._terms or self._terms[0][0].is_zero()

    def __int__(self):
        if not self.is_finite():
            raise ValueError(f"{self} is infinite")
        return self._terms[0][1] if self._terms else 0

    def finite_part(self) -> int:
        """Coefficient of the w^0 term."""
        if self._terms and self._terms[-1][0].is_zero():
            return self._terms[-1][1]
        return 0

    def is_successor(self) -> bool:
        return self.finite_part() > 0

    def is_limit(self) -> bool:
        return bool(self._terms) and self.finite_part() == 0

    def leading_coefficient(self) -> int:
        if not self._terms:
            raise DegreeOfZero("zero has no leading term")
        return self._terms[0][1]

    def coefficient(self, exponent) -> int:
        exponent = _coerce(exponent)
        for e, c in self._terms:
            if e == exponent:
                return c
        return 0

    def __eq__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            other = Ordinal.from_int(other) if other >= 0 else None
            if other is None:
                return False
        if not isinstance(other, Ordinal):
            return NotImplemented
        return self._terms == other._terms

    def __lt__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            if other < 0:
                return False
            other = Ordinal.from_int(other)
        if not isinstance(other, Ordinal):
            return NotImplemented
        return _cmp(self, other) < 0

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._terms)
        return self._hash

    def __add__(self, other):
        try:
            other = _coerce(other)
        except TypeError:
            return NotImplemented
        return add(self, other)

    def __radd__(self, other):
        try:
            other = _coerce(other)
        except TypeError:
            return NotImplemented
        return add(other, self)

    def __bool__(self):
        return bool(self._terms)

    def __repr__(self):
        return f"Ordinal({format_ordinal(self)!r})"

    def __str__(self):
        return format_ordinal(self)

    def to_json(self):
        return [[e.to_json(), c] for e, c in self._terms]


def from_json(data) -> Ordinal:
    if isinstance(data, int):
        return Ordinal.from_int(data)
    return Ordinal((from_json(e), int(c)) for e, c in data)


def _cmp(a: Ordinal, b: Ordinal) -> int:
    for (ea, ca), (eb, cb) in zip(a._terms, b._terms):
        c = _cmp(ea, eb)
        if c:
            return c
        if ca != cb:
            return -1 if ca < cb else 1
    la, lb = len(a._terms), len(b._terms)
    return (la > lb) - (la < lb)


def compare(a, b) -> int:
    """Return -1, 0 or 1 as ``a`` is less than, equal to or greater than ``b``."""
    return _cmp(_coerce(a), _coerce(b))


ZERO = Ordinal()
ONE = Ordinal(((ZERO, 1),))
OMEGA = Ordinal(((ONE, 1),))


def omega_power(exponent, coefficient: int = 1) -> Ordinal:
    """The ordinal w^exponent * coefficient."""
    if coefficient == 0:
        return ZERO
    return Ordinal(((_coerce(exponent), coefficient),))


def add(a, b) -> Ordinal:
    """Ordinary (left-absorbing) ordinal sum ``a + b``."""
    a, b = _coerce(a), _coerce(b)
    if not b._terms:
        return a
    lead, lead_c = b._terms[0]
    kept = []
    for e, c in a._terms:
        s = _cmp(e, lead)
        if s > 0:
            kept.append((e, c))
        elif s == 0:
            lead_c += c
            break
        else:
            break
    return Ordinal(kept + [(lead, lead_c)] + list(b._terms[1:]))


def natural_sum(a, b) -> Ordinal:
    """Hessenberg sum: coefficientwise addition of Cantor normal forms."""
    a, b = _coerce(a), _coerce(b)
    out = []
    i = j = 0
    ta, tb = a._terms, b._terms
    while i < len(ta) and j < len(tb):
        s = _cmp(ta[i][0], tb[j][0])
        if s > 0:
            out.append(ta[i])
            i += 1
        elif s < 0:
            out.append(tb[j])
            j += 1
        else:
            out.append((ta[i][0], ta[i][1] + tb[j][1]))
            i += 1
            j += 1
    out.extend(ta[i:])
    out.extend(tb[j:])
    return Ordinal(out)


def _one_plus(e: Ordinal) -> Ordinal:
    return add(ONE, e)


def _minus_one_finite(e: Ordinal) -> Ordinal:
    return Ordinal.from_int(int(e) - 1)


class ReducedPair(NamedTuple):
    quotient: Ordinal
    remainder: int


def reduce(a) -> ReducedPair:
    """Split ``a`` as ``w * quotient + remainder`` with a finite remainder."""
    a = _coerce(a)
    terms = []
    rem = 0
    for e, c in a._terms:
        if e.is_zero():
            rem = c
        elif e.is_finite():
            terms.append((_minus_one_finite(e), c))
        else:
            terms.append((e, c))
    return ReducedPair(Ordinal(terms), rem)


def omega_times(q) -> Ordinal:
    """Left multiplication ``w * q`` (inverse of the quotient part of :func:`reduce`)."""
    q = _coerce(q)
    return Ordinal((_one_plus(e), c) for e, c in q._terms)


def degree(a) -> Ordinal:
    """Leading exponent; undefined for 0."""
    a = _coerce(a)
    if not a._terms:
        raise DegreeOfZero("degree of the zero ordinal is undefined")
    return a._terms[0][0]


# -- text ---------------------------------------------------------------------

def _format_exponent(e: Ordinal) -> str:
    if e.is_finite():
        return str(int(e))
    if len(e._terms) == 1 and e._terms[0][1] == 1:
        return format_ordinal(e)
    return f"({format_ordinal(e)})"


def format_ordinal(a, *, unicode: bool = False) -> str:
    """Canonical spelling, e.g. ``w^2*3 + w + 4``."""
    a = _coerce(a)
    if not a._terms:
        return "0"
    parts = []
    for e, c in a._terms:
        if e.is_zero():
            parts.append(str(c))
            continue
        base = "w" if e == ONE else f"w^{_format_exponent(e)}"
        parts.append(base if c == 1 else f"{base}*{c}")
    s = " + ".join(parts)
    return s.replace("w", "ω") if unicode else s


_TOKEN = re.compile(r"\s*(?:(\d+)|(\(\+\))|([wω])|(reduce|deg|rem)|([()^*+⊕#,]))")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = []
        pos = 0
        while pos < len(text):
            if text[pos:].strip() == "":
                break
            m = _TOKEN.match(text, pos)
            if not m:
                raise ParseError(f"unexpected character {text[pos:].lstrip()[:1]!r}", len(text) - len(text[pos:].lstrip()), text)
            start = m.start(m.lastindex)
            if m.group(1):
                self.tokens.append(("nat", int(m.group(1)), start))
            elif m.group(2):
                self.tokens.append(("nsum", "(+)", start))
            elif m.group(3):
                self.tokens.append(("w", "w", start))
            elif m.group(4):
                self.tokens.append(("fn", m.group(4), start))
            else:
                tok = m.group(5)
                kind = "nsum" if tok in "⊕#" else tok
                self.tokens.append((kind, tok, start))
            pos = m.end()
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else ("eof", None, len(self.text))

    def take(self, kind=None):
        tok = self.peek()
        if kind is not None and tok[0] != kind:
            what = "end of input" if tok[0] == "eof" else repr(tok[1])
            raise ParseError(f"expected {kind!r}, found {what}", tok[2], self.text)
        self.i += 1
        return tok

    def done(self):
        tok = self.peek()
        if tok[0] != "eof":
            raise ParseError(f"unexpected {tok[1]!r}", tok[2], self.text)

    # strict canonical literal
    def literal(self) -> Ordinal:
        terms = [self.term()]
        while self.peek()[0] == "+":
            self.take()
            terms.append(self.term())
        if len(terms) == 1 and terms[0][0] is None:
            return Ordinal.from_int(terms[0][1])
        out = []
        for k, (e, c, pos) in enumerate(terms):
            e = ZERO if e is None else e
            if c == 0:
                raise ParseError("zero coefficient in a Cantor normal form term", pos, self.text)
            if out and not _cmp(out[-1][0], e) > 0:
                raise ParseError("exponents must be strictly decreasing", pos, self.text)
            out.append((e, c))
        return Ordinal(out)

    def term(self):
        tok = self.peek()
        if tok[0] == "nat":
            self.take()
            return (None, tok[1], tok[2])
        if tok[0] == "w":
            self.take()
            e = ONE
            if self.peek()[0] == "^":
                self.take()
                e = self.exponent()
            c = 1
            if self.peek()[0] == "*":
                self.take()
                c = self.take("nat")[1]
            return (e, c, tok[2])
        what = "end of input" if tok[0] == "eof" else repr(tok[1])
        raise ParseError(f"expected a term, found {what}", tok[2], self.text)

    def exponent(self) -> Ordinal:
        tok = self.peek()
        if tok[0] == "nat":
            self.take()
            return Ordinal.from_int(tok[1])
        if tok[0] == "w":
            self.take()
            if self.peek()[0] == "^":
                self.take()
                return omega_power(self.exponent())
            return OMEGA
        if tok[0] == "(":
            self.take()
            e = self.literal()
            self.take(")")
            return e
        raise ParseError("expected an exponent", tok[2], self.text)

    # lenient expression language used by the command line
    def expr(self) -> Ordinal:
        value = self.osum()
        while self.peek()[0] == "nsum":
            self.take()
            value = natural_sum(value, self.osum())
        return value

    def osum(self) -> Ordinal:
        value = self.atom()
        while self.peek()[0] == "+":
            self.take()
            value = add(value, self.atom())
        return value

    def atom(self) -> Ordinal:
        tok = self.peek()
        if tok[0] == "(":
            self.take()
            value = self.expr()
            self.take(")")
            return value
        if tok[0] == "fn":
            self.take()
            self.take("(")
            value = self.expr()
            self.take(")")
            if tok[1] == "reduce":
                return reduce(value).quotient
            if tok[1] == "rem":
                return Ordinal.from_int(reduce(value).remainder)
            return degree(value)
        e, c, _ = self.term()
        return Ordinal.from_int(c) if e is None else omega_power(e, c)


def parse_ordinal(text: str) -> Ordinal:
    """Parse a canonical Cantor-normal-form literal such as ``w^w*3 + w + 1``."""
    p = _Parser(text)
    value = p.literal()
    p.done()
    return value


def evaluate(text: str) -> Ordinal:
    """Evaluate an ordinal expression.

    ``+`` is the ordinary sum (terms need not be in Cantor order), ``⊕``, ``#``
    or ``(+)`` the natural sum, and ``reduce(x)``, ``rem(x)``, ``deg(x)`` give
    the quotient and remainder of ``x = w*q + r`` and the degree.
    """
    p = _Parser(text)
    value = p.expr()
    p.done()
    return value
