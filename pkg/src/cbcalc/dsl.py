"""Text format for module, group and Bieri-Strebel module descriptors.

::

    doc   := ("group" | "module") expr
    expr  := NAME [ "(" [arg ("," arg)*] ")" ] | "Z" ["^" INT] | INT | BOOL
           | "(" value, ... ")" | "[" value, ... "]"
    arg   := [NAME "="] expr

Errors carry 1-based line and column numbers.  :func:`format_group` and
:func:`format_module` print descriptors back in a form that parses to an
equal descriptor.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional

from . import catalog as _catalog
from .errors import CatalogError, DescriptorError, ParseError
from .grouprank import (
    Cyclic,
    FiniteFactor,
    FreeAbelian,
    FreeAbelianByFinite,
    FreeMetabelian,
    InfiniteCyclic,
    MetabelianExt,
    Polycyclic,
    VirtuallyMetabelian,
    Wreath,
    WreathPermutational,
)
from .modlen import Critical, DirectSum, Extension, Finite, Series, TorsionFree
from .sigma import ClassicalRing, ExplicitFan, GroupRing, Tensor, format_module as format_bs_module, tensor_power

__all__ = [
    "DSLError",
    "DescriptorDocument",
    "parse_dsl",
    "parse_group",
    "parse_module",
    "parse_bs_module",
    "format_group",
    "format_module",
    "format_document",
    "format_bs_module",
]


class DSLError(ParseError):
    """Parse or construction error with a 1-based ``line`` and ``column``."""

    def __init__(self, message, line, column, text=None, offset=None):
        self.line = line
        self.column = column
        self.bare_message = message
        ParseError.__init__(self, f"line {line}, column {column}: {message}", None, text)
        self.position = offset


# -- tokens -------------------------------------------------------------------------------

_TOKEN = re.compile(
    r"""
    (?P<ws>\s+|\#[^\n]*)
  | (?P<int>-?\d+)
  | (?P<name>[A-Za-z_][A-Za-z0-9_']*)
  | (?P<op>[(),=\[\]^;])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class _Tok:
    kind: str
    text: str
    offset: int


def _tokenize(text):
    pos, out = 0, []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            line, col = _linecol(text, pos)
            raise DSLError(f"unexpected character {text[pos]!r}", line, col, text, pos)
        kind = m.lastgroup
        if kind != "ws":
            out.append(_Tok(kind, m.group(), pos))
        pos = m.end()
    out.append(_Tok("eof", "", len(text)))
    return out


def _linecol(text, offset):
    line = text.count("\n", 0, offset) + 1
    col = offset - (text.rfind("\n", 0, offset) + 1) + 1
    return line, col


# -- syntax tree --------------------------------------------------------------------------

@dataclass
class _Node:
    kind: str  # call, name, int, power, tuple, list
    value: object
    offset: int
    args: list = None
    kwargs: dict = None


class _Parser:
    def __init__(self, text):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def error(self, msg, offset=None):
        if offset is None:
            offset = self.peek().offset
        line, col = _linecol(self.text, offset)
        return DSLError(msg, line, col, self.text, offset)

    def peek(self, k=0):
        return self.toks[min(self.i + k, len(self.toks) - 1)]

    def next(self):
        t = self.peek()
        self.i += 1
        return t

    def expect(self, text):
        t = self.peek()
        if t.text != text:
            found = "end of input" if t.kind == "eof" else repr(t.text)
            raise self.error(f"expected {text!r}, found {found}")
        return self.next()

    def expr(self) -> _Node:
        t = self.peek()
        if t.kind == "int":
            self.next()
            return _Node("int", int(t.text), t.offset)
        if t.text in ("(", "["):
            close = ")" if t.text == "(" else "]"
            self.next()
            items = []
            while self.peek().text != close:
                items.append(self.expr())
                if self.peek().text in (",", ";"):
                    self.next()
                elif self.peek().text != close:
                    raise self.error(f"expected ',' or {close!r}")
            self.next()
            return _Node("tuple" if close == ")" else "list", items, t.offset)
        if t.kind != "name":
            found = "end of input" if t.kind == "eof" else repr(t.text)
            raise self.error(f"expected an expression, found {found}")
        self.next()
        if self.peek().text == "^":
            self.next()
            e = self.peek()
            if e.kind != "int":
                raise self.error("expected an integer exponent")
            self.next()
            return _Node("power", (t.text, int(e.text)), t.offset)
        if self.peek().text != "(":
            return _Node("name", t.text, t.offset)
        self.next()
        args, kwargs = [], {}
        while self.peek().text != ")":
            if self.peek().kind == "name" and self.peek(1).text == "=":
                key = self.next()
                self.next()
                if key.text in kwargs:
                    raise self.error(f"parameter {key.text!r} given twice", key.offset)
                kwargs[key.text] = self.expr()
            else:
                if kwargs:
                    raise self.error("positional argument after keyword argument")
                args.append(self.expr())
            if self.peek().text == ",":
                self.next()
            elif self.peek().text != ")":
                raise self.error("expected ',' or ')'")
        self.next()
        return _Node("call", t.text, t.offset, args, kwargs)

    def done(self):
        t = self.peek()
        if t.kind != "eof":
            raise self.error(f"unexpected {t.text!r} after the expression")


# -- argument binding ----------------------------------------------------------------------

class _Call:
    """Binds positional/keyword arguments of one call node against a signature."""

    def __init__(self, parser, node, params, required=()):
        self.p = parser
        self.node = node
        args = node.args or []
        kwargs = dict(node.kwargs or {})
        if len(args) > len(params):
            raise parser.error(f"{node.value}() takes at most {len(params)} arguments", node.offset)
        self.values = {}
        for name, a in zip(params, args):
            self.values[name] = a
        for k, v in kwargs.items():
            canon = _ALIASES.get(k, k)
            if canon not in params:
                raise parser.error(f"{node.value}() has no parameter {k!r}", v.offset)
            if canon in self.values:
                raise parser.error(f"parameter {k!r} given twice", v.offset)
            self.values[canon] = v
        for r in required:
            if r not in self.values:
                raise parser.error(f"{node.value}() is missing parameter {r!r}", node.offset)

    def has(self, name):
        return name in self.values

    def int(self, name, default=None):
        v = self.values.get(name)
        if v is None:
            return default
        if v.kind != "int":
            raise self.p.error(f"parameter {name!r} must be an integer", v.offset)
        return v.value

    def bool(self, name, default=False):
        v = self.values.get(name)
        if v is None:
            return default
        if v.kind == "name" and v.value.lower() in ("true", "yes"):
            return True
        if v.kind == "name" and v.value.lower() in ("false", "no"):
            return False
        if v.kind == "int" and v.value in (0, 1):
            return bool(v.value)
        raise self.p.error(f"parameter {name!r} must be true or false", v.offset)

    def node_(self, name):
        return self.values.get(name)


_ALIASES = {
    "q_rank": "qrank",
    "rank_q": "qrank",
    "q_torsion_free": "torsionfree",
    "module_contains_centralizer": "centralizer",
    "prime_quotient": "prime",
    "invariant_ideal_dim": "ideal",
    "top_rank": "d",
    "base_nontrivial": "nontrivial",
    "diag_orbits_infinite": "infinite_orbits",
    "finitely_presented": "fp",
}


def _wrap(parser, node, fn):
    try:
        return fn()
    except (DescriptorError, ValueError, TypeError, CatalogError) as exc:
        if isinstance(exc, DSLError):
            raise
        msg = exc.args[0] if exc.args else str(exc)
        raise parser.error(str(msg), node.offset) from None


# -- modules -------------------------------------------------------------------------------

def _module(p: _Parser, node: _Node):
    if node.kind == "int":
        return _wrap(p, node, lambda: Finite(node.value))
    name = node.value.lower() if node.kind in ("call", "name") else None
    if node.kind == "name" and name == "zero":
        return Finite(0)
    if node.kind != "call":
        raise p.error("expected a module expression", node.offset)
    if name == "critical":
        c = _Call(p, node, ("dim",), ("dim",))
        return _wrap(p, node, lambda: Critical(c.int("dim")))
    if name in ("torsionfree", "tf"):
        c = _Call(p, node, ("dim", "rank"), ("dim",))
        return _wrap(p, node, lambda: TorsionFree(c.int("dim"), c.int("rank", 1)))
    if name == "finite":
        c = _Call(p, node, ("length",), ("length",))
        return _wrap(p, node, lambda: Finite(c.int("length")))
    if name in ("series", "directsum"):
        if node.kwargs:
            raise p.error(f"{node.value}() takes only positional arguments", node.offset)
        kids = [_module(p, a) for a in node.args]
        cls = Series if name == "series" else DirectSum
        return _wrap(p, node, lambda: cls(*kids))
    if name in ("ext", "extension"):
        c = _Call(p, node, ("sub", "quot"), ("sub", "quot"))
        sub = _module(p, c.node_("sub"))
        quot = _module(p, c.node_("quot"))
        return _wrap(p, node, lambda: Extension(sub, quot))
    raise p.error(f"unknown module constructor {node.value!r}", node.offset)


# -- groups --------------------------------------------------------------------------------

def _factor(p, node):
    if node.kind == "name" and node.value == "Z":
        return InfiniteCyclic()
    if node.kind == "power" and node.value[0] == "Z":
        return _wrap(p, node, lambda: FreeAbelian(node.value[1]))
    if node.kind == "call" and node.value in ("C", "finite", "F"):
        c = _Call(p, node, ("order",))
        return _wrap(p, node, lambda: FiniteFactor(c.int("order")))
    if node.kind == "name" and node.value in ("F", "finite"):
        return FiniteFactor()
    raise p.error("expected a polycyclic factor (Z, Z^k or C(n))", node.offset)


def _wreath_base(p, node):
    if node.kind == "name" and node.value == "Z":
        return FreeAbelian(1)
    if node.kind == "power" and node.value[0] == "Z":
        return _wrap(p, node, lambda: FreeAbelian(node.value[1]))
    if node.kind == "call" and node.value == "C":
        c = _Call(p, node, ("order",), ("order",))
        return _wrap(p, node, lambda: Cyclic(c.int("order")))
    raise p.error("wreath base must be Z^k or C(m)", node.offset)


_CATALOG_LOWER = {n.lower(): n for n in _catalog.list_names()}


def _group(p: _Parser, node: _Node):
    """Returns ``(descriptor, catalog entry or None)``."""
    if node.kind == "power" and node.value[0] == "Z":
        k = node.value[1]
        return _wrap(p, node, lambda: Polycyclic((FreeAbelian(k),), True, True)), None
    if node.kind == "name" and node.value == "Z":
        return Polycyclic((FreeAbelian(1),), True, True), None
    if node.kind not in ("call", "name"):
        raise p.error("expected a group expression", node.offset)
    name = node.value
    low = name.lower()
    args = node.args or []
    if low == "nilpotent":
        c = _Call(p, node, ("h",), ("h",))
        h = c.int("h")
        return _wrap(p, node, lambda: Polycyclic(tuple(InfiniteCyclic() for _ in range(h)), True, True)), None
    if low == "polycyclic":
        return _polycyclic(p, node), None
    if low == "abelian":
        c = _Call(p, node, ("rank",), ("rank",))
        return _wrap(p, node, lambda: Polycyclic((FreeAbelian(c.int("rank")),), True, True)), None
    if low == "wreath":
        c = _Call(p, node, ("base", "d"), ("base", "d"))
        base = _wreath_base(p, c.node_("base"))
        return _wrap(p, node, lambda: Wreath(base, c.int("d"))), None
    if low == "freemetabelian":
        c = _Call(p, node, ("d",), ("d",))
        return _wrap(p, node, lambda: FreeMetabelian(c.int("d"))), None
    if low == "metabelian":
        c = _Call(p, node, ("module", "qrank", "torsionfree", "split", "generators", "faithful", "centralizer", "prime"),
                  ("module", "qrank"))
        module = _module(p, c.node_("module"))
        prime = None
        pn = c.node_("prime")
        if pn is not None:
            if pn.kind != "tuple" or len(pn.value) != 2 or any(x.kind != "int" for x in pn.value):
                raise p.error("prime must be a pair (coheight, rank)", pn.offset)
            prime = (pn.value[0].value, pn.value[1].value)
        return _wrap(p, node, lambda: MetabelianExt(
            module, c.int("qrank"), c.bool("torsionfree", True), c.bool("split"), c.int("generators"),
            c.bool("faithful"), c.bool("centralizer"), prime)), None
    if low in ("virtual", "virtuallymetabelian"):
        c = _Call(p, node, ("inner", "index", "ideal"), ("inner", "index"))
        inner, _ = _group(p, c.node_("inner"))
        return _wrap(p, node, lambda: VirtuallyMetabelian(inner, c.int("index"), c.int("ideal"))), None
    if low == "abelianbyfinite":
        c = _Call(p, node, ("rank", "irreducibles"), ("rank", "irreducibles"))
        return _wrap(p, node, lambda: FreeAbelianByFinite(c.int("rank"), c.int("irreducibles"))), None
    if low == "permwreath":
        c = _Call(p, node, ("nontrivial", "infinite_orbits", "fp"), ("nontrivial", "infinite_orbits"))
        return WreathPermutational(c.bool("nontrivial"), c.bool("infinite_orbits"), c.bool("fp")), None
    if low in _CATALOG_LOWER:
        key = _CATALOG_LOWER[low]
        order = _catalog.POSITIONAL[key]
        c = _Call(p, node, order, order) if node.kind == "call" else _Call(p, _Node("call", name, node.offset, [], {}), order, order)
        params = {k: c.int(k) for k in order}
        entry = _wrap(p, node, lambda: _catalog.get(key, **params))
        return entry.descriptor, entry
    raise p.error(f"unknown group constructor {name!r}", node.offset)


def _polycyclic(p, node):
    flags = {}
    for k, v in (node.kwargs or {}).items():
        if k not in ("supersolvable", "nilpotent"):
            raise p.error(f"polycyclic() has no parameter {k!r}", v.offset)
        if v.kind != "name" or v.value.lower() not in ("true", "false"):
            raise p.error(f"parameter {k!r} must be true or false", v.offset)
        flags[k] = v.value.lower() == "true"
    factors = tuple(_factor(p, a) for a in node.args)
    nil = flags.get("nilpotent", False)
    sup = flags.get("supersolvable", nil)
    return _wrap(p, node, lambda: Polycyclic(factors, sup, nil))


# -- Bieri-Strebel modules -------------------------------------------------------------------

def _bs(p: _Parser, node: _Node):
    name = node.value.lower() if node.kind in ("call", "name") else None
    if name == "classical":
        if node.kind == "name":
            return ClassicalRing()
        c = _Call(p, node, ("mod",))
        return _wrap(p, node, lambda: ClassicalRing(c.int("mod")))
    if name in ("a", "ring") and node.kind == "call":
        c = _Call(p, node, ("d", "mod"), ("d",))
        return _wrap(p, node, lambda: tensor_power(c.int("d"), c.int("mod")))
    if name == "tensor" and node.kind == "call":
        if node.kwargs:
            raise p.error("tensor() takes only positional arguments", node.offset)
        kids = [_bs(p, a) for a in node.args]
        return _wrap(p, node, lambda: Tensor(*kids))
    if name == "groupring" and node.kind == "call":
        c = _Call(p, node, ("rank", "mod"), ("rank",))
        return _wrap(p, node, lambda: GroupRing(c.int("rank"), c.int("mod")))
    if name == "fan" and node.kind == "call":
        c = _Call(p, node, ("rank", "rays"), ("rank",))
        rays = []
        rn = c.node_("rays")
        if rn is not None:
            if rn.kind != "list":
                raise p.error("rays must be a list like [(1,0), (-1,0)]", rn.offset)
            for r in rn.value:
                if r.kind != "tuple" or any(x.kind != "int" for x in r.value):
                    raise p.error("each ray must be a tuple of integers", r.offset)
                rays.append(tuple(x.value for x in r.value))
        rank = c.int("rank")
        for r in rays:
            if len(r) != rank:
                raise p.error(f"ray {r} does not have length {rank}", rn.offset)
        return _wrap(p, node, lambda: ExplicitFan(rank, rays))
    raise p.error("expected a Bieri-Strebel module (classical, A(d), tensor(...), groupring(n), fan(...))", node.offset)


# -- entry points ----------------------------------------------------------------------------

@dataclass(frozen=True)
class DescriptorDocument:
    kind: str  # "group" or "module"
    descriptor: object
    source: str
    catalog_entry: Optional[object] = None


def parse_dsl(text: str) -> DescriptorDocument:
    p = _Parser(text)
    head = p.peek()
    if head.kind != "name" or head.text not in ("group", "module"):
        raise p.error("a document starts with 'group' or 'module'")
    p.next()
    node = p.expr()
    p.done()
    if head.text == "module":
        return DescriptorDocument("module", _module(p, node), text)
    desc, entry = _group(p, node)
    return DescriptorDocument("group", desc, text, entry)


def parse_group(text: str):
    p = _Parser(text)
    node = p.expr()
    p.done()
    return _group(p, node)[0]


def parse_module(text: str):
    p = _Parser(text)
    node = p.expr()
    p.done()
    return _module(p, node)


def parse_bs_module(text: str):
    p = _Parser(text)
    node = p.expr()
    p.done()
    return _bs(p, node)


# -- printing --------------------------------------------------------------------------------

def format_module(m) -> str:
    if isinstance(m, Critical):
        return f"critical({m.dim})"
    if isinstance(m, TorsionFree):
        return f"torsionfree(dim={m.dim}, rank={m.rank})"
    if isinstance(m, Finite):
        return f"finite({m.length})"
    if isinstance(m, Series):
        return "series(" + ", ".join(format_module(c) for c in m.children) + ")"
    if isinstance(m, DirectSum):
        return "directsum(" + ", ".join(format_module(c) for c in m.children) + ")"
    if isinstance(m, Extension):
        return f"ext(sub={format_module(m.sub)}, quot={format_module(m.quot)})"
    raise TypeError(f"not a module descriptor: {m!r}")


def _format_factor(f) -> str:
    if isinstance(f, InfiniteCyclic):
        return "Z"
    if isinstance(f, FreeAbelian):
        return f"Z^{f.rank}"
    if isinstance(f, FiniteFactor):
        return "F" if f.order is None else f"C({f.order})"
    raise TypeError(f"not a polycyclic factor: {f!r}")


def _b(x: bool) -> str:
    return "true" if x else "false"


def format_group(g) -> str:
    if isinstance(g, Polycyclic):
        parts = [_format_factor(f) for f in g.factors]
        parts.append(f"supersolvable={_b(g.supersolvable)}")
        parts.append(f"nilpotent={_b(g.nilpotent)}")
        return "polycyclic(" + ", ".join(parts) + ")"
    if isinstance(g, Wreath):
        base = g.base
        b = f"Z^{base.rank}" if isinstance(base, FreeAbelian) else f"C({base.order})"
        return f"wreath(base={b}, d={g.top_rank})"
    if isinstance(g, FreeMetabelian):
        return f"freemetabelian({g.d})"
    if isinstance(g, MetabelianExt):
        parts = [f"module={format_module(g.module)}", f"qrank={g.q_rank}"]
        if not g.q_torsion_free:
            parts.append("torsionfree=false")
        if g.split:
            parts.append("split=true")
        if g.generators is not None:
            parts.append(f"generators={g.generators}")
        if g.faithful:
            parts.append("faithful=true")
        if g.module_contains_centralizer:
            parts.append("centralizer=true")
        if g.prime_quotient is not None:
            parts.append(f"prime=({g.prime_quotient[0]}, {g.prime_quotient[1]})")
        return "metabelian(" + ", ".join(parts) + ")"
    if isinstance(g, VirtuallyMetabelian):
        s = f"virtual(inner={format_group(g.inner)}, index={g.index}"
        if g.invariant_ideal_dim is not None:
            s += f", ideal={g.invariant_ideal_dim}"
        return s + ")"
    if isinstance(g, FreeAbelianByFinite):
        return f"abelianbyfinite(rank={g.rank}, irreducibles={g.irreducibles})"
    if isinstance(g, WreathPermutational):
        return (f"permwreath(nontrivial={_b(g.base_nontrivial)}, infinite_orbits={_b(g.diag_orbits_infinite)}, "
                f"fp={_b(g.finitely_presented)})")
    raise TypeError(f"not a group descriptor: {g!r}")


def format_document(doc: DescriptorDocument) -> str:
    if doc.kind == "module":
        return "module " + format_module(doc.descriptor)
    return "group " + format_group(doc.descriptor)
