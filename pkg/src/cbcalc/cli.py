"""Command-line frontend.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 an honest "don't know" (Inconclusive verdict, Unknown answer).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from . import catalog, dsl, oracle, sigma
from . import ordinal as O
from .errors import CBCalcError, CatalogError, ParseError, VerificationFailure
from .grouprank import COND, UNKNOWN, cb_external, cb_rank, cb_space, format_rank
from .modlen import OrdinalInterval, krull_dim, length, reduced_length

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_UNKNOWN = 0, 1, 2, 3

__all__ = ["main", "run", "value_to_json", "value_from_json"]


# -- JSON encoding of rank values -------------------------------------------------------------

def value_to_json(v):
    if v is COND:
        return {"type": "condensation", "text": "COND"}
    if v is UNKNOWN:
        return {"type": "unknown", "text": "UNKNOWN"}
    if isinstance(v, OrdinalInterval):
        return {"type": "interval", "text": str(v), **v.to_json()}
    if isinstance(v, int):
        v = O.Ordinal.from_int(v)
    return {"type": "ordinal", "text": O.format_ordinal(v), "cnf": v.to_json()}


def value_from_json(obj):
    kind = obj["type"]
    if kind == "condensation":
        return COND
    if kind == "unknown":
        return UNKNOWN
    if kind == "interval":
        return OrdinalInterval(O.from_json(obj["lower"]), O.from_json(obj["upper"]), obj["upper_strict"])
    return O.from_json(obj["cnf"])


def _dump(obj) -> str:
    return json.dumps(obj, ensure_ascii=False, sort_keys=True, indent=2)


# -- subcommands ------------------------------------------------------------------------------

def _read_source(args) -> str:
    if args.expr is not None:
        # inline text may omit the header; it is then read as a group
        head = args.expr.lstrip().split(None, 1)
        if head and head[0] not in ("group", "module"):
            return "group " + args.expr
        return args.expr
    if args.file is None:
        raise _Usage("eval needs a FILE or -e TEXT")
    if args.file == "-":
        return sys.stdin.read()
    with open(args.file, encoding="utf-8") as fh:
        return fh.read()


class _Usage(Exception):
    pass


def _cmd_eval(args, out) -> int:
    doc = dsl.parse_dsl(_read_source(args))
    uni = args.unicode
    if doc.kind == "module":
        m = doc.descriptor
        res = {
            "kind": "module",
            "descriptor": dsl.format_module(m),
            "length": value_to_json(_collapse(length(m))),
            "reduced_length": value_to_json(_collapse(reduced_length(m))),
            "krull_dim": krull_dim(m),
        }
        if args.format == "json":
            out.write(_dump(res) + "\n")
        else:
            out.write(f"length: {_fmt(res['length'], uni)}\n")
            out.write(f"reduced length: {_fmt(res['reduced_length'], uni)}\n")
            out.write(f"krull dimension: {res['krull_dim']}\n")
        return EXIT_OK
    g = doc.descriptor
    entry = doc.catalog_entry
    code = EXIT_OK
    if args.external:
        fp = None
        if entry is not None and entry.fp.status != "Unknown":
            fp = entry.fp.status == "Yes"
        value = cb_external(g, fp)
        trace = None
        if value is UNKNOWN:
            code = EXIT_UNKNOWN
    else:
        value, trace = cb_rank(g, exact_rules=not args.fallback)
    res = {"kind": "group", "descriptor": dsl.format_group(g), "value": value_to_json(value)}
    if entry is not None:
        res["catalog"] = entry.label
    if trace is not None:
        res["trace"] = trace.to_json()
        if not isinstance(value, OrdinalInterval):
            res["cb_space"] = value_to_json(cb_space(g)) if not args.fallback else None
    if args.format == "json":
        out.write(_dump(res) + "\n")
    else:
        out.write(format_rank(value, uni) + "\n")
        if args.trace and trace is not None:
            for step in trace:
                out.write(f"  {step}\n")
    return code


def _collapse(iv: OrdinalInterval):
    return iv.value if iv.exact else iv


def _fmt(obj, uni):
    text = obj["text"]
    return text.replace("w", "ω") if uni else text


def _cmd_ordinal(args, out) -> int:
    tokens = list(args.expr)
    if tokens and tokens[0] in ("reduce", "deg", "rem") and len(tokens) > 1 and "(" not in tokens[1]:
        text = f"{tokens[0]}({' '.join(tokens[1:])})"
    else:
        text = " ".join(tokens)
    if not text.strip():
        raise _Usage("ordinal needs an expression")
    if text.startswith("reduce(") and text.endswith(")") and _balanced(text[7:-1]):
        q, r = O.reduce(O.evaluate(text[7:-1]))
        if args.format == "json":
            out.write(_dump({"quotient": value_to_json(q), "remainder": r}) + "\n")
        else:
            out.write(f"{O.format_ordinal(q, unicode=args.unicode)}, {r}\n")
        return EXIT_OK
    v = O.evaluate(text)
    if args.format == "json":
        out.write(_dump(value_to_json(v)) + "\n")
    else:
        out.write(O.format_ordinal(v, unicode=args.unicode) + "\n")
    return EXIT_OK


def _balanced(s):
    depth = 0
    for ch in s:
        depth += ch == "("
        depth -= ch == ")"
        if depth < 0:
            return False
    return depth == 0


def _cmd_gamma(args, out) -> int:
    m = dsl.parse_bs_module(args.module)
    window = args.window if args.window is not None else sigma.default_window()
    if args.sweep:
        if m.q_rank != 2:
            raise _Usage("--sweep needs a module with Q of rank 2")
        verdicts = [sigma.gamma_verdict(m, r, window) for r in sigma.ray_sweep(args.sweep)]
        counts = {}
        for v in verdicts:
            counts[v.verdict] = counts.get(v.verdict, 0) + 1
        if args.format == "json":
            out.write(_dump({"module": sigma.format_module(m), "window": window, "counts": counts,
                             "verdicts": [v.to_json() for v in verdicts]}) + "\n")
        else:
            for k in sorted(counts):
                out.write(f"{k}: {counts[k]}\n")
            for v in verdicts:
                if v.verdict != "NotInGamma":
                    out.write(f"  {v.verdict} {list(v.ray)}\n")
        return EXIT_UNKNOWN if "Inconclusive" in counts else EXIT_OK
    if args.ray is None:
        raise _Usage("gamma needs --ray or --sweep")
    try:
        ray = sigma.parse_ray(args.ray)
    except ValueError as exc:
        raise _Usage(str(exc)) from None
    if len(ray) != m.q_rank:
        raise _Usage(f"ray has {len(ray)} coordinates but the module needs {m.q_rank}")
    v = sigma.gamma_verdict(m, ray, window)
    if args.format == "json":
        out.write(_dump({"module": sigma.format_module(m), **v.to_json()}) + "\n")
    else:
        out.write(f"{v.verdict} {list(v.ray)}\n")
        if isinstance(v, sigma.InGamma):
            out.write(f"  certificate: {v.certificate.describe()}\n")
        elif isinstance(v, sigma.NotInGamma):
            w = v.witness
            if w.declared:
                out.write("  witness: declared fan\n")
            else:
                terms = " + ".join(f"({c})*q^{list(p)}" for p, c in w.combination)
                out.write(f"  witness: q = {list(w.q)} at window {w.window}\n")
                out.write(f"  q.1 = {terms}" + (f" (mod {w.modulus})" if w.modulus else "") + "\n")
        else:
            out.write(f"  {v.reason} (window {v.window})\n")
    return EXIT_UNKNOWN if isinstance(v, sigma.Inconclusive) else EXIT_OK


def _cmd_fp(args, out) -> int:
    m = dsl.parse_bs_module(args.module)
    pm = sigma.gamma_pm(m)
    fp = sigma.finitely_presented(pm)
    if args.format == "json":
        out.write(_dump({"module": sigma.format_module(m), "gamma_pm": pm.to_json(), **fp.to_json()}) + "\n")
    else:
        out.write(f"{fp.status}\n")
        for step in fp.chain:
            out.write(f"  {step}\n")
    return EXIT_UNKNOWN if fp.status == "Unknown" else EXIT_OK


def _parse_entry(text: str, extra):
    """``H(2)``, ``H d=2`` or ``Gn(d=2, n=5)`` to a catalog entry."""
    params, positional = {}, []
    for item in extra or []:
        if "=" not in item:
            try:
                positional.append(int(item))
            except ValueError:
                raise _Usage(f"catalog parameters look like 2 or d=2, got {item!r}") from None
            continue
        k, v = item.split("=", 1)
        try:
            params[k.strip()] = int(v)
        except ValueError:
            raise _Usage(f"parameter {k.strip()!r} must be an integer") from None
    if "(" in text:
        node = dsl._Parser(text)
        expr = node.expr()
        node.done()
        key = catalog.canonical_name(expr.value)
        args = [a.value for a in expr.args or []] + positional
        kw = {k: v.value for k, v in (expr.kwargs or {}).items()}
        kw.update(params)
        return catalog.get(key, *args, **kw)
    return catalog.get(text, *positional, **params)


def _cmd_catalog(args, out) -> int:
    if args.action == "list":
        if args.format == "json":
            out.write(_dump({"entries": catalog.list_names(), "parameters": {k: list(v) for k, v in catalog.POSITIONAL.items()}}) + "\n")
        else:
            for name in catalog.list_names():
                ps = catalog.POSITIONAL[name]
                out.write(f"{name}({', '.join(ps)})\n" if ps else f"{name}\n")
        return EXIT_OK
    if not args.name:
        raise _Usage("catalog check needs an entry name")
    entry = _parse_entry(args.name, args.params)
    try:
        report = catalog.verify(entry, max_d=args.max_d)
        code = EXIT_OK
    except VerificationFailure as exc:
        report = exc.report
        code = EXIT_FAIL
    if args.format == "json":
        out.write(_dump({**entry.to_json(), "report": report.to_json()}) + "\n")
    else:
        out.write(str(report) + "\n")
    return code


def _cmd_oracle(args, out) -> int:
    try:
        reports = oracle.run_suite(args.suite, seed=args.seed, samples=args.samples)
    except KeyError as exc:
        raise _Usage(exc.args[0]) from None
    if args.format == "json":
        out.write(_dump({"reports": [r.to_json() for r in reports]}) + "\n")
    else:
        for r in reports:
            out.write(str(r) + "\n")
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


# -- parser -----------------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cbcalc", description="Ordinal ranks, module lengths and Bieri-Strebel checks for metabelian group descriptors.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--format", choices=("text", "json"), default="text")
        sp.add_argument("--unicode", action="store_true", help="print ω instead of w")

    e = sub.add_parser("eval", help="rank of a group or length of a module from a DSL document")
    e.add_argument("file", nargs="?", help="DSL file, or - for standard input")
    e.add_argument("-e", "--expr", help="DSL text given inline")
    e.add_argument("--trace", action="store_true", help="print the derivation")
    e.add_argument("--fallback", action="store_true", help="use only the interval rules")
    e.add_argument("--external", action="store_true", help="rank in the space of marked groups")
    common(e)
    e.set_defaults(func=_cmd_eval)

    o = sub.add_parser("ordinal", help="evaluate an ordinal expression")
    o.add_argument("expr", nargs="+", help='e.g. "w+1 ⊕ w*2+3", reduce "w^2+3", deg "w^3"')
    common(o)
    o.set_defaults(func=_cmd_ordinal)

    g = sub.add_parser("gamma", help="Bieri-Strebel verdict for a character")
    g.add_argument("--module", required=True, help="classical, classical(mod=k), A(d), tensor(...), groupring(n), fan(...)")
    g.add_argument("--ray", help="comma-separated rationals, e.g. 1,1 or 1/2,3")
    g.add_argument("--window", type=int, help="exponent window for the witness search (default CBCALC_WINDOW or 12)")
    g.add_argument("--sweep", type=int, metavar="N", help="classify N equally spaced rays instead")
    common(g)
    g.set_defaults(func=_cmd_gamma)

    f = sub.add_parser("fp-check", help="finite presentability from Γ±")
    f.add_argument("--module", required=True)
    common(f)
    f.set_defaults(func=_cmd_fp)

    c = sub.add_parser("catalog", help="named groups")
    c.add_argument("action", choices=("list", "check"))
    c.add_argument("name", nargs="?", help="entry, e.g. H(2) or Gn(d=2, n=5)")
    c.add_argument("params", nargs="*", help="extra parameters as key=value")
    c.add_argument("--max-d", type=int, default=catalog.MAX_VERIFY_D)
    common(c)
    c.set_defaults(func=_cmd_catalog)

    r = sub.add_parser("oracle", help="brute-force verification suites")
    r.add_argument("suite", help=", ".join(sorted(oracle.SUITES)) + ", all")
    r.add_argument("--seed", type=int, default=0)
    r.add_argument("--samples", type=int)
    common(r)
    r.set_defaults(func=_cmd_oracle)
    return p


def _glue_negative_rays(argv):
    # argparse takes "-1,2" for an option; rewrite "--ray -1,2" as "--ray=-1,2"
    out, i = [], 0
    while i < len(argv):
        if argv[i] == "--ray" and i + 1 < len(argv) and argv[i + 1].startswith("-") and argv[i + 1][1:2].isdigit():
            out.append("--ray=" + argv[i + 1])
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    argv = _glue_negative_rays(sys.argv[1:] if argv is None else list(argv))
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    if getattr(args, "window", None) is not None and args.window < 1:
        err.write("cbcalc: --window must be at least 1\n")
        return EXIT_USAGE
    try:
        return args.func(args, out)
    except _Usage as exc:
        err.write(f"cbcalc: {exc}\n")
        return EXIT_USAGE
    except (ParseError, CatalogError) as exc:
        err.write(f"cbcalc: {exc}\n")
        return EXIT_USAGE
    except OSError as exc:
        err.write(f"cbcalc: {exc}\n")
        return EXIT_USAGE
    except CBCalcError as exc:
        err.write(f"cbcalc: {type(exc).__name__}: {exc}\n")
        return EXIT_UNKNOWN
    except ValueError as exc:
        err.write(f"cbcalc: {exc}\n")
        return EXIT_USAGE


def main(argv: Optional[list] = None) -> None:
    sys.exit(run(argv))
