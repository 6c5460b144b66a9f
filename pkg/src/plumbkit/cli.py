"""plumbkit command line."""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Any, Optional, Sequence

from . import __version__
from .analysis import mine_forbidden, property_xk
from .appendix import CASES, RUN_ORDER
from .conditions import check_17, check_working_conditions
from .contfrac import evaluate, expand, parse_fraction, parse_lens_list
from .duality import dualize
from .embeddings import all_config, classify, default_threads, enumerate_embeddings
from .fillings import count_fillings, filling_pi1, filling_tuples
from .graphs import DUAL, PLUMBING, LinearGraph, adjusted_weights, format_graph, parse_graph
from .lattice import complement, gram_of_graph
from .verify import SUITES


class UsageError(Exception):
    pass


def _graph(text: str, convention: str) -> LinearGraph:
    try:
        return parse_graph(text, convention)
    except ValueError as exc:
        raise UsageError(f"bad graph {text!r}: {exc}") from None


def _chain(text: str) -> tuple[int, ...]:
    try:
        return tuple(abs(int(t)) for t in text.split(",") if t.strip())
    except ValueError:
        raise UsageError(f"bad chain {text!r}") from None


def _chains(text: Optional[str]) -> list[tuple[int, ...]]:
    if not text:
        return []
    return [_chain(t) for t in text.split("|") if t.strip()]


def _rows(m) -> list[list[int]]:
    return [list(r) for r in m.rows]


def _vertex(v) -> list[int]:
    return [v[0], v[1]]


def cmd_expand(a) -> tuple[Any, str, bool]:
    L = parse_fraction(a.fraction)
    chain = expand(L.p, L.q)
    return {"fraction": f"{L.p}/{L.q}", "chain": list(chain)}, ",".join(map(str, chain)), True


def cmd_eval(a) -> tuple[Any, str, bool]:
    p, q = evaluate(_chain(a.chain))
    return {"chain": list(_chain(a.chain)), "fraction": f"{p}/{q}"}, f"{p}/{q}", True


def cmd_dual(a) -> tuple[Any, str, bool]:
    g = _graph(a.graph, a.convention)
    d = dualize(g)
    if a.adjusted:
        adj = [list(c) for c in adjusted_weights(d).adjusted]
        text = ";".join(",".join(map(str, c)) for c in adj)
        return {"graph": format_graph(g), "dual": format_graph(d), "adjusted": adj}, text, True
    return {"graph": format_graph(g), "dual": format_graph(d)}, format_graph(d), True


def cmd_gram(a) -> tuple[Any, str, bool]:
    m = gram_of_graph(_graph(a.graph, a.convention))
    return {"gram": _rows(m)}, str(m), True


def cmd_check(a) -> tuple[Any, str, bool]:
    side = a.side
    g = _graph(a.graph, side)
    if side == PLUMBING:
        passed, hits = check_17(g)
        items = [{"id": cid, "vertices": [_vertex(v) for v in vs]} for cid, vs in hits]
    else:
        rep = check_working_conditions(g)
        passed = rep.passed
        items = [{"id": cid, "vertices": [_vertex(v) for v in vs]} for cid, vs in rep.violations]
    lines = ["passed" if passed else "failed"]
    lines += [f"{it['id']}: " + " ".join(f"({x},{y})" for x, y in it["vertices"]) for it in items]
    return {"graph": format_graph(g), "side": side, "passed": passed, "hits": items}, "\n".join(lines), passed


def cmd_embed(a) -> tuple[Any, str, bool]:
    g = _graph(a.graph, DUAL)
    out, lines = [], []
    for i, e in enumerate(enumerate_embeddings(g, a.max_dim), 1):
        cl = classify(e)
        item = {"class": i, "dim": e.dim, "kind": cl.kind, "at": _vertex(cl.at) if cl.at else None}
        line = f"{i}: dim {e.dim} {cl.kind}" + (f" at ({cl.at[0]},{cl.at[1]})" if cl.at else "")
        if a.show:
            item["vectors"] = [list(v) for v in e.vectors]
            line += "\n" + "\n".join("   " + " ".join(f"{x:3d}" for x in v) for v in e.vectors)
        out.append(item)
        lines.append(line)
    return {"graph": format_graph(g), "embeddings": out}, "\n".join(lines) or "no embeddings", True


def cmd_complement(a) -> tuple[Any, str, bool]:
    g = _graph(a.graph, DUAL)
    es = enumerate_embeddings(g, a.max_dim)
    if not 1 <= a.cls <= len(es):
        raise UsageError(f"--class must lie in 1..{len(es)}")
    m = complement(es[a.cls - 1])
    return {"graph": format_graph(g), "class": a.cls, "complement": _rows(m)}, str(m), True


def cmd_allconfig(a) -> tuple[Any, str, bool]:
    if a.case is not None:
        if a.case not in CASES:
            raise UsageError(f"unknown case {a.case}; choose from 1..{len(CASES)}")
        c = CASES[a.case]
        bw, bp, lefts, rights, expected = c.bad_weights, c.bad_positions, c.lefts, c.rights, c.expected
    else:
        if not a.bad or not a.bad_pos:
            raise UsageError("give --case, or --bad with --bad-pos")
        bw, lefts, rights, expected = _chain(a.bad), _chains(a.left), _chains(a.right), None
        try:
            bp = tuple(int(t) for t in a.bad_pos.split(","))
        except ValueError:
            raise UsageError(f"bad --bad-pos {a.bad_pos!r}") from None
    rep = all_config(bw, bp, lefts, rights, threads=a.threads)
    counts = dict(zip(("total", "standard", "semi_standard", "neither"), rep.counts()))
    data = {"bad": list(bw), "bad_positions": list(bp), "configs": len(rep.configs), **counts}
    ok = True
    if expected is not None:
        data["expected"] = list(expected)
        ok = rep.counts() == tuple(expected)
        data["match"] = ok
    text = (
        f"Total number of embeddings: {counts['total']}\n"
        f"Standard: {counts['standard']}\nSemi-standard: {counts['semi_standard']}\nNeither: {counts['neither']}"
    )
    return data, text, ok


def cmd_xk(a) -> tuple[Any, str, bool]:
    lens = parse_lens_list(a.lens)
    v = property_xk(lens, a.k)
    data = {
        "lens": [f"{L.p}/{L.q}" for L in lens],
        "plumbing": format_graph(v.plumbing),
        "k": a.k,
        "n_k": v.n_k,
        "satisfies": v.satisfies,
        "witness": [list(x) for x in v.witness.vectors] if v.witness else None,
    }
    text = f"X_{a.k} {'holds' if v.satisfies else 'fails'} (n_k = {v.n_k})"
    if v.witness:
        text += f"\nwitness in Z^{v.witness.dim}:\n" + "\n".join(" ".join(f"{x:3d}" for x in r) for r in v.witness.vectors)
    return data, text, v.satisfies


def cmd_mine(a) -> tuple[Any, str, bool]:
    found = mine_forbidden(a.k, a.max_weight, a.max_vertices, a.threads)
    data = {"k": a.k, "max_weight": a.max_weight, "max_vertices": a.max_vertices, "minimal": [format_graph(g) for g in found]}
    return data, "\n".join(format_graph(g) for g in found), True


def cmd_fillings(a) -> tuple[Any, str, bool]:
    L = parse_fraction(a.fraction)
    c = count_fillings(L)
    tuples = filling_tuples(L)
    try:
        pi1: Optional[str] = filling_pi1(L)
    except ValueError:
        pi1 = None
    data = {
        "lens": f"{L.p}/{L.q}",
        "count": c.count,
        "n_L": c.n_l,
        "reduced": c.reduced,
        "q_squared_is_1": c.q_squared_one,
        "q_is_1": c.q_one,
        "pi1": pi1,
        "tuples": {str(j): list(t) for j, t in tuples.items()},
    }
    lines = [f"count {c.count}", f"n(L) {c.n_l}", f"reduced {str(c.reduced).lower()}"]
    if pi1:
        lines.append(f"pi1 {pi1}")
    lines += [f"bad vertex {j}: {','.join(map(str, t))}" for j, t in tuples.items()]
    return data, "\n".join(lines), True


def cmd_verify(a) -> tuple[Any, str, bool]:
    names = [n for n in SUITES if getattr(a, n)] or ["appendix"]
    checks = [c for n in names for c in SUITES[n](threads=a.threads)]
    data = {"checks": [{"name": c.name, "passed": c.passed, **c.detail} for c in checks]}
    data["passed"] = sum(c.passed for c in checks)
    data["total"] = len(checks)
    lines = [f"{'PASS' if c.passed else 'FAIL'}  {c.name}" for c in checks]
    lines.append(f"{data['passed']}/{data['total']} checks passed")
    return data, "\n".join(lines), data["passed"] == data["total"]


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--threads", type=int, default=None, help="worker processes (default $PLUMBKIT_THREADS or 1)")
    common.add_argument("--strict", action="store_true", help="exit 1 when a check fails")
    common.add_argument("--timing", action="store_true", help="include wall time in the report")

    p = argparse.ArgumentParser(prog="plumbkit", description="Lens-space plumbings, lattice embeddings and fillings.")
    p.add_argument("--version", action="version", version=f"plumbkit {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name: str, fn, help: str) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, parents=[common], help=help)
        sp.set_defaults(fn=fn)
        return sp

    def conv(sp: argparse.ArgumentParser, default: str = PLUMBING) -> None:
        sp.add_argument("--convention", choices=[PLUMBING, DUAL], default=default)

    add("expand", cmd_expand, "continued fraction of p/q").add_argument("fraction")
    add("eval", cmd_eval, "evaluate a chain").add_argument("chain")
    sp = add("dual", cmd_dual, "dual graph")
    sp.add_argument("graph")
    sp.add_argument("--adjusted", action="store_true")
    conv(sp)
    sp = add("gram", cmd_gram, "intersection form of a graph")
    sp.add_argument("graph")
    conv(sp)
    sp = add("check", cmd_check, "forbidden configurations or working conditions")
    sp.add_argument("graph")
    sp.add_argument("--side", choices=[PLUMBING, DUAL], default=PLUMBING)
    sp = add("embed", cmd_embed, "embeddings of a dual graph")
    sp.add_argument("graph")
    sp.add_argument("--max-dim", type=int, default=None)
    sp.add_argument("--show", action="store_true")
    sp = add("complement", cmd_complement, "orthogonal complement of an embedding class")
    sp.add_argument("graph")
    sp.add_argument("--class", dest="cls", type=int, required=True)
    sp.add_argument("--max-dim", type=int, default=None)
    sp = add("allconfig", cmd_allconfig, "batch of bad-part configurations")
    sp.add_argument("--case", type=int)
    sp.add_argument("--bad")
    sp.add_argument("--bad-pos")
    sp.add_argument("--left", help="extensions separated by |")
    sp.add_argument("--right", help="extensions separated by |")
    sp = add("xk", cmd_xk, "property X_k for a connected sum")
    sp.add_argument("lens")
    sp.add_argument("--k", type=int, required=True)
    sp = add("mine", cmd_mine, "minimal graphs failing X_k")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--max-weight", type=int, default=5)
    sp.add_argument("--max-vertices", type=int, default=4)
    add("fillings", cmd_fillings, "minimal filling counts").add_argument("fraction")
    sp = add("verify", cmd_verify, "built-in reproduction checks")
    for name in SUITES:
        sp.add_argument(f"--{name}", action="store_true")
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.threads is None:
        args.threads = default_threads()
    elif args.threads < 1:
        parser.error("--threads must be at least 1")
    start = time.perf_counter()
    try:
        data, text, ok = args.fn(args)
    except (UsageError, ValueError) as exc:
        print(f"plumbkit {args.command}: error: {exc}", file=sys.stderr)
        return 2
    if args.json:
        report = {"command": args.command, "version": __version__, "result": data}
        if args.timing:
            report["wall_time"] = round(time.perf_counter() - start, 3)
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        print(text)
        if args.timing:
            print(f"({time.perf_counter() - start:.2f}s)")
    return 1 if args.strict and not ok else 0


if __name__ == "__main__":
    sys.exit(main())
