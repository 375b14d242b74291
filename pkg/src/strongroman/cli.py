"""Command-line front end.

Every command writes exactly one JSON document to stdout (the ``enumerate``
command writes one JSON object per line); human-readable notes go to stderr.
Exit codes: 0 for success or a positive decision, 1 for a negative decision,
2 for any error.  Outputs are byte-identical for identical inputs and flags.

The ``solve``, ``recognize``, ``generate`` and ``gadget`` commands emit
certificates that ``verify`` re-checks without repeating the original search
where a trace or step list makes that possible.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from typing import Optional

from . import __version__
from .gadget import CnfFormula, build_gadget, verify_gadget
from .generator import OpStep, apply_op, enumerate_T, random_member, replay
from .graphs import Tree, format_edge_list, parse_edge_list, to_dot
from .recognizer import ReductionTrace, Triple, decide_in_S, verify_trace
from .solver import solve_report
from .treedp import gamma_R_tree

CERTIFICATE_VERSION = 1


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _digest(payload: dict) -> str:
    return "sha256:" + hashlib.sha256(_dump(payload).encode()).hexdigest()


def _certificate(kind: str, input_payload: dict, result: dict) -> dict:
    return {
        "kind": kind,
        "version": __version__,
        "certificate_version": CERTIFICATE_VERSION,
        "input": input_payload,
        "digest": _digest(input_payload),
        "result": result,
    }


def _emit(obj) -> None:
    sys.stdout.write(_dump(obj) + "\n")


def _parse_x_spec(spec: str, n: int) -> frozenset[int]:
    if spec == "all":
        return frozenset(range(n))
    if spec == "none":
        return frozenset()
    out = set()
    for tok in spec.split(","):
        tok = tok.strip()
        if not tok:
            continue
        v = int(tok)
        if not (0 <= v < n):
            raise ValueError(f"x lists vertex {v} outside 0..{n - 1}")
        out.add(v)
    return frozenset(out)


def _read_tree(path: str) -> Tree:
    with open(path, encoding="utf-8") as fh:
        return Tree.from_graph(parse_edge_list(fh.read()))


def _triple_json(tr: Triple) -> dict:
    return {
        "n": tr.n,
        "edges": [list(e) for e in tr.tree.edges],
        "x": sorted(tr.x),
        "y": sorted(tr.y),
    }


def _triple_from_json(d: dict) -> Triple:
    tree = Tree(int(d["n"]), [tuple(e) for e in d["edges"]])
    return Triple(tree, frozenset(d["x"]), frozenset(d["y"]))


def _write_dot(path: Optional[str], graph) -> None:
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(to_dot(graph))


def _cmd_solve(args) -> int:
    with open(args.tree, encoding="utf-8") as fh:
        text = fh.read()
    t = Tree.from_graph(parse_edge_list(text))
    x = _parse_x_spec(args.x, t.n)
    if args.method == "dp-rdf":
        result = {"method": "dp-rdf", "gamma_R": gamma_R_tree(t, x)}
    else:
        report = solve_report(t, x)
        result = {"method": "oracle", **report.to_json_dict()}
    _write_dot(args.dot, t)
    _emit(_certificate("solve", {"graph": text, "x": args.x, "method": args.method}, result))
    return 0


def _cmd_recognize(args) -> int:
    with open(args.tree, encoding="utf-8") as fh:
        text = fh.read()
    t = Tree.from_graph(parse_edge_list(text))
    triple = Triple(t, frozenset(range(t.n)), frozenset(range(t.n)))
    ok, trace = decide_in_S(triple)
    result = {"strongly_equal": ok, "trace": trace.to_json_dict()}
    _write_dot(args.dot, t)
    _emit(_certificate("recognize", {"graph": text}, result))
    return 0 if ok else 1


def _cmd_generate(args) -> int:
    triple, steps = random_member(args.n, args.seed)
    if args.n == 1:
        base = triple
    else:
        base = replay([])
    canon, _ = triple.canonicalized()
    result = {
        "base": _triple_json(base),
        "steps": [s.to_json_dict() for s in steps],
        "tree": format_edge_list(triple.tree),
        "x": sorted(triple.x),
        "y": sorted(triple.y),
        "canonical": canon.canonical_key,
    }
    _emit(_certificate("generate", {"n": args.n, "seed": args.seed}, result))
    return 0


def _cmd_enumerate(args) -> int:
    members = enumerate_T(args.max)
    rows = sorted(
        ({"order": m.n, "canonical": key, **_triple_json(m)} for key, m in members.items()),
        key=lambda r: (r["order"], r["canonical"]),
    )
    for row in rows:
        _emit(row)
    return 0


def _cmd_gadget(args) -> int:
    with open(args.cnf, encoding="utf-8") as fh:
        text = fh.read()
    formula = CnfFormula.from_dimacs(text)
    gg = build_gadget(formula)
    result = {
        "graph": {
            "n": gg.graph.n,
            "edges": [list(e) for e in gg.graph.edges],
            "labels": {str(v): s for v, s in sorted(gg.graph.labels.items())},
        },
        "report": None,
    }
    if args.verify:
        result["report"] = verify_gadget(formula).to_json_dict()
    _write_dot(args.dot, gg.graph)
    _emit(_certificate("gadget", {"cnf": text, "verify": bool(args.verify)}, result))
    return 0


def _recheck_solve(cert: dict) -> bool:
    inp = cert["input"]
    t = Tree.from_graph(parse_edge_list(inp["graph"]))
    x = _parse_x_spec(inp["x"], t.n)
    if inp["method"] == "dp-rdf":
        fresh = {"method": "dp-rdf", "gamma_R": gamma_R_tree(t, x)}
    else:
        fresh = {"method": "oracle", **solve_report(t, x).to_json_dict()}
    return fresh == cert["result"]


def _recheck_recognize(cert: dict) -> bool:
    t = Tree.from_graph(parse_edge_list(cert["input"]["graph"]))
    triple = Triple(t, frozenset(range(t.n)), frozenset(range(t.n)))
    trace = ReductionTrace.from_json_dict(cert["result"]["trace"])
    if cert["result"]["strongly_equal"]:
        return verify_trace(triple, trace)
    ok, _ = decide_in_S(triple)
    return not ok


def _recheck_generate(cert: dict) -> bool:
    result = cert["result"]
    steps = [OpStep.from_json_dict(s) for s in result["steps"]]
    base = _triple_from_json(result["base"])
    triple = base
    for step in steps:
        triple = apply_op(triple, step)
    canon, _ = triple.canonicalized()
    return (
        canon.canonical_key == result["canonical"]
        and format_edge_list(triple.tree) == result["tree"]
        and sorted(triple.x) == result["x"]
        and sorted(triple.y) == result["y"]
    )


def _recheck_gadget(cert: dict) -> bool:
    formula = CnfFormula.from_dimacs(cert["input"]["cnf"])
    gg = build_gadget(formula)
    fresh = {
        "graph": {
            "n": gg.graph.n,
            "edges": [list(e) for e in gg.graph.edges],
            "labels": {str(v): s for v, s in sorted(gg.graph.labels.items())},
        },
        "report": None,
    }
    if cert["input"]["verify"]:
        fresh["report"] = verify_gadget(formula).to_json_dict()
    return fresh == cert["result"]


_RECHECKERS = {
    "solve": _recheck_solve,
    "recognize": _recheck_recognize,
    "generate": _recheck_generate,
    "gadget": _recheck_gadget,
}


def _cmd_verify(args) -> int:
    with open(args.certificate, encoding="utf-8") as fh:
        cert = json.load(fh)
    kind = cert.get("kind")
    rechecker = _RECHECKERS.get(kind)
    if rechecker is None:
        raise ValueError(f"unknown certificate kind {kind!r}")
    if cert.get("digest") != _digest(cert.get("input", {})):
        _emit({"kind": kind, "verified": False, "detail": "input digest mismatch"})
        return 1
    ok = rechecker(cert)
    _emit({"kind": kind, "verified": ok, "detail": "reproduced" if ok else "result mismatch"})
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="strongroman",
        description="Decide, generate and cross-verify trees whose Roman domination "
        "number strongly equals the weak Roman domination number.",
    )
    parser.add_argument(
        "--threads",
        type=int,
        default=1,
        help="worker count; execution is sequential, values above 1 are accepted "
        "for compatibility and noted on stderr",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="exhaustive report for a tree")
    p.add_argument("tree", help="edge-list file")
    p.add_argument("--x", default="all", help="'all', 'none' or a comma list of vertices")
    p.add_argument("--method", choices=("oracle", "dp-rdf"), default="oracle")
    p.add_argument("--dot", default=None, help="also write the tree as DOT to this path")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("recognize", help="decide strong equality for a tree")
    p.add_argument("tree", help="edge-list file")
    p.add_argument("--dot", default=None, help="also write the tree as DOT to this path")
    p.set_defaults(func=_cmd_recognize)

    p = sub.add_parser("generate", help="grow a pseudo-random member triple")
    p.add_argument("--n", type=int, required=True, help="target order")
    p.add_argument("--seed", type=int, required=True)
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("enumerate", help="all member triples up to an order")
    p.add_argument("--max", type=int, required=True)
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("gadget", help="build the CNF reduction graph")
    p.add_argument("cnf", help="DIMACS CNF file")
    p.add_argument("--verify", action="store_true", help="also check the quantitative claims")
    p.add_argument("--dot", default=None, help="also write the graph as DOT to this path")
    p.set_defaults(func=_cmd_gadget)

    p = sub.add_parser("verify", help="re-check an emitted certificate")
    p.add_argument("certificate", help="certificate JSON file")
    p.set_defaults(func=_cmd_verify)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on bad flags and 0 on --help; keep the contract
        return 2 if exc.code not in (0, None) else 0
    if args.threads < 1:
        _emit({"error": {"type": "ValueError", "message": "--threads must be at least 1"}})
        return 2
    if args.threads > 1:
        print("note: execution is sequential; --threads > 1 has no effect", file=sys.stderr)
    try:
        return args.func(args)
    except Exception as exc:  # noqa: BLE001 - contract: never crash, report as JSON
        _emit({"error": {"type": type(exc).__name__, "message": str(exc)}})
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
