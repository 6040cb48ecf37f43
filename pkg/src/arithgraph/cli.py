"""Command-line front end.

Exit codes: 0 success, 1 invalid input, 2 verification failure (an invalid
structure under ``verify`` or a failed ``reproduce`` check), so scripts can
branch on verification outcomes.  JSON output is deterministic: identical
commands produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys

from .critical import critical_group
from .errors import ArithError, FileError, InvalidMatrix, ParseError
from .exactla import IntMatrix
from .graphs import FAMILIES, GeneralizedGraph, Graph, laplacian_like, make_graph
from .mclass import classify
from .reproduce import TABLE_IDS, render_report, reproduce
from .structures import (
    ArithStructure,
    StructureSet,
    classify_wheel_structure,
    check_unit_d_neighbors,
    enumerate_bounded,
    enumerate_certified,
    is_arithmetical,
)
from .transforms import (
    blowup_mq,
    clique_star,
    cycle_to_wheel_affine,
    cycle_to_wheel_divisor,
    cycle_to_wheel_lcm,
    generalized_blowup_a,
    generalized_blowup_m,
    wheel_extend,
    zn_orbit,
)

DEFAULT_R_CAP = 64


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad flags; route through ParseError so the CLI
    # keeps exit 2 reserved for verification failures
    def error(self, message):
        raise ParseError(message)


def _ints_csv(text: str, flag: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise ParseError(f"{flag} expects comma-separated integers, got {text!r}") from None


def load_matrix_json(path: str) -> IntMatrix:
    try:
        with open(path, encoding="utf-8") as fh:
            payload = json.load(fh)
    except OSError as exc:
        raise FileError(f"cannot read matrix file {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise InvalidMatrix(f"matrix file {path} is not valid JSON: {exc}") from None
    if not isinstance(payload, dict) or "rows" not in payload:
        raise InvalidMatrix(f'matrix file {path} must look like {{"n": k, "rows": [[...]]}}')
    rows = payload["rows"]
    M = IntMatrix(rows)
    if "n" in payload and payload["n"] != M.n:
        raise InvalidMatrix(f"matrix file {path}: declared n={payload['n']} != {M.n}")
    return M


def parse_graph_spec(spec: str, allow_asymmetric: bool = False) -> Graph | GeneralizedGraph:
    """Parse "family:N" or "file:PATH" into a graph.

    Matrix files must be non-negative with zero diagonal, and symmetric
    unless asymmetric support digraphs were explicitly allowed.
    """
    kind, sep, arg = spec.partition(":")
    if not sep:
        raise ParseError(f"graph spec {spec!r} must look like family:N or file:PATH")
    if kind == "file":
        M = load_matrix_json(arg)
        if M.is_symmetric():
            return Graph(M, "custom")
        if allow_asymmetric:
            return GeneralizedGraph(M)
        raise InvalidMatrix(
            "matrix is not symmetric; pass --directed-support to accept it "
            "as a generalized graph"
        )
    if kind not in FAMILIES:
        raise ParseError(f"unknown graph family {kind!r}; choose from {', '.join(FAMILIES)}")
    try:
        n = int(arg)
    except ValueError:
        raise ParseError(f"graph spec {spec!r}: {arg!r} is not an integer") from None
    try:
        return make_graph(kind, n)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def _adjacency(g: Graph | GeneralizedGraph) -> IntMatrix:
    return g.adjacency if isinstance(g, Graph) else g.matrix


def _emit(text: str, output: str | None) -> None:
    if output:
        with open(output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json(payload) -> str:
    return json.dumps(payload, indent=2) + "\n"


def _structure_set_payload(spec: str, result: StructureSet) -> dict:
    return {
        "graph": spec,
        "complete": result.complete,
        "r_cap": result.r_cap,
        "count": len(result),
        "structures": [{"d": list(s.d), "r": list(s.r)} for s in result.structures],
    }


def _structure_set_csv(result: StructureSet) -> str:
    n = result.structures[0].n if result.structures else _adjacency(result.graph).n
    header = [f"d{i}" for i in range(n)] + [f"r{i}" for i in range(n)]
    lines = [",".join(header)]
    for s in result.structures:
        lines.append(",".join(str(x) for x in s.d + s.r))
    return "\n".join(lines) + "\n"


def _cmd_enumerate(args) -> int:
    graph = parse_graph_spec(args.graph, args.directed_support)
    if args.mode == "certified":
        if not isinstance(graph, Graph) or graph.family == "custom":
            raise ParseError("certified enumeration needs a family graph spec")
        result = enumerate_certified(graph.family, graph.size)
    else:
        if not args.bounded_ok:
            raise ParseError(
                "bounded enumeration is not certified complete; "
                "acknowledge with --bounded-ok"
            )
        result = enumerate_bounded(_adjacency(graph), args.r_cap, graph=graph)
    if args.format == "csv":
        _emit(_structure_set_csv(result), args.output)
    else:
        _emit(_json(_structure_set_payload(args.graph, result)), args.output)
    return 0


def _cmd_verify(args) -> int:
    graph = parse_graph_spec(args.graph, args.directed_support)
    d = _ints_csv(args.d, "--d")
    r = _ints_csv(args.r, "--r")
    valid = is_arithmetical(_adjacency(graph), d, r)
    _emit(
        _json({"graph": args.graph, "d": list(d), "r": list(r), "valid": valid}),
        args.output,
    )
    return 0 if valid else 2


def _cmd_classify(args) -> int:
    graph = parse_graph_spec(args.graph)
    if not isinstance(graph, Graph) or graph.family != "wheel":
        raise ParseError("classify expects a wheel graph spec (wheel:N)")
    d = _ints_csv(args.d, "--d")
    case = classify_wheel_structure(graph.size, d)
    _emit(
        _json(
            {
                "graph": args.graph,
                "d": list(d),
                "case": case.value,
                "unit_d_neighbors_ok": check_unit_d_neighbors(graph, d),
            }
        ),
        args.output,
    )
    return 0


def _cmd_classify_matrix(args) -> int:
    if args.matrix:
        M = load_matrix_json(args.matrix)
    elif args.graph and args.d:
        graph = parse_graph_spec(args.graph, args.directed_support)
        M = laplacian_like(_adjacency(graph), _ints_csv(args.d, "--d"))
    else:
        raise ParseError("classify-matrix needs --matrix FILE or --graph SPEC with --d")
    c = classify(M)
    _emit(
        _json(
            {
                "is_z": c.is_z,
                "is_m": c.is_m,
                "is_almost_nonsingular_m": c.is_almost_nonsingular_m,
                "is_irreducible": c.is_irreducible,
                "det": c.det,
                "failing_minor": list(c.failing_minor) if c.failing_minor else None,
            }
        ),
        args.output,
    )
    return 0


def _structure_payload(s) -> dict:
    return {"d": list(s.d), "r": list(s.r)}


def _cmd_transform(args) -> int:
    name = args.transform
    payload: dict = {"transform": name}
    if name == "clique-star":
        if not args.graph or not args.clique:
            raise ParseError("clique-star needs --graph and --clique")
        graph = parse_graph_spec(args.graph)
        structure = None
        if args.d and args.r:
            structure = ArithStructure(_ints_csv(args.d, "--d"), _ints_csv(args.r, "--r"))
        new_graph, image = clique_star(graph, _ints_csv(args.clique, "--clique"), structure)
        payload["adjacency"] = new_graph.adjacency.to_lists()
        if image is not None:
            payload["structure"] = _structure_payload(image)
    elif name in ("blowup", "gen-blowup-m", "gen-blowup-a"):
        graph = parse_graph_spec(args.graph, args.directed_support)
        A = _adjacency(graph)
        d = _ints_csv(args.d, "--d")
        r = _ints_csv(args.r, "--r")
        q = _ints_csv(args.q, "--q")
        if name == "blowup":
            res = blowup_mq(laplacian_like(A, d), q, r)
            payload["x"] = res.x
            payload["mq"] = res.mq.to_lists()
            payload["mq_minus"] = res.mq_minus.to_lists()
        elif name == "gen-blowup-m":
            if not args.p:
                raise ParseError("gen-blowup-m needs --p")
            B, s = generalized_blowup_m(laplacian_like(A, d), d, r, _ints_csv(args.p, "--p"), q)
            payload["matrix"] = B.to_lists()
            payload["structure"] = _structure_payload(s)
        else:
            if not args.p:
                raise ParseError("gen-blowup-a needs --p")
            res = generalized_blowup_a(A, d, r, _ints_csv(args.p, "--p"), q)
            payload["matrix"] = res.matrix.to_lists()
            payload["structure"] = _structure_payload(res.structure)
            payload["raw"] = res.raw
    elif name == "cycle-to-wheel":
        s = cycle_to_wheel_divisor(_ints_csv(args.d, "--d"), _ints_csv(args.r, "--r"))
        payload["structure"] = _structure_payload(s)
    elif name == "cycle-to-wheel-lcm":
        if args.r0 is None:
            raise ParseError("cycle-to-wheel-lcm needs --r0")
        s = cycle_to_wheel_lcm(_ints_csv(args.r, "--r"), args.r0)
        payload["structure"] = _structure_payload(s)
    elif name == "cycle-to-wheel-affine":
        if args.a is None:
            raise ParseError("cycle-to-wheel-affine needs --a")
        s = cycle_to_wheel_affine(_ints_csv(args.d, "--d"), _ints_csv(args.r, "--r"), args.a)
        payload["structure"] = _structure_payload(s)
    elif name == "wheel-extend":
        s = wheel_extend(_ints_csv(args.d, "--d"), _ints_csv(args.r, "--r"))
        payload["structure"] = _structure_payload(s)
    else:  # unreachable: argparse restricts choices
        raise ParseError(f"unknown transform {name!r}")
    _emit(_json(payload), args.output)
    return 0


def _cmd_orbit(args) -> int:
    r = _ints_csv(args.r, "--r")
    orbit = zn_orbit(args.n, r)
    _emit(
        _json({"n": args.n, "r": list(r), "orbit": [list(v) for v in orbit]}),
        args.output,
    )
    return 0


def _cmd_critical_group(args) -> int:
    graph = parse_graph_spec(args.graph, args.directed_support)
    d = _ints_csv(args.d, "--d")
    r = _ints_csv(args.r, "--r")
    group = critical_group(_adjacency(graph), d, r)
    _emit(
        _json({"factors": list(group.invariant_factors), "order": group.order}),
        args.output,
    )
    return 0


def _cmd_reproduce(args) -> int:
    tables = TABLE_IDS if args.table == "all" else (args.table,)
    results = [res for table in tables for res in reproduce(table)]
    _emit(render_report(results) + "\n", args.output)
    return 0 if all(r.passed for r in results) else 2


def build_parser() -> _Parser:
    parser = _Parser(prog="arith", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, graph=False, need_d=False, need_r=False):
        if graph:
            p.add_argument("--graph", required=True, help="family:N or file:PATH")
            p.add_argument(
                "--directed-support",
                action="store_true",
                help="accept asymmetric matrix files as generalized graphs",
            )
        if need_d:
            p.add_argument("--d", required=True, help="comma-separated d-vector")
        if need_r:
            p.add_argument("--r", required=True, help="comma-separated r-vector")
        p.add_argument("--output", help="write the result to this file instead of stdout")

    p = sub.add_parser("enumerate", help="enumerate arithmetical structures")
    add_common(p, graph=True)
    p.add_argument("--mode", choices=("certified", "bounded"), default="certified")
    p.add_argument("--r-cap", type=int, default=DEFAULT_R_CAP)
    p.add_argument(
        "--bounded-ok",
        action="store_true",
        help="acknowledge that bounded results are not certified complete",
    )
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("verify", help="verify a (d, r) pair; exit 2 when invalid")
    add_common(p, graph=True, need_d=True, need_r=True)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("classify", help="wheel degree-vector trichotomy")
    add_common(p, graph=True, need_d=True)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("classify-matrix", help="Z/M/almost-non-singular classification")
    add_common(p)
    p.add_argument("--matrix", help="matrix JSON file")
    p.add_argument("--graph", help="family:N or file:PATH (classifies diag(d) - A)")
    p.add_argument("--d", help="comma-separated d-vector")
    p.add_argument("--directed-support", action="store_true")
    p.set_defaults(func=_cmd_classify_matrix)

    p = sub.add_parser("transform", help="apply a structure-producing transform")
    p.add_argument(
        "transform",
        choices=(
            "clique-star",
            "blowup",
            "gen-blowup-m",
            "gen-blowup-a",
            "cycle-to-wheel",
            "cycle-to-wheel-lcm",
            "cycle-to-wheel-affine",
            "wheel-extend",
        ),
    )
    p.add_argument("--graph", help="family:N or file:PATH")
    p.add_argument("--directed-support", action="store_true")
    p.add_argument("--d", help="comma-separated d-vector")
    p.add_argument("--r", help="comma-separated r-vector")
    p.add_argument("--clique", help="comma-separated vertex indices")
    p.add_argument("--p", help="comma-separated p-vector")
    p.add_argument("--q", help="comma-separated q-vector")
    p.add_argument("--r0", type=int, help="hub r-value for cycle-to-wheel-lcm")
    p.add_argument("--a", type=int, help="constant residue for cycle-to-wheel-affine")
    p.add_argument("--output")
    p.set_defaults(func=_cmd_transform)

    p = sub.add_parser("orbit", help="rim-rotation orbit of a wheel r-structure")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", required=True)
    p.add_argument("--output")
    p.set_defaults(func=_cmd_orbit)

    p = sub.add_parser("critical-group", help="invariant factors of the critical group")
    add_common(p, graph=True, need_d=True, need_r=True)
    p.set_defaults(func=_cmd_critical_group)

    p = sub.add_parser("reproduce", help="compare computed results to the golden tables")
    p.add_argument("table", choices=TABLE_IDS + ("all",))
    p.add_argument("--output")
    p.set_defaults(func=_cmd_reproduce)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except ArithError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
