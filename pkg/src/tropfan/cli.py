"""Command-line frontend: flats, lattices, fans, moduli fans, projections,
verification suites, and census tables, as JSON / DOT / text documents.

Exit status: 0 on success, 1 when a verification suite finds a failure,
2 on malformed input.
"""

from __future__ import annotations

import argparse
import itertools
import json
import sys
from pathlib import Path
from typing import Optional

from . import matroid, tropmoduli
from .bergman import bergman_fan, edge_str, fan_to_json, is_balanced, project_fan
from .graphs import Graph, parse_graph
from .matroid import SetSystem, enumerate_flats, flats_lattice, verify_matroid_axioms
from .tropmoduli import moduli_fan_rad, qn_relations_check, verify_injectivity

SCHEMA = 1


def _petersen() -> Graph:
    outer = [(2, 3), (3, 4), (4, 5), (5, 6), (2, 6)]
    spokes = [(2, 7), (3, 8), (4, 9), (5, 10), (6, 11)]
    inner = [(7, 9), (9, 11), (8, 11), (8, 10), (7, 10)]
    return Graph.from_edges(outer + spokes + inner)


NAMED_GRAPHS = {
    "k4": lambda: Graph.complete([2, 3, 4, 5]),
    "k4-minus-e25": lambda: Graph.from_edges([(2, 3), (2, 4), (3, 4), (3, 5), (4, 5)]),
    "k4-minus-e35-e45": lambda: Graph.from_edges([(2, 3), (2, 4), (2, 5), (3, 4)]),
    "k2-2": lambda: Graph.from_edges([(2, 3), (2, 4), (3, 5), (4, 5)]),
    "petersen-check": _petersen,
}


def resolve_graph(spec: str) -> Graph:
    """A named graph, ``complete:<m>``, a file path, or inline edge text
    (commas or semicolons doubling as newlines)."""
    if spec in NAMED_GRAPHS:
        return NAMED_GRAPHS[spec]()
    if spec.startswith("complete:"):
        m = int(spec.split(":", 1)[1])
        return Graph.complete(range(2, m + 2))
    path = Path(spec)
    if path.exists():
        return parse_graph(path.read_text())
    return parse_graph(spec.replace(",", "\n").replace(";", "\n"))


def _emit(doc: str, output: Optional[str]):
    if output:
        Path(output).write_text(doc)
    else:
        sys.stdout.write(doc)


def _flat_json(f) -> list[str]:
    return [edge_str(e) for e in f.edges.edges]


def cmd_flats(args) -> int:
    g = resolve_graph(args.graph)
    flats = enumerate_flats(g)
    if args.format == "json":
        doc = {
            "schema": SCHEMA,
            "graph": [edge_str(e) for e in g.edges],
            "flats": [{"edges": _flat_json(f), "rank": f.rank} for f in flats],
        }
        _emit(json.dumps(doc, indent=2) + "\n", args.output)
    else:
        lines = [f"rank {f.rank}: {' '.join(_flat_json(f)) or '{}'}" for f in flats]
        _emit("\n".join(lines) + "\n", args.output)
    return 0


def cmd_lattice(args) -> int:
    g = resolve_graph(args.graph)
    flats = enumerate_flats(g)
    covers = flats_lattice(g)
    index = {f: i for i, f in enumerate(flats)}
    if args.format == "json":
        doc = {
            "schema": SCHEMA,
            "flats": [_flat_json(f) for f in flats],
            "covers": [[index[a], index[b]] for a, b in covers],
        }
        _emit(json.dumps(doc, indent=2) + "\n", args.output)
    elif args.format == "dot":
        label = lambda f: " ".join(_flat_json(f)) or "{}"
        lines = ["digraph lattice {"]
        for f in flats:
            lines.append(f'  f{index[f]} [label="{label(f)}"];')
        for a, b in covers:
            lines.append(f"  f{index[a]} -> f{index[b]};")
        lines.append("}")
        _emit("\n".join(lines) + "\n", args.output)
    else:
        counts = _flat_counts(flats)
        _emit("flats: " + ",".join(map(str, counts)) + "\n", args.output)
    return 0


def _flat_counts(flats) -> list[int]:
    top = max(f.rank for f in flats)
    return [sum(1 for f in flats if f.rank == r) for r in range(top + 1)]


def cmd_fan(args) -> int:
    g = resolve_graph(args.graph)
    fan = bergman_fan(g)
    balance = is_balanced(fan)
    if args.format == "json":
        doc = fan_to_json(fan)
        doc["balanced"] = balance.balanced
        _emit(json.dumps(doc, indent=2) + "\n", args.output)
    else:
        lines = [
            "cones by dimension: " + ",".join(map(str, fan.census())),
            f"balanced: {str(balance.balanced).lower()}",
        ]
        _emit("\n".join(lines) + "\n", args.output)
    return 0


def cmd_moduli(args) -> int:
    gamma = "complete" if args.graph in (None, "complete") else resolve_graph(args.graph)
    fan = moduli_fan_rad(args.n, gamma)
    target = gamma if isinstance(gamma, Graph) else Graph.complete(range(2, args.n + 1))
    projected = project_fan(fan, target)
    if args.format == "json":
        doc = {
            "schema": SCHEMA,
            "n": args.n,
            "graph": [edge_str(e) for e in target.edges],
            "radial_fan": fan_to_json(fan),
            "projected_fan": fan_to_json(projected),
        }
        _emit(json.dumps(doc, indent=2) + "\n", args.output)
    else:
        lines = [
            "radial cones by dimension: " + ",".join(map(str, fan.census())),
            "projected cones by dimension: " + ",".join(map(str, projected.census())),
        ]
        _emit("\n".join(lines) + "\n", args.output)
    return 0


def cmd_project(args) -> int:
    gamma = resolve_graph(args.graph)
    ambient = Graph.complete(gamma.labels)
    fan = bergman_fan(ambient)
    projected = project_fan(fan, gamma)
    if args.format == "json":
        _emit(json.dumps(fan_to_json(projected), indent=2) + "\n", args.output)
    else:
        _emit(
            "projected cones by dimension: "
            + ",".join(map(str, projected.census()))
            + "\n",
            args.output,
        )
    return 0


def cmd_counts(args) -> int:
    if args.complete is not None:
        g = Graph.complete(range(2, args.complete + 2))
    else:
        g = resolve_graph(args.graph)
    flats = enumerate_flats(g)
    lines = ["flats: " + ",".join(map(str, _flat_counts(flats)))]
    if g.num_vertices <= 6:
        fan = bergman_fan(g)
        lines.append("cones: " + ",".join(map(str, fan.census())))
    _emit("\n".join(lines) + "\n", args.output)
    return 0


# ---------------------------------------------------------------------------
# Verification suites


def _verify_axioms(out) -> bool:
    ok = True
    for nv in (3, 4):
        labels = tuple(range(2, 2 + nv))
        all_edges = list(itertools.combinations(labels, 2))
        for bits in range(1 << len(all_edges)):
            g = Graph(labels, tuple(e for i, e in enumerate(all_edges) if bits >> i & 1))
            ground = tuple(g.edges)
            systems = [
                (SetSystem(ground, members=tuple(matroid.independent_sets(g))), "I"),
                (SetSystem(ground, members=tuple(matroid.bases(g))), "B"),
                (SetSystem(ground, rank=matroid.rank_table(g)), "R"),
                (SetSystem(ground, rank=matroid.rank_table(g)), "R'"),
                (SetSystem(ground, closure=matroid.closure_table(g)), "S"),
                (SetSystem(ground, members=tuple(matroid.circuits(g))), "C"),
            ]
            for system, family in systems:
                report = verify_matroid_axioms(system, family)
                if not report.holds:
                    out(f"FAIL axioms {family} on {g.edges}: {report.counterexample}")
                    ok = False
    if ok:
        out("ok: axiom families I, B, R, R', S, C on all graphs with <= 4 vertices")
    return ok


def _verify_psi(out) -> bool:
    ok = True
    for n in (4, 5, 6):
        report = qn_relations_check(n)
        if not report.holds:
            out(f"FAIL distance-class relations at n={n}: {report}")
            ok = False
        k = Graph.complete(range(2, n + 1))
        for chain in matroid.all_chains(k):
            if len(chain) == 0:
                continue
            radial = tropmoduli.psi_cof_to_radial(chain)
            if tropmoduli.psi_radial_to_cof(radial) != chain:
                out(f"FAIL round trip at n={n}: {chain}")
                ok = False
                break
    if ok:
        out("ok: distance-class relations and chain round trips for n = 4, 5, 6")
    return ok


def _verify_balancing(out) -> bool:
    ok = True
    for m in (3, 4, 5):
        fan = bergman_fan(Graph.complete(range(2, m + 2)))
        report = is_balanced(fan)
        if not report.balanced:
            out(f"FAIL balancing for the complete graph on {m} vertices")
            ok = False
    sample = bergman_fan(Graph.complete([2, 3, 4, 5]))
    sigma = sample.cones_of_dim(sample.max_dim)[0]
    if is_balanced(sample.with_weights({sigma.rayset: 2})).balanced:
        out("FAIL perturbed weights still balance")
        ok = False
    if ok:
        out("ok: complete-graph fans balance; a perturbed weight does not")
    return ok


def _verify_theorem(out, max_vertices: int) -> bool:
    ok = True
    for nv in range(4, max_vertices + 1):
        labels = tuple(range(2, 2 + nv))
        all_edges = list(itertools.combinations(labels, 2))
        pairs = []
        for bits in range(1 << len(all_edges)):
            g = Graph(labels, tuple(e for i, e in enumerate(all_edges) if bits >> i & 1))
            if not g.is_connected():
                continue
            report = verify_injectivity(g)
            if not report.agree:
                out(f"FAIL trichotomy splits on {g.edges}")
                ok = False
            pairs.append((report.injective, report.multipartite))
        out(
            f"ok: {len(pairs)} connected graphs on {nv} vertices, "
            f"{sum(1 for a, _ in pairs if a)} with bijective projection, all agreeing"
        )
    return ok


SUITES = {
    "axioms": lambda args, out: _verify_axioms(out),
    "psi": lambda args, out: _verify_psi(out),
    "balancing": lambda args, out: _verify_balancing(out),
    "theorem": lambda args, out: _verify_theorem(out, args.max_vertices),
}


def cmd_verify(args) -> int:
    lines: list[str] = []
    passed = SUITES[args.suite](args, lines.append)
    _emit("\n".join(lines) + "\n", args.output)
    return 0 if passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tropfan",
        description="Graphic matroids, Bergman fans, and radially aligned moduli fans.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, formats=("json", "text")):
        p.add_argument("--graph", required=True, help="named graph, file, or inline edges")
        p.add_argument("--format", choices=formats, default="text")
        p.add_argument("--output", "-o", default=None, help="write to a file instead of stdout")

    p = sub.add_parser("flats", help="flats of the cycle matroid")
    common(p)
    p.set_defaults(func=cmd_flats)

    p = sub.add_parser("lattice", help="Hasse diagram of the lattice of flats")
    common(p, formats=("json", "dot", "text"))
    p.set_defaults(func=cmd_lattice)

    p = sub.add_parser("fan", help="Bergman fan with a balancing check")
    common(p)
    p.set_defaults(func=cmd_fan)

    p = sub.add_parser("moduli", help="radially aligned stable moduli fan")
    p.add_argument("--n", type=int, required=True, help="number of ends (4..7)")
    p.add_argument("--graph", default="complete")
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.add_argument("--output", "-o", default=None)
    p.set_defaults(func=cmd_moduli)

    p = sub.add_parser("project", help="project the ambient Bergman fan onto a subgraph")
    common(p)
    p.set_defaults(func=cmd_project)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=sorted(SUITES))
    p.add_argument("--max-vertices", type=int, default=4, dest="max_vertices")
    p.add_argument("--output", "-o", default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("counts", help="census tables (flats by rank, cones by dimension)")
    p.add_argument("--graph", default=None)
    p.add_argument("--complete", type=int, default=None, help="use the complete graph on this many vertices")
    p.add_argument("--output", "-o", default=None)
    p.set_defaults(func=cmd_counts)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "counts" and args.complete is None and args.graph is None:
        parser.error("counts needs --graph or --complete")
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
