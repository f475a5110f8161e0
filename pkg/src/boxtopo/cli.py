"""Command-line surface.

Subcommands: gen, complex, homology, bounds, verify.  All configuration
is via flags; identical inputs produce byte-identical JSON outputs.

Exit codes are a stable contract: 0 success (all checks verified),
1 verification failure, 2 input or guard error.
"""

from __future__ import annotations

import argparse
import dataclasses
import sys
from pathlib import Path

from . import bounds as bd
from . import builders, graphs, homology, simplicial
from .simplicial import dumps_canonical


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


def _load_graph(path: str) -> graphs.Graph:
    text = Path(path).read_text()
    if text.lstrip().startswith("{"):
        import json

        return graphs.graph_from_obj(json.loads(text))
    return graphs.graph_from_edge_list(text)


def _load_complex(path: str):
    import json

    obj = json.loads(Path(path).read_text())
    return simplicial.complex_from_obj(obj)


# ---------------------------------------------------------------------------
# gen
# ---------------------------------------------------------------------------

def cmd_gen(args: argparse.Namespace) -> int:
    family = args.family
    if family == "kneser":
        if len(args.params) != 2:
            raise ValueError("gen kneser needs exactly two parameters: n k")
        G = graphs.kneser_graph(int(args.params[0]), int(args.params[1]))
    elif family == "complete":
        if len(args.params) != 1:
            raise ValueError("gen complete needs one parameter: n")
        G = graphs.complete_graph(int(args.params[0]))
    elif family == "cycle":
        if len(args.params) != 1:
            raise ValueError("gen cycle needs one parameter: n")
        G = graphs.cycle_graph(int(args.params[0]))
    elif family == "cone":
        if args.base is None:
            raise ValueError("gen cone needs --base FILE")
        G = graphs.cone_k(_load_graph(args.base), args.k)
    else:
        raise ValueError(f"unknown family {family!r}")
    _emit(dumps_canonical(graphs.graph_to_obj(G)), args.output)
    return 0


# ---------------------------------------------------------------------------
# complex
# ---------------------------------------------------------------------------

def cmd_complex(args: argparse.Namespace) -> int:
    kind = args.kind
    if kind in ("n", "box", "box0", "bc", "hom"):
        G = _load_graph(args.input)
        if kind == "n":
            K = builders.neighborhood_complex(G)
            obj = simplicial.complex_to_obj(K)
        elif kind == "hom":
            Z = builders.hom_k2_order_complex(G)
            obj = simplicial.complex_to_obj(Z.complex, Z.action)
        else:
            Z = {
                "box": builders.box_complex,
                "box0": builders.box0_complex,
                "bc": builders.cones_over_shores_complex,
            }[kind](G)
            obj = simplicial.complex_to_obj(
                Z.complex, Z.action, builders.shore_vertex_records(Z, G.n)
            )
    elif kind in ("sd", "susp"):
        K, action = _load_complex(args.input)
        if action is not None:
            Z = simplicial.Z2Complex(K, action)
            out = (
                simplicial.subdivide_involution(Z)
                if kind == "sd"
                else simplicial.z2_suspension(Z)
            )
            obj = simplicial.complex_to_obj(out.complex, out.action)
        else:
            out = (
                simplicial.barycentric_subdivision(K)
                if kind == "sd"
                else simplicial.suspension(K)
            )
            obj = simplicial.complex_to_obj(out)
    else:
        raise ValueError(f"unknown complex kind {kind!r}")
    _emit(dumps_canonical(obj), args.output)
    return 0


# ---------------------------------------------------------------------------
# homology
# ---------------------------------------------------------------------------

def cmd_homology(args: argparse.Namespace) -> int:
    K, _ = _load_complex(args.input)
    profile = homology.reduced_homology(K)
    if args.format == "table":
        _emit(str(profile) + "\n", args.output)
    else:
        _emit(dumps_canonical(homology.profile_to_obj(profile)), args.output)
    return 0


# ---------------------------------------------------------------------------
# bounds
# ---------------------------------------------------------------------------

BOUNDS_GUARD = 16  # box-type complexes hold ~2^n faces per shore


def cmd_bounds(args: argparse.Namespace) -> int:
    G = _load_graph(args.input)
    if G.n > BOUNDS_GUARD and not args.force:
        raise ValueError(
            f"graph on {G.n} vertices exceeds the bounds guard ({BOUNDS_GUARD}); "
            "pass --force to override"
        )
    lov = bd.lovasz_bound(G)
    sar = bd.sarkaria_bound(G)
    exact = None
    if args.exact:
        exact = graphs.chromatic_number(G, force=args.force)
        lov = dataclasses.replace(lov, exact_chi=exact)
        sar = dataclasses.replace(sar, exact_chi=exact)
    if args.format == "table":
        lines = [
            f"graph      {G.descriptor()}",
            f"lovasz     {lov.value}" + ("  (caveat)" if lov.caveat else ""),
            f"sarkaria   {sar.value}" + ("  (caveat)" if sar.caveat else ""),
        ]
        if exact is not None:
            lines.append(f"exact chi  {exact}")
        _emit("\n".join(lines) + "\n", args.output)
    else:
        obj: dict = {"lovasz": lov.to_obj(), "sarkaria": sar.to_obj()}
        if exact is not None:
            obj["exact_chi"] = exact
        _emit(dumps_canonical(obj), args.output)
    return 0


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def _named_z2_inputs() -> list[simplicial.Z2Complex]:
    return [
        simplicial.two_points_z2(),
        simplicial.antipodal_cycle_z2(4),
        simplicial.antipodal_cycle_z2(6),
    ]


def _run_suite(suite: str, max_n: int) -> list[bd.VerificationOutcome]:
    outcomes: list[bd.VerificationOutcome] = []
    if suite in ("suspension", "shore", "shore-identity", "euler", "cone", "hom"):
        cap = min(max_n, 4) if suite == "hom" else max_n
        corpus = graphs.connected_graph_corpus(cap)
        if suite in ("suspension", "shore", "euler"):
            corpus = corpus + [graphs.kneser_graph(5, 2)]
        for G in corpus:
            if suite == "suspension":
                outcomes.append(bd.verify_suspension_relation(G))
            elif suite == "shore":
                outcomes.append(bd.verify_shore_retract(G))
            elif suite == "shore-identity":
                outcomes.append(bd.verify_shore_identity(G))
            elif suite == "euler":
                if G.edges:
                    outcomes.append(bd.verify_even_euler(G))
            elif suite == "cone":
                outcomes.append(bd.verify_cone_graph(G))
            elif suite == "hom":
                outcomes.append(bd.verify_hom_equivalence(G))
    elif suite == "roundtrip":
        for Z in _named_z2_inputs():
            outcomes.append(bd.verify_construction_roundtrip(Z))
    elif suite == "nerve":
        for Z in _named_z2_inputs() + [simplicial.octahedron_z2()]:
            outcomes.append(bd.verify_nerve_identity(Z))
    else:
        raise ValueError(f"unknown suite {suite!r}")
    return outcomes


ALL_SUITES = (
    "suspension",
    "shore",
    "shore-identity",
    "euler",
    "roundtrip",
    "nerve",
    "cone",
    "hom",
)


def cmd_verify(args: argparse.Namespace) -> int:
    if args.suite == "nbhd-search":
        if args.target is None or args.n is None:
            raise ValueError("verify nbhd-search needs --n and --target FILE")
        K, _ = _load_complex(args.target)
        found = bd.neighborhood_realizability_search(K, args.n)
        obj = {
            "check": "nbhd-search",
            "n": args.n,
            "found": graphs.graph_to_obj(found) if found else None,
        }
        if args.format == "table":
            msg = found.descriptor() if found else "none found"
            _emit(f"nbhd-search n={args.n}: {msg}\n", args.output)
        else:
            _emit(dumps_canonical(obj), args.output)
        return 0

    suites = list(ALL_SUITES) if args.suite == "all" else [args.suite]
    outcomes: list[bd.VerificationOutcome] = []
    for suite in suites:
        outcomes.extend(_run_suite(suite, args.max_n))
    outcomes.sort(key=lambda o: (o.check, o.input))
    if args.format == "table":
        lines = [
            f"{'PASS' if o.passed else 'FAIL'}  {o.check:24s} {o.input}"
            for o in outcomes
        ]
        _emit("\n".join(lines) + "\n", args.output)
    else:
        _emit(dumps_canonical([o.to_obj() for o in outcomes]), args.output)
    return 0 if all(o.passed for o in outcomes) else 1


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="boxtopo",
        description="Box complexes, exact homology, and chromatic lower bounds",
    )
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate a graph file")
    g.add_argument("family", choices=["kneser", "complete", "cycle", "cone"])
    g.add_argument("params", nargs="*", help="family parameters")
    g.add_argument("--base", help="base graph file (cone)")
    g.add_argument("--k", type=int, default=1, help="cone iterations (default 1)")
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_gen)

    c = sub.add_parser("complex", help="build a complex from a graph or complex file")
    c.add_argument("kind", choices=["n", "box", "box0", "bc", "hom", "sd", "susp"])
    c.add_argument("input")
    c.add_argument("-o", "--output")
    c.set_defaults(func=cmd_complex)

    h = sub.add_parser("homology", help="reduced homology of a complex file")
    h.add_argument("input")
    h.add_argument("--format", choices=["json", "table"], default="json")
    h.add_argument("-o", "--output")
    h.set_defaults(func=cmd_homology)

    b = sub.add_parser("bounds", help="chromatic lower bounds for a graph file")
    b.add_argument("input")
    b.add_argument("--exact", action="store_true", help="also compute exact chi")
    b.add_argument("--force", action="store_true", help="override the size guard")
    b.add_argument("--format", choices=["json", "table"], default="json")
    b.add_argument("-o", "--output")
    b.set_defaults(func=cmd_bounds)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", choices=list(ALL_SUITES) + ["all", "nbhd-search"])
    v.add_argument("--max-n", type=int, default=5, help="corpus vertex cap (default 5)")
    v.add_argument("--n", type=int, help="vertex count for nbhd-search")
    v.add_argument("--target", help="target complex file for nbhd-search")
    v.add_argument("--format", choices=["json", "table"], default="json")
    v.add_argument("-o", "--output")
    v.set_defaults(func=cmd_verify)

    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
