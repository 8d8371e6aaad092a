"""Command line interface.

Subcommands: solve (rainbow search on a family file), gen (certified
constructions written as graph/family/manifest triples), verify
(re-certify a manifest, or run named check suites to CSV), f-exact
(exact rainbow threshold), ramsey-witness, and sunflower. Exit code 0
means found or all checks passed, 1 means not found or a check failed,
2 means bad input. Machine output goes to stdout, human summaries to
stderr. --jobs is accepted for interface stability; execution is
sequential.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from .bitset import to_tuple
from .constructions import (
    ConstructionOutput,
    blowup,
    bounded_degree_grid,
    circulant_power,
    colourable_disjoint_lower,
    colourable_lower,
    doubled_family,
    drisko_cycle,
    even_matching_family,
    multipartite_copies,
    multipartite_repeating,
    ramsey_witness,
    repeating_from_digraph,
    verify_claims,
)
from .families import CertificationError, validate_selection
from .fcalc import f_exact
from .io import (
    FormatError,
    dumps_graph,
    read_digraph,
    read_family,
    read_graph,
    read_manifest,
    write_family,
    write_graph,
    write_manifest,
)
from .reductions import find_sunflower
from .solver import BudgetExceeded, brute_rainbow, find_rainbow
from .suites import SUITE_NAMES, run_suites, write_suite_csv

__all__ = ["main"]


def _need(args, *names: str) -> list[int]:
    vals = []
    for name in names:
        v = getattr(args, name, None)
        if v is None:
            raise FormatError(f"generator {args.name!r} needs --{name}")
        vals.append(v)
    return vals


def _generate(args) -> ConstructionOutput:
    name = args.name
    if name == "drisko":
        (n,) = _need(args, "n")
        return drisko_cycle(n)
    if name == "even-matching":
        (n,) = _need(args, "n")
        return even_matching_family(n)
    if name == "doubled-even":
        (n,) = _need(args, "n")
        return doubled_family(even_matching_family(n))
    if name == "circulant":
        t, n = _need(args, "t", "n")
        return circulant_power(t, n)
    if name == "multipartite-copies":
        k, t, n = _need(args, "k", "t", "n")
        return multipartite_copies(k, t, n)
    if name == "colourable-lower":
        k, n, m = _need(args, "k", "n", "m")
        return colourable_lower(k, n, m)
    if name == "colourable-disjoint-lower":
        k, n, m = _need(args, "k", "n", "m")
        return colourable_disjoint_lower(k, n, m)
    if name == "multipartite-repeating":
        r, n = _need(args, "r", "n")
        return multipartite_repeating(r, n)
    if name == "grid":
        k, n, m = _need(args, "k", "n", "m")
        return bounded_degree_grid(k, n, m)
    if name == "blowup":
        if not args.graph:
            raise FormatError("generator 'blowup' needs --graph")
        (n,) = _need(args, "n")
        h = read_graph(args.graph)
        return blowup(h, n, clique_free=args.r, no_rainbow=args.m)
    if name == "repeating":
        if not args.digraph:
            raise FormatError("generator 'repeating' needs --digraph")
        (t,) = _need(args, "t")
        d = read_digraph(args.digraph)
        return repeating_from_digraph(
            d,
            t,
            multiplicity=args.multiplicity,
            cycle_free_up_to=args.cycle_free_up_to,
            no_rainbow=args.m,
        )
    raise FormatError(f"unknown generator {name!r}")


GEN_NAMES = (
    "drisko",
    "even-matching",
    "doubled-even",
    "circulant",
    "multipartite-copies",
    "colourable-lower",
    "colourable-disjoint-lower",
    "multipartite-repeating",
    "grid",
    "blowup",
    "repeating",
)


def _slug(out: ConstructionOutput) -> str:
    parts = [out.name]
    for key in sorted(out.params):
        val = out.params[key]
        if isinstance(val, int):
            parts.append(f"{key}{val}")
    return "-".join(parts)


def _cmd_solve(args) -> int:
    _, family = read_family(args.family)
    if args.brute:
        sel = brute_rainbow(family, args.size, budget=args.budget or 10**8)
    else:
        sel = find_rainbow(family, args.size)
    if sel is None:
        print(json.dumps({"found": False, "size": args.size}))
        return 1
    validate_selection(family, sel, expect_size=args.size)
    print(
        json.dumps(
            {"found": True, "size": args.size, "selection": [list(p) for p in sel.assignments]}
        )
    )
    return 0


def _cmd_gen(args) -> int:
    out = _generate(args)
    claims = verify_claims(out)
    os.makedirs(args.out, exist_ok=True)
    base = _slug(out)
    graph_path = os.path.join(args.out, base + ".graph")
    family_path = os.path.join(args.out, base + ".family.json")
    manifest_path = os.path.join(args.out, base + ".manifest.json")
    write_graph(graph_path, out.graph)
    write_family(family_path, out.family, graph_path=base + ".graph")
    manifest = out.manifest()
    manifest["claims"] = claims
    write_manifest(manifest_path, manifest)
    print(json.dumps({"graph": graph_path, "family": family_path, "manifest": manifest_path}))
    print(
        f"{base}: {out.graph.n} vertices, {len(out.family.sets)} sets, "
        f"{len(claims)} claims certified",
        file=sys.stderr,
    )
    return 0


def _cmd_verify(args) -> int:
    if args.manifest:
        return _verify_manifest(args)
    names = list(SUITE_NAMES) if args.suite == "all" else [args.suite]
    for name in names:
        if name not in SUITE_NAMES:
            raise FormatError(f"unknown suite {name!r}")
    rows = run_suites(names, seed=args.seed, timings=args.timings)
    if args.csv:
        with open(args.csv, "w", encoding="utf-8") as fh:
            write_suite_csv(rows, fh)
    else:
        write_suite_csv(rows, sys.stdout)
    failed = [r for r in rows if not r.passed]
    for r in failed:
        print(f"FAIL {r.suite}/{r.instance}: expected {r.expected}, got {r.observed}",
              file=sys.stderr)
    print(
        f"{len(rows) - len(failed)}/{len(rows)} checks passed "
        f"across {len(names)} suite(s), seed {args.seed}",
        file=sys.stderr,
    )
    return 0 if not failed else 1


def _verify_manifest(args) -> int:
    manifest = read_manifest(args.manifest)
    name = manifest.get("name")
    params = manifest.get("params", {})
    ns = argparse.Namespace(
        name=_GEN_BY_OUTPUT.get(name, name),
        graph=None,
        digraph=None,
        multiplicity=params.get("multiplicity", 1),
        cycle_free_up_to=None,
        **{k: params.get(k) for k in ("n", "m", "k", "t", "r")},
    )
    out = _generate(ns)
    verify_claims(out)
    stored_sets = [tuple(s) for s in manifest.get("sets", [])]
    fresh_sets = [to_tuple(s) for s in out.family.sets]
    if stored_sets != fresh_sets:
        raise CertificationError("manifest sets differ from regenerated construction")
    base = os.path.splitext(args.manifest)[0]
    if base.endswith(".manifest"):
        base = base[: -len(".manifest")]
    graph_file = base + ".graph"
    if os.path.exists(graph_file):
        if read_graph(graph_file).adj != out.graph.adj:
            raise CertificationError("stored graph differs from regenerated construction")
    print(json.dumps({"manifest": args.manifest, "claims": len(out.claims), "ok": True}))
    print(f"{name}: all claims re-certified", file=sys.stderr)
    return 0


# gen subcommand names keyed by the construction's own name field
_GEN_BY_OUTPUT = {
    "drisko-cycle": "drisko",
    "even-matching": "even-matching",
    "doubled-even-matching": "doubled-even",
    "circulant-power": "circulant",
    "multipartite-copies": "multipartite-copies",
    "colourable-lower": "colourable-lower",
    "colourable-disjoint-lower": "colourable-disjoint-lower",
    "multipartite-repeating": "multipartite-repeating",
    "bounded-degree-grid": "grid",
}


def _cmd_f_exact(args) -> int:
    g = read_graph(args.graph)
    start = time.perf_counter()
    result = f_exact(g, args.n, args.m, budget=args.budget)
    elapsed = int((time.perf_counter() - start) * 1000)
    print(
        json.dumps(
            {
                "value": result.value,
                "witness": [list(s) for s in result.witness_sets],
                "nodes_explored": result.nodes,
                "elapsed_ms": elapsed,
            }
        )
    )
    print(
        f"f(n={args.n}, m={args.m}) = {result.value} "
        f"({result.nodes} rainbow checks, {elapsed} ms)",
        file=sys.stderr,
    )
    return 0


def _cmd_ramsey(args) -> int:
    out = ramsey_witness(args.r, args.m, budget=args.budget or 2000, seed=args.seed)
    claims = verify_claims(out)
    summary = {
        "r": args.r,
        "m": args.m,
        "vertices": out.graph.n,
        "edges": out.graph.edge_count(),
        "claims": claims,
        "graph": dumps_graph(out.graph),
    }
    if args.out:
        os.makedirs(args.out, exist_ok=True)
        path = os.path.join(args.out, f"ramsey-witness-r{args.r}-m{args.m}.graph")
        write_graph(path, out.graph)
        summary["path"] = path
    print(json.dumps(summary))
    print(
        f"R({args.r},{args.m}) > {out.graph.n}: witness certified",
        file=sys.stderr,
    )
    return 0


def _cmd_sunflower(args) -> int:
    with open(args.sets, encoding="utf-8") as fh:
        data = json.load(fh)
    if not isinstance(data, list) or not all(isinstance(s, list) for s in data):
        raise FormatError("--sets file must hold a JSON list of lists")
    sf = find_sunflower([tuple(s) for s in data], args.k)
    if sf is None:
        print(json.dumps({"found": False, "k": args.k}))
        return 1
    print(
        json.dumps(
            {
                "found": True,
                "k": args.k,
                "core": sorted(sf.core),
                "members": list(sf.members),
                "petals": [sorted(p) for p in sf.petals],
            }
        )
    )
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ribs",
        description="Rainbow independent set solvers, constructions, and checks.",
    )
    parser.add_argument("--seed", type=int, default=0, help="seed for randomized checks")
    parser.add_argument("--jobs", type=int, default=1,
                        help="accepted for compatibility; runs are sequential")
    parser.add_argument("--budget", type=int, default=None,
                        help="work budget for exhaustive searches")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="search a family file for a rainbow set")
    p.add_argument("--family", required=True, help="family JSON file")
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--brute", action="store_true", help="use the exhaustive solver")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("gen", help="generate a certified construction")
    p.add_argument("name", choices=GEN_NAMES)
    p.add_argument("--out", default=".", help="output directory")
    for flag in ("n", "m", "k", "t", "r"):
        p.add_argument(f"--{flag}", type=int)
    p.add_argument("--multiplicity", type=int, default=1)
    p.add_argument("--cycle-free-up-to", type=int, dest="cycle_free_up_to")
    p.add_argument("--graph", help="host graph file (blowup)")
    p.add_argument("--digraph", help="base digraph file (repeating)")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("verify", help="re-certify a manifest or run check suites")
    p.add_argument("--manifest", help="manifest file to re-certify")
    p.add_argument("--suite", help="suite name or 'all'")
    p.add_argument("--csv", help="write suite rows to this file instead of stdout")
    p.add_argument("--timings", action="store_true",
                   help="fill the millis column (off by default for stable output)")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("f-exact", help="exact rainbow threshold of a graph")
    p.add_argument("--graph", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.set_defaults(func=_cmd_f_exact)

    p = sub.add_parser("ramsey-witness", help="certified clique/independence witness")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--out", help="directory to write the graph file")
    p.set_defaults(func=_cmd_ramsey)

    p = sub.add_parser("sunflower", help="find a sunflower in a set system")
    p.add_argument("--sets", required=True, help="JSON file: list of lists")
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=_cmd_sunflower)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify" and not args.manifest and not args.suite:
        parser.error("verify needs --manifest or --suite")
    try:
        return args.func(args)
    except (FormatError, FileNotFoundError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return 1
    except CertificationError as exc:
        print(f"certification failed: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
