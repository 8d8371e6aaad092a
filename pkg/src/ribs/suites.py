"""Named verification suites behind the command line `verify`.

Each suite is a deterministic battery of checks: certified
constructions, witness algorithms run against seeded random instances,
and frozen regression values for the exact calculator. A check row
carries the expected and observed outcome as short strings; the CSV
emitted for a fixed seed is byte identical between runs because row
timing defaults to zero (opt in with timings=True).
"""

from __future__ import annotations

import csv
import random
import time
from dataclasses import dataclass
from typing import Callable, Sequence, TextIO

from .constructions import (
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
from .families import ColoredFamily, validate_selection
from .fcalc import f_exact
from .graphs import (
    Digraph,
    complete_multipartite,
    cycle_graph,
    disjoint_union,
    empty_graph,
    enum_independent_sets,
    make_graph,
    path_graph,
)
from .reductions import (
    RepeatingGraph,
    digraph_condition_a,
    find_sunflower,
    sunflower_reduce_rainbow,
)
from .samplers import (
    sample_bipartite_line,
    sample_chordal,
    sample_claw_free,
    sample_kcolorable,
    sample_kr_free,
    sample_max_degree,
    sample_staircase_bipartite_line,
)
from .solver import find_rainbow
from .witnesses import (
    chordal_rainbow,
    clawfree_rainbow,
    cliquepartition_rainbow,
    colourable_rainbow,
    degree2_rainbow,
    maxdeg_rainbow_pair,
    ramsey_maximal_rainbow,
    repeating_diag_rainbow,
    staircase_colourable_rainbow,
)

__all__ = ["SuiteRow", "SUITE_NAMES", "run_suite", "run_suites", "write_suite_csv"]


@dataclass(frozen=True)
class SuiteRow:
    suite: str
    instance: str
    expected: str
    observed: str
    passed: bool
    millis: int


Check = tuple[str, str, Callable[[], str]]


def _certified(thunk: Callable[[], object]) -> Callable[[], str]:
    def run() -> str:
        verify_claims(thunk())  # raises on a failed claim
        return "certified"

    return run


def _rainbow_found(family: ColoredFamily, m: int) -> str:
    sel = find_rainbow(family, m)
    if sel is None:
        return "none"
    validate_selection(family, sel, expect_size=m)
    return "rainbow"


def _choose_sets(rng: random.Random, g, size: int, count: int) -> ColoredFamily:
    pool = enum_independent_sets(g, size)
    if not pool:
        raise RuntimeError(f"host has no independent {size}-set")
    return ColoredFamily(g, tuple(rng.choice(pool) for _ in range(count)))


def _suite_drisko(seed: int) -> list[Check]:
    checks: list[Check] = []
    for n in (2, 3, 4):
        out = drisko_cycle(n)
        checks.append((f"cycle-n{n}", "certified", _certified(lambda o=out: o)))

        def forced(o=out, n=n) -> str:
            fam = ColoredFamily(o.graph, o.family.sets + (o.family.sets[0],))
            return _rainbow_found(fam, n)

        checks.append((f"forced-n{n}", "rainbow", forced))
    rng = random.Random(seed)
    for i in range(8):
        def trial(rng=rng) -> str:
            host, fam = sample_bipartite_line(rng, 3, 5)
            return _rainbow_found(fam, 3)

        checks.append((f"bipartite-line-{i}", "rainbow", trial))
    return checks


def _suite_gendrisko(seed: int) -> list[Check]:
    checks: list[Check] = [
        ("even-n2", "certified", _certified(lambda: even_matching_family(2))),
        ("even-n4", "certified", _certified(lambda: even_matching_family(4))),
        (
            "doubled-even-n2",
            "certified",
            _certified(lambda: doubled_family(even_matching_family(2))),
        ),
    ]

    def refusal() -> str:
        try:
            even_matching_family(3)
        except ValueError:
            return "refused"
        return "accepted"

    checks.append(("odd-n3", "refused", refusal))
    return checks


def _suite_staircase(seed: int) -> list[Check]:
    rng = random.Random(seed)
    checks: list[Check] = []
    for i in range(8):
        def trial(rng=rng) -> str:
            host, fam = sample_staircase_bipartite_line(rng, 3)
            return _rainbow_found(fam, 3)

        checks.append((f"staircase-{i}", "rainbow", trial))
    return checks


def _suite_clawfree(seed: int) -> list[Check]:
    rng = random.Random(seed)
    checks: list[Check] = []
    for i in range(8):
        def trial(rng=rng) -> str:
            g = sample_claw_free(rng, 12, 2)
            fam = _choose_sets(rng, g, 3, 2)
            sel = clawfree_rainbow(g, fam, 2, 2)
            validate_selection(fam, sel, expect_size=2)
            return "valid"

        checks.append((f"claw-t2-{i}", "valid", trial))

    def cliques(rng=rng) -> str:
        g = disjoint_union([cycle_graph(3), path_graph(2), path_graph(1), path_graph(2)])
        fam = _choose_sets(rng, g, 3, 3)
        sel = cliquepartition_rainbow(g, fam)
        validate_selection(fam, sel, expect_size=3)
        return "valid"

    checks.append(("clique-partition", "valid", cliques))
    return checks


def _suite_forbidden(seed: int) -> list[Check]:
    checks: list[Check] = [
        ("multipartite-copies", "certified", _certified(lambda: multipartite_copies(3, 2, 4))),
        ("multipartite-repeating-r4n2", "certified", _certified(lambda: multipartite_repeating(4, 2))),
        ("multipartite-repeating-r4n3", "certified", _certified(lambda: multipartite_repeating(4, 3))),
    ]

    def diag_minus() -> str:
        rep = RepeatingGraph.from_digraph(Digraph.from_arcs(3, []), 4)
        sel = repeating_diag_rainbow(rep, "Kr-", 5)
        validate_selection(rep.family(1), sel, expect_size=3)
        return "valid"

    checks.append(("diag-kr-minus", "valid", diag_minus))

    def diag_plain() -> str:
        rep = RepeatingGraph(3, 3, Digraph.from_arcs(3, []), empty_graph(9))
        sel = repeating_diag_rainbow(rep, "Kr", 3)
        validate_selection(rep.family(1), sel, expect_size=3)
        return "valid"

    checks.append(("diag-kr", "valid", diag_plain))
    return checks


def _suite_chordal(seed: int) -> list[Check]:
    rng = random.Random(seed)
    checks: list[Check] = []
    for i in range(8):
        def trial(rng=rng) -> str:
            g = sample_chordal(rng, 12, p=0.35)
            fam = _choose_sets(rng, g, 2, 2)
            sel = chordal_rainbow(g, fam, 2)
            validate_selection(fam, sel, expect_size=2)
            return "valid"

        checks.append((f"chordal-{i}", "valid", trial))
    return checks


def _suite_dag(seed: int) -> list[Check]:
    checks: list[Check] = []
    for n in (3, 4, 5):
        def holds(n=n) -> str:
            ok, _ = digraph_condition_a(Digraph.directed_cycle(n), n, n)
            return "holds" if ok else "fails"

        checks.append((f"cycle-n{n}", "holds", holds))

    def small_m() -> str:
        ok, cert = digraph_condition_a(Digraph.directed_cycle(4), 4, 3)
        return "fails" if not ok and cert["kind"] == "acyclic-set" else "holds"

    checks.append(("cycle-n4-m3", "fails", small_m))

    def chord() -> str:
        arcs = [(i, (i + 1) % 4) for i in range(4)] + [(0, 2)]
        ok, cert = digraph_condition_a(Digraph.from_arcs(4, arcs), 4, 4)
        return "fails" if not ok and cert["kind"] == "cycle" else "holds"

    checks.append(("cycle-n4-chord", "fails", chord))
    checks.append(
        (
            "repeating-c4",
            "certified",
            _certified(
                lambda: repeating_from_digraph(
                    Digraph.directed_cycle(4), 3, multiplicity=3,
                    cycle_free_up_to=4, no_rainbow=4,
                )
            ),
        )
    )
    return checks


def _suite_colourable(seed: int) -> list[Check]:
    checks: list[Check] = [
        ("lower-k2", "certified", _certified(lambda: colourable_lower(2, 3, 2))),
        ("lower-k3", "certified", _certified(lambda: colourable_lower(3, 3, 3))),
        ("disjoint-k2", "certified", _certified(lambda: colourable_disjoint_lower(2, 3, 2))),
    ]
    rng = random.Random(seed)
    for i in range(6):
        def trial(rng=rng) -> str:
            g, coloring = sample_kcolorable(rng, 9, 3)
            fam = _choose_sets(rng, g, 2, 3 * 1 + 1)
            sel = colourable_rainbow(g, coloring, fam, 2)
            validate_selection(fam, sel, expect_size=2)
            return "valid"

        checks.append((f"colourable-{i}", "valid", trial))

    def staircase(rng=rng) -> str:
        g, coloring = sample_kcolorable(rng, 8, 2)
        ones = enum_independent_sets(g, 1)
        twos = enum_independent_sets(g, 2)
        fam = ColoredFamily(g, (rng.choice(ones), rng.choice(twos), rng.choice(twos)))
        sel = staircase_colourable_rainbow(g, coloring, fam, 2, 2)
        validate_selection(fam, sel, expect_size=2)
        return "valid"

    checks.append(("staircase-colourable", "valid", staircase))
    return checks


def _suite_degree12(seed: int) -> list[Check]:
    rng = random.Random(seed)
    checks: list[Check] = []
    for i in range(6):
        def trial(rng=rng) -> str:
            g = sample_max_degree(rng, 10, 2)
            fam = _choose_sets(rng, g, 2, 3)
            sel = degree2_rainbow(g, fam)
            validate_selection(fam, sel, expect_size=2)
            return "valid"

        checks.append((f"degree2-{i}", "valid", trial))
    for i in range(4):
        def pair(rng=rng) -> str:
            g = sample_max_degree(rng, 10, 3)
            fam = _choose_sets(rng, g, 2, 3)
            sel = maxdeg_rainbow_pair(g, fam, 3)
            validate_selection(fam, sel, expect_size=2)
            return "valid"

        checks.append((f"pair-k3-{i}", "valid", pair))
    return checks


def _suite_grid(seed: int) -> list[Check]:
    return [
        ("grid-k3n5m4", "certified", _certified(lambda: bounded_degree_grid(3, 5, 4))),
        ("grid-k4n3m2", "certified", _certified(lambda: bounded_degree_grid(4, 3, 2))),
        ("grid-k5n4m3", "certified", _certified(lambda: bounded_degree_grid(5, 4, 3))),
    ]


def _suite_ramsey(seed: int) -> list[Check]:
    checks: list[Check] = [
        ("witness-r3m3", "certified", _certified(lambda: ramsey_witness(3, 3))),
        ("witness-r2m5", "certified", _certified(lambda: ramsey_witness(2, 5))),
        ("witness-r4m2", "certified", _certified(lambda: ramsey_witness(4, 2))),
        ("witness-r3m4", "certified", _certified(lambda: ramsey_witness(3, 4))),
    ]
    rng = random.Random(seed)
    for i in range(3):
        def trial(rng=rng) -> str:
            g = sample_kr_free(rng, 10, 3)
            fam = _choose_sets(rng, g, 3, 6)
            sel = ramsey_maximal_rainbow(g, fam, 3, 3)
            validate_selection(fam, sel, expect_size=3)
            return "valid"

        checks.append((f"triangle-free-{i}", "valid", trial))
    return checks


def _suite_sunflower(seed: int) -> list[Check]:
    def found(sets, k):
        def run() -> str:
            return "found" if find_sunflower(sets, k) is not None else "absent"

        return run

    checks: list[Check] = [
        ("common-core", "found", found([(1, 2), (1, 3), (1, 4)], 3)),
        ("disjoint", "found", found([(1, 2), (3, 4), (5, 6)], 3)),
        ("triangle-none", "absent", found([(1, 2), (2, 3), (3, 1)], 3)),
        ("triangle-pair", "found", found([(1, 2), (2, 3), (3, 1)], 2)),
    ]

    def reduce_absent() -> str:
        fam = drisko_cycle(3).family
        sel = sunflower_reduce_rainbow(fam, 3, find_rainbow)
        return "absent" if sel is None else "rainbow"

    checks.append(("reduce-drisko", "absent", reduce_absent))

    def reduce_found() -> str:
        g = empty_graph(12)
        fam = ColoredFamily.from_vertex_lists(
            g, [range(0, 3), range(3, 6), range(6, 9), range(9, 12)]
        )
        sel = sunflower_reduce_rainbow(fam, 2, find_rainbow)
        if sel is None:
            return "absent"
        validate_selection(fam, sel, expect_size=2)
        return "rainbow"

    checks.append(("reduce-disjoint", "rainbow", reduce_found))
    return checks


def _suite_fexact(seed: int) -> list[Check]:
    frozen = [
        ("c4-n2m2", lambda: f_exact(cycle_graph(4), 2, 2).value, 3),
        ("k33-n3m2", lambda: f_exact(complete_multipartite([3, 3]), 3, 2).value, 3),
        ("p4-n2m2", lambda: f_exact(path_graph(4), 2, 2).value, 2),
        ("drisko3-n3m3", lambda: f_exact(drisko_cycle(3).graph, 3, 3).value, 5),
        ("empty3-n2m2", lambda: f_exact(empty_graph(3), 2, 2).value, 2),
    ]
    return [
        (name, str(want), (lambda fn=fn: str(fn())))
        for name, fn, want in frozen
    ]


SUITES: dict[str, Callable[[int], list[Check]]] = {
    "drisko": _suite_drisko,
    "gendrisko": _suite_gendrisko,
    "staircase": _suite_staircase,
    "clawfree": _suite_clawfree,
    "forbidden": _suite_forbidden,
    "chordal": _suite_chordal,
    "dag": _suite_dag,
    "colourable": _suite_colourable,
    "degree12": _suite_degree12,
    "grid": _suite_grid,
    "ramsey": _suite_ramsey,
    "sunflower": _suite_sunflower,
    "fexact-regression": _suite_fexact,
}

SUITE_NAMES = tuple(SUITES)


def run_suite(name: str, seed: int = 0, timings: bool = False) -> list[SuiteRow]:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITE_NAMES)}")
    rows = []
    for instance, expected, thunk in SUITES[name](seed):
        start = time.perf_counter()
        try:
            observed = thunk()
        except Exception as exc:  # a failing row, not a crash of the runner
            observed = f"{type(exc).__name__}: {exc}"
        elapsed = int((time.perf_counter() - start) * 1000) if timings else 0
        rows.append(
            SuiteRow(name, instance, expected, observed, observed == expected, elapsed)
        )
    return rows


def run_suites(names: Sequence[str], seed: int = 0, timings: bool = False) -> list[SuiteRow]:
    rows: list[SuiteRow] = []
    for name in names:
        rows.extend(run_suite(name, seed=seed, timings=timings))
    return rows


def write_suite_csv(rows: Sequence[SuiteRow], fh: TextIO) -> None:
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(["suite", "instance", "expected", "observed", "pass", "millis"])
    for r in rows:
        writer.writerow(
            [r.suite, r.instance, r.expected, r.observed,
             "true" if r.passed else "false", r.millis]
        )
