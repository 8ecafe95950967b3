"""Acceptance criteria, one test each; every test records a PASS/FAIL line."""
import time

from conftest import ACCEPTANCE

from mocktheta.bijections import check_claims, nu_forward, omega_forward
from mocktheta.enumeration import enumerate_family, gf_from_enumeration
from mocktheta.ferrers import OddFerrersGraph
from mocktheta.identities import FAMILY_SERIES, registry, verify
from mocktheta.partitions import Partition, partitions_of
from mocktheta.sweep import MAPS, check_graph, check_partition
from mocktheta.tables import check_table, expected

P = Partition


def record(number: int, title: str, ok: bool, detail: str = "") -> None:
    line = f"criterion {number}: {'PASS' if ok else 'FAIL'}  {title}" + (f"  [{detail}]" if detail else "")
    ACCEPTANCE[number] = line
    print(line)
    assert ok, line


def test_1_identity_suite():
    start = time.perf_counter()
    entries = registry()
    failed = [str(r) for r in (verify(e, 30) for e in entries) if not r.passed]
    elapsed = time.perf_counter() - start
    ok = len(entries) >= 22 and not failed and elapsed < 60
    record(1, "identity suite at order 30", ok,
           f"{len(entries) - len(failed)}/{len(entries)} pass in {elapsed:.1f}s" + ("; " + "; ".join(failed) if failed else ""))


def test_2_table1_trace():
    _, trace = omega_forward(P((6, 4, 3, 3, 2)))
    want = [(6, 5, 4, 2), (4, 3, 2, 1), (4, 3, 2), (5, 3), (3, 2), (4,)]
    ok = trace.diffs.values == (1, 7, 1, 1, 3, 1) and [tuple(s[0]) for s in trace.steps] == want
    record(2, "trace of (6,4,3,3,2)", ok, f"d={trace.diffs.values}")


def test_3_figures():
    g3, _ = omega_forward(P((6, 4, 3, 3, 2)))
    g4, trace = nu_forward(P((10, 8, 5, 4, 3)))
    ok = g3.shape == (7, 3, 2, 2, 1) and g4.shape == (9, 5, 4, 3, 1) and trace.diffs.values == (8, 7, 6, 4, 2)
    record(3, "graph constructions", ok, f"{g3}, {g4}, d={trace.diffs.values}")


def _table(number, which, must_contain):
    problems = check_table(which)
    pairs = {(tuple(a), tuple(b)) for a, b in expected()[f"table{which}"]["pairs"]}
    ok = not problems and all(p in pairs for p in must_contain)
    record(number, f"correspondence table with {len(pairs)} pairs", ok, "; ".join(problems[:3]))


def test_4_table2():
    _table(4, 2, [((12, 2, 1, 0), (11, 2, 1, 1)), ((4, 4, 4, 3), (13, 1, 1, 1))])


def test_5_table4():
    _table(5, 4, [((18, 6, 4, 2, 0), (15, 4, 3, 2, 1)), ((8, 7, 6, 5, 4), (13, 5, 3, 2, 1))])


def _round_trip(max_n):
    violations, traces, objects = [], [], 0
    for family in MAPS:
        forward, _, pfam, bfam = MAPS[family]
        for lam in enumerate_family(pfam, max_n):
            objects += 1
            problem = check_partition(family, lam)
            if problem:
                violations.append(problem)
            traces.append(forward(lam)[1])
        for g in enumerate_family(bfam, max_n):
            objects += 1
            problem = check_graph(family, g)
            if problem:
                violations.append(problem)
    return objects, violations, traces


_CACHE = {}


def _sweep():
    if "sweep" not in _CACHE:
        start = time.perf_counter()
        result = _round_trip(25)
        _CACHE["sweep"] = result + (time.perf_counter() - start,)
    return _CACHE["sweep"]


def test_6_round_trip():
    objects, violations, _, elapsed = _sweep()
    ok = not violations and elapsed < 300
    record(6, "round trip for sizes up to 25", ok, f"{objects} objects, {len(violations)} violations, {elapsed:.1f}s")


def test_7_oracle_equivalence():
    bad = []
    for (name, weight), builders in sorted(FAMILY_SERIES.items()):
        brute = gf_from_enumeration(name, 20, weight)
        bad += [f"{name}/{weight}/{b.__name__}" for b in builders if b(20) != brute]
    record(7, "enumeration equals closed forms through q^20", not bad,
           f"{len(FAMILY_SERIES)} family/weight pairs" + ("; " + ", ".join(bad) if bad else ""))


def test_8_claims():
    _, _, traces, _ = _sweep()
    failing = [t.start for t in traces if not check_claims(t)]
    omega_end = all(t.diffs.values[-1] == 1 for t in traces if t.diffs.kind == "omega_d" and t.steps)
    nu_end = all(t.diffs.values[-1] == 2 for t in traces if t.diffs.kind == "nu_d" and t.steps)
    record(8, "claim laws on every round-trip trace", not failing and omega_end and nu_end,
           f"{len(traces)} traces, {len(failing)} violations")


def test_9_size_formula():
    example = OddFerrersGraph(P((6, 6, 3, 2))).size
    mismatches = sum(1 for n in range(1, 31) for lam in partitions_of(n)
                     if OddFerrersGraph(lam).size != OddFerrersGraph(lam).cell_sum())
    record(9, "graph size formula", example == 24 and mismatches == 0,
           f"size of F(6,6,3,2) = {example}; {mismatches} mismatches up to 30")
