"""Regenerate the worked tables and figures from the algorithms and compare with the fixture."""
from __future__ import annotations

import json
from importlib import resources

from .bijections import (omega_forward, omega_inverse, nu_forward, nu_inverse,
                         render_trace_table)
from .enumeration import members
from .ferrers import OddFerrersGraph
from .partitions import Partition, format_partition

FORWARD = {"omega": omega_forward, "nu": nu_forward}
INVERSE = {"omega": omega_inverse, "nu": nu_inverse}
P_FAMILY = {"omega": "P_omega", "nu": "P_nu"}


def expected() -> dict:
    text = resources.files("mocktheta").joinpath("data/tables.json").read_text(encoding="utf-8")
    return json.loads(text)


def trace_rows(family: str, start) -> list[tuple[Partition, int]]:
    _, trace = FORWARD[family](Partition(start))
    return list(trace.steps)


def correspondence(family: str, m: int, n: int) -> list[tuple[Partition, OddFerrersGraph]]:
    return [(lam, FORWARD[family](lam)[0]) for lam in members(P_FAMILY[family], m, n)]


def regenerate(which: int) -> dict:
    spec = expected()[f"table{which}"]
    family = spec["family"]
    if "rows" in spec:
        rows = trace_rows(family, spec["start"])
        return {"family": family, "start": list(spec["start"]),
                "rows": [[list(lam), d] for lam, d in rows]}
    pairs = correspondence(family, spec["m"], spec["n"])
    return {"family": family, "m": spec["m"], "n": spec["n"],
            "pairs": [[list(lam), list(g.shape)] for lam, g in pairs]}


def check_table(which: int) -> list[str]:
    """Mismatches between regenerated content and the fixture; empty when they agree."""
    spec = expected()[f"table{which}"]
    got = regenerate(which)
    problems = []
    if "rows" in spec:
        want = [[list(p), d] for p, d in spec["rows"]]
        if got["rows"] != want:
            problems.append(f"table {which}: trace rows differ: got {got['rows']}, expected {want}")
        return problems
    want = {tuple(map(tuple, pair)) for pair in spec["pairs"]}
    have = {tuple(map(tuple, pair)) for pair in got["pairs"]}
    for pair in sorted(want - have):
        problems.append(f"table {which}: missing pair {format_partition(pair[0])} <-> F{format_partition(pair[1])}")
    for pair in sorted(have - want):
        problems.append(f"table {which}: unexpected pair {format_partition(pair[0])} <-> F{format_partition(pair[1])}")
    inverse = INVERSE[spec["family"]]
    for lam, shape in spec["pairs"]:
        back, _ = inverse(OddFerrersGraph(Partition(shape)))
        if list(back) != list(lam):
            problems.append(f"table {which}: inverse of F{format_partition(shape)} gave {format_partition(back)}")
    return problems


def render_table(which: int) -> str:
    data = regenerate(which)
    family = data["family"]
    if "rows" in data:
        _, trace = FORWARD[family](Partition(data["start"]))
        symbol = "psi^-" if family == "omega" else "rho^-"
        head = f"detailed construction for lambda={format_partition(data['start'])}"
        return head + "\n" + render_trace_table(trace, symbol)
    head = f"correspondence between P_{family}({data['m']},{data['n']}) and B1_{family}({data['m']},{data['n']})"
    lines = [head]
    for lam, shape in data["pairs"]:
        lines.append(f"{format_partition(lam):<18} F{format_partition(shape)}")
    return "\n".join(lines)


def render_figure(which: int) -> str:
    """Text version of the graph-building figures: one grid per step, seed first."""
    spec = expected()[f"figure{which}"]
    graph, trace = FORWARD[spec["family"]](Partition(spec["start"]))
    blocks = [f"constructing {graph} from lambda={format_partition(spec['start'])}"]
    diffs = list(reversed(trace.diffs.values))
    for i, g in enumerate(trace.build):
        label = f"{g}  (size {g.size})" if i == 0 else f"{g}  (size {g.size}, added d={diffs[i - 1]})"
        blocks.append(label + "\n" + g.render())
    return "\n\n".join(blocks)


def check_figure(which: int) -> list[str]:
    spec = expected()[f"figure{which}"]
    graph, _ = FORWARD[spec["family"]](Partition(spec["start"]))
    if list(graph.shape) != spec["image"]:
        return [f"figure {which}: got {graph}, expected F{format_partition(spec['image'])}"]
    return []
