"""Exhaustive round-trip and claim sweeps over P_omega / P_nu and their graph images."""
from __future__ import annotations

import random
from dataclasses import dataclass, field

from .bijections import check_claims, nu_forward, nu_inverse, omega_forward, omega_inverse
from .enumeration import enumerate_family
from .partitions import DomainError, format_partition

MAPS = {
    "omega": (omega_forward, omega_inverse, "P_omega", "B1_omega"),
    "nu": (nu_forward, nu_inverse, "P_nu", "B1_nu"),
}
MAX_N = 40


@dataclass
class SweepResult:
    family: str
    max_n: int
    counts: dict = field(default_factory=dict)  # (m, n) -> number of partitions checked
    graphs_checked: int = 0
    sampled: int = 0
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "max_n": self.max_n,
            "partitions_checked": sum(self.counts.values()),
            "graphs_checked": self.graphs_checked,
            "sampled": self.sampled,
            "counts": [{"m": m, "n": n, "count": c} for (m, n), c in sorted(self.counts.items(), key=lambda kv: (kv[0][1], kv[0][0]))],
            "violations": self.violations,
            "pass": self.ok,
        }


def check_partition(family: str, lam) -> str | None:
    forward, inverse, _, _ = MAPS[family]
    graph, trace = forward(lam)
    if graph.rows != len(lam) or graph.size != lam.size:
        return f"{format_partition(lam)}: image {graph} has the wrong rows or size"
    if not check_claims(trace):
        return f"{format_partition(lam)}: claims fail for d={trace.diffs.values}"
    back, _ = inverse(graph)
    if back != lam:
        return f"{format_partition(lam)}: inverse(forward) gave {format_partition(back)}"
    return None


def check_graph(family: str, graph) -> str | None:
    forward, inverse, _, _ = MAPS[family]
    lam, _ = inverse(graph)
    again, trace = forward(lam)
    if again != graph:
        return f"{graph}: forward(inverse) gave {again}"
    if not check_claims(trace):
        return f"{graph}: claims fail for d={trace.diffs.values}"
    return None


def sweep(family: str, max_n: int, seed: int | None = None, samples: int = 0) -> SweepResult:
    """Every partition and every graph of size <= max_n, plus optional random extras of larger size."""
    if family not in MAPS:
        raise DomainError(f"unknown family {family!r}; choose omega or nu")
    if not 0 <= max_n <= MAX_N:
        raise DomainError(f"max_n must lie in [0, {MAX_N}]")
    _, _, pfam, bfam = MAPS[family]
    result = SweepResult(family, max_n)
    for lam in enumerate_family(pfam, max_n):
        key = (len(lam) - 1, lam.size)
        result.counts[key] = result.counts.get(key, 0) + 1
        problem = check_partition(family, lam)
        if problem:
            result.violations.append(problem)
    for g in enumerate_family(bfam, max_n):
        result.graphs_checked += 1
        problem = check_graph(family, g)
        if problem:
            result.violations.append(problem)
    if samples and max_n < MAX_N:
        rng = random.Random(seed)
        for _ in range(samples):
            n = rng.randint(max_n + 1, MAX_N)
            pool = enumerate_family(pfam, n, n=n)
            if not pool:
                continue
            result.sampled += 1
            problem = check_partition(family, rng.choice(pool))
            if problem:
                result.violations.append(problem)
    return result
