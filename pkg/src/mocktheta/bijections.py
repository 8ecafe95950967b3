"""The bijections P_omega(m,n) <-> B1_omega(m,n) and P_nu(m,n) <-> B1_nu(m,n).

Forward maps shrink a partition with the destructive operators (psi^- for
omega, rho^- for nu) down to a single part while recording the size drops,
then grow an odd Ferrers graph from the recorded differences.  Inverse maps
peel the graph down to one row and grow the partition back with the
constructive operators.  Forward and inverse share no code.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .ferrers import OddFerrersGraph
from .partitions import (DomainError, Partition, format_partition, is_in_P_nu,
                         is_in_P_omega, phi_merge, phi_minus, phi_minus_e,
                         phi_minus_o, phi_plus, phi_plus_e, phi_plus_o,
                         phi_split, phi_star)

KINDS = ("omega_d", "omega_h", "nu_d", "nu_h")


@dataclass(frozen=True)
class DifferenceSequence:
    values: tuple[int, ...]
    kind: str

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown difference-sequence kind {self.kind!r}")
        object.__setattr__(self, "values", tuple(self.values))

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)


@dataclass(frozen=True)
class BijectionTrace:
    """start -> steps[0] -> ... -> terminal, each step carrying its size drop.

    ``build`` lists the objects produced by the second phase, from the
    single-row / single-part seed up to the final image.
    """
    start: object
    steps: tuple = ()
    terminal: object = None
    diffs: DifferenceSequence = None
    build: tuple = field(default=())

    def to_json(self) -> dict:
        return {
            "start": _obj_json(self.start),
            "steps": [{"step": i + 1, "object": _obj_json(obj), "delta": d}
                      for i, (obj, d) in enumerate(self.steps)],
            "terminal": _obj_json(self.terminal),
            "diffs": {"kind": self.diffs.kind, "values": list(self.diffs.values)},
            "build": [_obj_json(obj) for obj in self.build],
        }


def _obj_json(obj):
    if isinstance(obj, OddFerrersGraph):
        return {"graph": list(obj.shape), "size": obj.size}
    return {"partition": list(obj), "size": obj.size}


def _size(obj) -> int:
    return obj.size


# -- omega operators -------------------------------------------------------------

def _require_omega(lam: Partition) -> None:
    if not lam:
        raise DomainError("empty partition")
    if not is_in_P_omega(lam):
        s = lam[-1]
        if len(lam) >= 2 and lam[-2] == s:
            reason = "smallest part not unique"
        else:
            reason = f"an odd part exceeds 2*{s}+1"
        raise DomainError(f"{format_partition(lam)} is not in P_omega: {reason}")


def _require_nu(lam: Partition) -> None:
    if not lam:
        raise DomainError("empty partition")
    if not is_in_P_nu(lam):
        reason = "parts not distinct" if not lam.is_distinct() else f"an odd part is not below 2*{lam[-1]}"
        raise DomainError(f"{format_partition(lam)} is not in P_nu: {reason}")


def psi_minus_case(lam: Partition) -> str:
    """Which of the three destructive cases applies: 'i', 'ii' or 'iii'."""
    _require_omega(lam)
    if len(lam) < 2:
        raise DomainError("psi_minus needs at least two parts")
    last, prev = lam[-1], lam[-2]
    if last == 0 and prev >= 2:
        return "i"
    if prev == last + 1:
        return "ii"
    if last >= 1 and prev >= last + 2:
        return "iii"
    raise AssertionError(f"no psi_minus case for {lam}")


def psi_minus(lam: Partition) -> tuple[Partition, int]:
    lam = Partition(lam)
    case = psi_minus_case(lam)
    if case == "i":
        out = phi_minus(lam.drop_last())
    elif case == "ii":
        out = phi_minus(phi_merge(lam))
    else:
        out = phi_minus_o(lam)
    return out, lam.size - out.size


def psi_plus(lam: Partition, branch: str) -> Partition:
    """Constructive operators: branch 'two' is phi^+_o, branch 'one' grows the length."""
    lam = Partition(lam)
    _require_omega(lam)
    if branch == "two":
        return phi_plus_o(lam)
    if branch != "one":
        raise ValueError("branch must be 'one' or 'two'")
    if lam[-1] % 2 == 1 and all(p % 2 == 0 for p in lam[:-1]):
        return phi_plus(lam).with_zero()
    return phi_split(phi_plus(lam))


# -- nu operators ------------------------------------------------------------------

def rho_minus_case(lam: Partition) -> str:
    _require_nu(lam)
    if len(lam) < 2:
        raise DomainError("rho_minus needs at least two parts")
    last, prev = lam[-1], lam[-2]
    if last == 0:
        return "i"
    if prev == last + 1:
        return "ii"
    if prev >= last + 2:
        return "iii"
    raise AssertionError(f"no rho_minus case for {lam}")


def rho_minus(lam: Partition) -> tuple[Partition, int]:
    lam = Partition(lam)
    case = rho_minus_case(lam)
    if case == "i":
        out = phi_minus_e(lam.drop_last())
    elif case == "ii":
        out = phi_minus_e(phi_merge(lam))
    else:
        out = phi_minus_o(lam)
    return out, lam.size - out.size


def rho_plus(lam: Partition, branch: str) -> Partition:
    lam = Partition(lam)
    _require_nu(lam)
    if branch == "two":
        return phi_plus_o(lam)
    if branch != "one":
        raise ValueError("branch must be 'one' or 'two'")
    if all(p % 2 == 0 for p in lam):
        return phi_plus_e(lam).with_zero()
    return phi_split(phi_plus_e(lam))


# -- omega bijection -------------------------------------------------------------

def omega_forward(lam) -> tuple[OddFerrersGraph, BijectionTrace]:
    lam = Partition(lam)
    _require_omega(lam)
    steps = []
    cur = lam
    while len(cur) > 1:
        cur, d = psi_minus(cur)
        steps.append((cur, d))
    diffs = tuple(d for _, d in steps)

    shape = [cur.size + 1]
    build = [OddFerrersGraph(Partition(shape))]
    for d in reversed(diffs):
        if d == 1:
            shape.append(1)
        else:
            shape = [p + 1 for p in shape]
        build.append(OddFerrersGraph(Partition(shape)))
    graph = build[-1]
    trace = BijectionTrace(lam, tuple(steps), cur, DifferenceSequence(diffs, "omega_d"), tuple(build))
    return graph, trace


def _require_graph(graph) -> OddFerrersGraph:
    if not isinstance(graph, OddFerrersGraph):
        graph = OddFerrersGraph(Partition(graph))
    return graph


def omega_inverse(graph) -> tuple[Partition, BijectionTrace]:
    graph = _require_graph(graph)
    steps = []
    eta = graph.shape
    while len(eta) > 1:
        ell = len(eta)
        if eta[-1] >= 2:
            eta = phi_star(eta)
            h = 1 + 2 * (ell - 1)  # labels of the deleted last cells
        else:
            eta = Partition(eta[:-1])
            h = 1
        steps.append((OddFerrersGraph(eta), h))
    terminal = OddFerrersGraph(eta)
    hs = tuple(h for _, h in steps)
    if terminal.size + sum(hs) != graph.size:
        raise AssertionError("peeled sizes do not telescope")

    lam = Partition((terminal.size,))
    build = [lam]
    for h in reversed(hs):
        lam = psi_plus(lam, "one" if h == 1 else "two")
        build.append(lam)
    trace = BijectionTrace(graph, tuple(steps), terminal, DifferenceSequence(hs, "omega_h"), tuple(build))
    return lam, trace


# -- nu bijection --------------------------------------------------------------------

def nu_forward(lam) -> tuple[OddFerrersGraph, BijectionTrace]:
    lam = Partition(lam)
    _require_nu(lam)
    steps = []
    cur = lam
    while len(cur) > 1:
        cur, d = rho_minus(cur)
        steps.append((cur, d))
    diffs = tuple(d for _, d in steps)

    shape = [cur.size + 1]
    build = [OddFerrersGraph(Partition(shape))]
    for d in reversed(diffs):
        shape = [p + 1 for p in shape]
        if d % 2 == 0:
            shape.append(1)
        build.append(OddFerrersGraph(Partition(shape)))
    graph = build[-1]
    trace = BijectionTrace(lam, tuple(steps), cur, DifferenceSequence(diffs, "nu_d"), tuple(build))
    return graph, trace


def nu_inverse(graph) -> tuple[Partition, BijectionTrace]:
    graph = _require_graph(graph)
    if not graph.is_distinct():
        raise DomainError(f"{graph} is not distinct, so it is not in B1_nu")
    steps = []
    eta = graph.shape
    while len(eta) > 1:
        before = OddFerrersGraph(eta).size
        parts = [p - 1 for p in eta]
        # a vanished last row drops out of the shape
        eta = Partition(p for p in parts if p > 0)
        after = OddFerrersGraph(eta)
        steps.append((after, before - after.size))
    terminal = OddFerrersGraph(eta)
    hs = tuple(h for _, h in steps)

    lam = Partition((terminal.size,))
    build = [lam]
    for h in reversed(hs):
        lam = rho_plus(lam, "one" if h % 2 == 0 else "two")
        build.append(lam)
    trace = BijectionTrace(graph, tuple(steps), terminal, DifferenceSequence(hs, "nu_h"), tuple(build))
    return lam, trace


# -- claim checks -------------------------------------------------------------------

def check_sequence(diffs: DifferenceSequence) -> bool:
    """Terminal-value and suffix-count laws for a difference sequence."""
    vals = diffs.values
    if any(v <= 0 for v in vals):
        return False
    if not vals:
        return True
    if diffs.kind.startswith("omega"):
        if any(v % 2 == 0 for v in vals) or vals[-1] != 1:
            return False
        counted = lambda v: v == 1  # noqa: E731
    else:
        if vals[-1] != 2:
            return False
        counted = lambda v: v % 2 == 0  # noqa: E731
    for i, v in enumerate(vals[:-1]):
        if v % 2 == 1 and v > 1:
            k = (v - 1) // 2
            if sum(1 for w in vals[i + 1:] if counted(w)) != k:
                return False
    return True


def check_claims(trace: BijectionTrace | DifferenceSequence) -> bool:
    """Claim laws on the differences plus size telescoping for full traces."""
    if isinstance(trace, DifferenceSequence):
        return check_sequence(trace)
    if not check_sequence(trace.diffs):
        return False
    return _size(trace.start) == _size(trace.terminal) + sum(trace.diffs.values)


def render_trace_table(trace: BijectionTrace, symbol: str = "psi^-") -> str:
    """Text table with one row per destructive step, in the layout of the worked examples."""
    lines = [f"{'partitions':<24} size differences"]
    prev = "lambda^0"
    for i, (obj, d) in enumerate(trace.steps, 1):
        label = f"lambda^{i}={format_partition(obj)}"
        lines.append(f"{label:<24} d_{symbol}({prev})={d}")
        prev = f"lambda^{i}"
    return "\n".join(lines)
