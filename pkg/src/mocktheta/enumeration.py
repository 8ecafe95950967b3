"""Brute-force enumeration of the graph and partition families.

Each family yields its members together with a size and the statistics
recorded by the generating functions: ``z_stat`` (always) and ``y_stat``
(trivariate families only).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

from .ferrers import OddFerrersGraph
from .partitions import (Partition, is_in_P_nu, is_in_P_omega, partitions_of,
                         partitions_with_length)
from .qseries import LaurentSeries

WEIGHTS = ("plain", "signed_sharp")


@dataclass(frozen=True)
class FamilySpec:
    name: str
    kind: str  # "graph" or "partition"
    distinct: bool
    z_stat: Callable
    y_stat: Callable | None = None
    description: str = ""


def _rows(g):
    return g.rows - 1


def _cols(g):
    return g.cols - 1


FAMILIES: dict[str, FamilySpec] = {f.name: f for f in [
    FamilySpec("B_nu", "graph", True, _rows, _cols, "distinct graphs; z: rows - 1, y: columns - 1"),
    FamilySpec("B_omega", "graph", False, _rows, _cols, "all graphs; z: rows - 1, y: columns - 1"),
    FamilySpec("B1_nu", "graph", True, _rows, None, "distinct graphs with m+1 rows"),
    FamilySpec("B2_nu", "graph", True, _cols, None, "distinct graphs with m+1 columns"),
    FamilySpec("B3_nu", "graph", True, lambda g: g.cols - g.rows, None, "distinct graphs, columns - rows = m"),
    FamilySpec("B4_nu", "graph", True, lambda g: g.sharp, None, "distinct graphs with m ones"),
    FamilySpec("B1_omega", "graph", False, _rows, None, "graphs with m+1 rows"),
    FamilySpec("B1p_omega", "graph", False, _cols, None, "graphs with m+1 columns"),
    FamilySpec("B2_omega", "graph", False, lambda g: g.rows - g.cols, None, "graphs, rows - columns = m"),
    FamilySpec("B2p_omega", "graph", False, lambda g: g.cols - g.rows, None, "graphs, columns - rows = m"),
    FamilySpec("B3_omega", "graph", False, lambda g: g.sharp, None, "graphs with m ones"),
    FamilySpec("P_omega", "partition", False, lambda lam: len(lam) - 1, None, "P_omega(m, n): length m+1"),
    FamilySpec("P_nu", "partition", True, lambda lam: len(lam) - 1, None, "P_nu(m, n): length m+1"),
]}


def family(name: str) -> FamilySpec:
    try:
        return FAMILIES[name]
    except KeyError:
        raise KeyError(f"unknown family {name!r}; choose from {sorted(FAMILIES)}") from None


@lru_cache(maxsize=None)
def _graphs(n_max: int, distinct: bool) -> tuple[OddFerrersGraph, ...]:
    # a graph of size n has at most n + 1 boxes
    out = []
    for k in range(1, n_max + 2):
        for shape in partitions_of(k):
            if distinct and not shape.is_distinct():
                continue
            g = OddFerrersGraph(shape)
            if g.size <= n_max:
                out.append(g)
    return tuple(sorted(out, key=lambda g: (g.size, g.shape)))


@lru_cache(maxsize=None)
def _partitions(n: int, which: str) -> tuple[Partition, ...]:
    test = is_in_P_omega if which == "P_omega" else is_in_P_nu
    out = []
    for k in range(1, n + 2):
        cands = list(partitions_with_length(n, k))
        cands += [lam.with_zero() for lam in partitions_with_length(n, k - 1)]
        out.extend(lam for lam in cands if lam and test(lam))
    return tuple(sorted(out))


def size_of(member) -> int:
    return member.size


def enumerate_family(name: str, n_max: int, m: int | None = None, n: int | None = None):
    """Members of a family with size <= n_max, optionally restricted to one (m, n) cell."""
    spec = family(name)
    if spec.kind == "graph":
        members = list(_graphs(n_max, spec.distinct))
    else:
        members = [lam for k in range(n_max + 1) for lam in _partitions(k, name)]
    if n is not None:
        members = [x for x in members if x.size == n]
    if m is not None:
        members = [x for x in members if spec.z_stat(x) == m]
    return members


def members(name: str, m: int, n: int, ell: int | None = None):
    """The (m, n) cell, in lexicographic order of shapes / partitions.

    For the trivariate families ``B_nu`` and ``B_omega`` the cell is
    ``(ell, m, n)`` with ell = rows - 1 and m = columns - 1.
    """
    spec = family(name)
    if spec.y_stat is not None:
        out = [x for x in enumerate_family(name, n, n=n)
               if spec.y_stat(x) == m and (ell is None or spec.z_stat(x) == ell)]
    else:
        out = enumerate_family(name, n, m=m, n=n)
    return sorted(out, key=_lex_key)


def _lex_key(x):
    return tuple(x.shape) if isinstance(x, OddFerrersGraph) else tuple(x)


def count(name: str, m: int, n: int, ell: int | None = None) -> int:
    return len(members(name, m, n, ell))


def gf_from_enumeration(name: str, N: int, weight: str = "plain") -> LaurentSeries:
    """Sum of (+-1)^sharp z^stat y^stat q^size over all members of size <= N."""
    if weight not in WEIGHTS:
        raise ValueError(f"weight must be one of {WEIGHTS}")
    spec = family(name)
    if weight == "signed_sharp" and spec.kind != "graph":
        raise ValueError("sign weighting is defined for graph families only")
    triples = []
    for x in enumerate_family(name, N):
        c = (-1) ** x.sharp if weight == "signed_sharp" else 1
        y = spec.y_stat(x) if spec.y_stat is not None else 0
        triples.append((c, y, spec.z_stat(x), x.size))
    return LaurentSeries.from_terms(triples, N)


def cells(name: str, n_max: int) -> dict[tuple[int, int], list]:
    """All nonempty (m, n) cells up to n_max, members sorted lexicographically."""
    spec = family(name)
    out: dict[tuple[int, int], list] = {}
    for x in enumerate_family(name, n_max):
        out.setdefault((spec.z_stat(x), x.size), []).append(x)
    return {k: sorted(v, key=_lex_key) for k, v in sorted(out.items(), key=lambda kv: (kv[0][1], kv[0][0]))}
