"""Odd Ferrers graphs.

The graph of shape ``lam`` fills the Ferrers boxes with 0 in the top-left
corner, 1 in the rest of the first row and first column, and 2 elsewhere.
Statistics come from closed formulas; :meth:`OddFerrersGraph.grid` builds the
filling explicitly for display and cross-checks.
"""
from __future__ import annotations

from dataclasses import dataclass

from .partitions import DomainError, Partition, conjugate, format_partition


@dataclass(frozen=True)
class OddFerrersGraph:
    shape: Partition

    def __post_init__(self):
        shape = Partition(self.shape)
        if not shape:
            raise DomainError("an odd Ferrers graph needs a nonempty shape")
        if shape[-1] == 0:
            raise DomainError(f"odd Ferrers graph shape has a zero part: {format_partition(shape)}")
        object.__setattr__(self, "shape", shape)

    @property
    def rows(self) -> int:
        return len(self.shape)

    @property
    def cols(self) -> int:
        return self.shape[0]

    @property
    def size(self) -> int:
        return 2 * self.shape.size - self.cols - self.rows

    @property
    def sharp(self) -> int:
        """Number of cells filled with 1."""
        return self.cols + self.rows - 2

    def is_distinct(self) -> bool:
        return self.shape.is_distinct()

    def grid(self) -> list[list[int]]:
        out = []
        for i, length in enumerate(self.shape):
            row = []
            for j in range(length):
                if i == 0 and j == 0:
                    row.append(0)
                elif i == 0 or j == 0:
                    row.append(1)
                else:
                    row.append(2)
            out.append(row)
        return out

    def cell_sum(self) -> int:
        return sum(sum(row) for row in self.grid())

    def render(self) -> str:
        return "\n".join(" ".join(str(c) for c in row) for row in self.grid())

    def __str__(self) -> str:
        return "F" + format_partition(self.shape)


def from_shape(shape) -> OddFerrersGraph:
    return OddFerrersGraph(Partition(shape))


def is_distinct(graph: OddFerrersGraph) -> bool:
    return graph.is_distinct()


def conjugate_graph(graph: OddFerrersGraph) -> OddFerrersGraph:
    return OddFerrersGraph(conjugate(graph.shape))


def single_row(size: int) -> OddFerrersGraph:
    """The one-row graph of the given size, shape (size + 1)."""
    if size < 0:
        raise DomainError("graph size must be nonnegative")
    return OddFerrersGraph(Partition((size + 1,)))
