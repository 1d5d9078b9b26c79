"""Integer partitions inside a fixed rectangle, with complements.

Parts lists keep their zeros: a partition in an m x n rectangle always has
exactly m parts, because empty rows and columns carry real weight in the
circular tiling sums.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...]
    cols: int

    def __post_init__(self) -> None:
        if self.cols < 0:
            raise ValueError("column bound must be nonnegative")
        prev = self.cols
        for p in self.parts:
            if not 0 <= p <= prev:
                raise ValueError(
                    f"parts must be weakly decreasing within [0, {self.cols}]: "
                    f"{self.parts!r}"
                )
            prev = p

    @property
    def rows(self) -> int:
        return len(self.parts)

    def size(self) -> int:
        """Number of cells."""
        return sum(self.parts)

    def complement(self) -> Partition:
        """Column lengths of the rectangle region not covered, largest first.

        Lives in the transposed rectangle: n parts, each at most m.
        """
        m, n = self.rows, self.cols
        comp = tuple(
            m - sum(1 for p in self.parts if p >= n + 1 - j) for j in range(1, n + 1)
        )
        return Partition(comp, m)

    def text(self) -> str:
        return "[" + ",".join(str(p) for p in self.parts) + "]"


def _part_tuples(length: int, bound: int):
    # ascending lexicographic: all-zeros first, full row of `bound` last
    if length == 0:
        yield ()
        return
    for first in range(bound + 1):
        for rest in _part_tuples(length - 1, first):
            yield (first,) + rest


def enumerate_in_rect(m: int, n: int) -> list[Partition]:
    """All partitions with m parts each at most n, smallest tuple first."""
    if m < 0 or n < 0:
        raise DomainError("rectangle dimensions must be nonnegative")
    return [Partition(parts, n) for parts in _part_tuples(m, n)]
