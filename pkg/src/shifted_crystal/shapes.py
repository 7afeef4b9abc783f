"""Partitions, strict partitions, and (shifted) skew diagrams.

All shapes are stored canonically without trailing zeros.  Cells are
(row, column) pairs, 1-based, row-major.  A shifted diagram indents row i
by i-1 cells, so row i of a strict partition lam occupies columns
i .. lam_i + i - 1.
"""

from __future__ import annotations

from typing import Iterable, Iterator


class Partition:
    """A weakly decreasing sequence of positive integers."""

    __slots__ = ("parts",)

    def __init__(self, parts: Iterable[int] = ()):
        ps = tuple(int(p) for p in parts)
        while ps and ps[-1] == 0:
            ps = ps[:-1]
        for i, p in enumerate(ps):
            if p <= 0:
                raise ValueError(f"parts must be positive, got {ps}")
            if i + 1 < len(ps) and ps[i + 1] > p:
                raise ValueError(f"parts must weakly decrease, got {ps}")
        self.parts = ps

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __eq__(self, other) -> bool:
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self) -> int:
        return hash(self.parts)

    def __lt__(self, other: "Partition") -> bool:
        return self.parts < other.parts

    def __repr__(self) -> str:
        return f"{type(self).__name__}{self.parts}"

    def size(self) -> int:
        return sum(self.parts)

    def length(self) -> int:
        return len(self.parts)

    def part(self, i: int) -> int:
        """The i-th part (1-based), zero beyond the stored length."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def padded(self, n: int) -> tuple[int, ...]:
        """Parts padded with zeros to length n (n >= length required)."""
        if n < len(self.parts):
            raise ValueError(f"cannot pad {self} to length {n}")
        return self.parts + (0,) * (n - len(self.parts))

    def contains(self, inner: "Partition") -> bool:
        """Diagram containment: every cell of inner lies in self."""
        return all(inner.part(i) <= self.part(i) for i in range(1, len(inner) + 1))

    def to_json(self) -> list[int]:
        return list(self.parts)

    @classmethod
    def from_json(cls, data: list[int]) -> "Partition":
        return cls(data)


class StrictPartition(Partition):
    """A strictly decreasing sequence of positive integers."""

    __slots__ = ()

    def __init__(self, parts: Iterable[int] = ()):
        super().__init__(parts)
        for a, b in zip(self.parts, self.parts[1:]):
            if a <= b:
                raise ValueError(f"parts must strictly decrease, got {self.parts}")


def staircase(r: int) -> StrictPartition:
    """The staircase (r, r-1, ..., 1); empty when r = 0."""
    if r < 0:
        raise ValueError("r must be non-negative")
    return StrictPartition(range(r, 0, -1))


def conjugate(mu: Partition) -> Partition:
    """Transpose of the (unshifted) diagram."""
    if not mu.parts:
        return Partition()
    return Partition(sum(1 for p in mu.parts if p >= j) for j in range(1, mu.parts[0] + 1))


def complement_in_rectangle(lam: Partition, r: int) -> Partition:
    """Complement of lam inside the (r+1) x (r+1) square, read upside down.

    The k-th part is r+1 minus the (r+2-k)-th part of lam.
    """
    side = r + 1
    if lam.length() > side or (lam.parts and lam.parts[0] > side):
        raise ValueError(f"{lam} does not fit in ({side}^{side})")
    return Partition(side - lam.part(side - k) for k in range(side))


def shifted_complement(lam: StrictPartition, r: int) -> StrictPartition:
    """Column counts, right to left, of the staircase shifted diagram minus lam.

    Requires the shifted diagram of lam to sit inside that of the staircase
    with r+1 rows.  The result is again strict.
    """
    delta = staircase(r + 1)
    if not delta.contains(lam):
        raise ValueError(f"shifted diagram of {lam} not contained in staircase of {r + 1} rows")
    filled = set(cells(SkewShape(delta, lam, shifted=True)))
    ncols = r + 1
    counts = [sum(1 for (_, j2) in filled if j2 == j) for j in range(ncols, 0, -1)]
    while counts and counts[-1] == 0:
        counts.pop()
    return StrictPartition(counts)


class SkewShape:
    """A skew diagram outer/inner, optionally shifted.

    Shifted shapes require both outer and inner strict.  Containment of the
    inner diagram in the outer one is validated cell-wise.
    """

    __slots__ = ("outer", "inner", "shifted")

    def __init__(self, outer: Partition, inner: Partition = Partition(), shifted: bool = False):
        if shifted:
            if not isinstance(outer, StrictPartition):
                outer = StrictPartition(outer.parts)
            if not isinstance(inner, StrictPartition):
                inner = StrictPartition(inner.parts)
        if not outer.contains(inner):
            raise ValueError(f"inner {inner} not contained in outer {outer}")
        self.outer = outer
        self.inner = inner
        self.shifted = shifted

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SkewShape)
            and self.outer == other.outer
            and self.inner == other.inner
            and self.shifted == other.shifted
        )

    def __hash__(self) -> int:
        return hash((self.outer.parts, self.inner.parts, self.shifted))

    def __repr__(self) -> str:
        tag = "shifted " if self.shifted else ""
        return f"SkewShape({tag}{self.outer.parts}/{self.inner.parts})"

    def size(self) -> int:
        return self.outer.size() - self.inner.size()

    def row_span(self, i: int) -> tuple[int, int]:
        """Column range [lo, hi] of the filled cells of row i; lo > hi if empty."""
        if self.shifted:
            lo = i + self.inner.part(i)
            hi = self.outer.part(i) + i - 1
        else:
            lo = self.inner.part(i) + 1
            hi = self.outer.part(i)
        return lo, hi

    def __contains__(self, cell: tuple[int, int]) -> bool:
        i, j = cell
        if not 1 <= i <= self.outer.length():
            return False
        lo, hi = self.row_span(i)
        return lo <= j <= hi

    def to_json(self) -> dict:
        return {
            "outer": self.outer.to_json(),
            "inner": self.inner.to_json(),
            "shifted": self.shifted,
        }

    @classmethod
    def from_json(cls, data: dict) -> "SkewShape":
        outer = Partition(data["outer"])
        inner = Partition(data.get("inner", []))
        if data.get("shifted", False):
            return cls(StrictPartition(outer.parts), StrictPartition(inner.parts), shifted=True)
        return cls(outer, inner, shifted=False)


def cells(shape: SkewShape) -> list[tuple[int, int]]:
    """All cells of the skew diagram, row-major, left to right."""
    out = []
    for i in range(1, shape.outer.length() + 1):
        lo, hi = shape.row_span(i)
        out.extend((i, j) for j in range(lo, hi + 1))
    return out


def straight_shape(lam: Partition, shifted: bool = False) -> SkewShape:
    """Skew shape with empty inner part."""
    if shifted:
        inner: Partition = StrictPartition()
    else:
        inner = Partition()
    return SkewShape(lam, inner, shifted=shifted)
