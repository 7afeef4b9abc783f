"""Primed-letter fillings of (shifted) skew shapes and their enumeration.

``T_{i,j}`` conventions: rows index filled cells only, so the j-th entry of
row i is the j-th cell after the inner shape.  Reading words go row by row,
top to bottom, right to left within a row.
"""

from __future__ import annotations

from typing import Iterator, Optional, Sequence

from .shapes import Partition, SkewShape, cells
from .words import PrimedLetter, Word, parse_letter


class PrimedTableau:
    """A total filling of a skew shape by primed letters."""

    __slots__ = ("shape", "rows")

    def __init__(self, shape: SkewShape, rows: Sequence[Sequence[PrimedLetter]]):
        rows = tuple(tuple(r) for r in rows)
        for i in range(1, shape.outer.length() + 1):
            lo, hi = shape.row_span(i)
            want = max(hi - lo + 1, 0)
            got = len(rows[i - 1]) if i <= len(rows) else 0
            if got != want:
                raise ValueError(f"row {i} needs {want} entries, got {got}")
        if len(rows) > shape.outer.length():
            raise ValueError("more rows than the shape has")
        self.shape = shape
        self.rows = rows

    @classmethod
    def from_rows(cls, shape: SkewShape, rows: Sequence[Sequence[str]]) -> "PrimedTableau":
        return cls(shape, [[parse_letter(tok) for tok in row] for row in rows])

    def entry(self, i: int, j: int) -> PrimedLetter:
        """Entry at diagram cell (i, j)."""
        lo, hi = self.shape.row_span(i)
        if not lo <= j <= hi:
            raise KeyError((i, j))
        return self.rows[i - 1][j - lo]

    def cell_entries(self) -> Iterator[tuple[tuple[int, int], PrimedLetter]]:
        for i, row in enumerate(self.rows, start=1):
            lo, _ = self.shape.row_span(i)
            for off, x in enumerate(row):
                yield (i, lo + off), x

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PrimedTableau)
            and self.shape == other.shape
            and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return hash((self.shape, self.rows))

    def __repr__(self) -> str:
        body = ",".join("[" + " ".join(str(x) for x in row) + "]" for row in self.rows)
        return f"PrimedTableau({self.shape}: {body})"

    def to_json(self) -> dict:
        return {
            "shape": self.shape.to_json(),
            "rows": [[str(x) for x in row] for row in self.rows],
        }

    @classmethod
    def from_json(cls, data: dict) -> "PrimedTableau":
        return cls.from_rows(SkewShape.from_json(data["shape"]), data["rows"])


def reading_word(t: PrimedTableau) -> Word:
    """Rows top to bottom, right to left in each row."""
    out: list[PrimedLetter] = []
    for row in t.rows:
        out.extend(reversed(row))
    return tuple(out)


def reverse_reading_word(t: PrimedTableau) -> Word:
    return tuple(reversed(reading_word(t)))


def is_semistandard(t: PrimedTableau) -> bool:
    """Rows and columns weakly increase; unprimed strictly increase down
    columns, primed strictly increase along rows."""
    shape = t.shape
    for i in range(1, shape.outer.length() + 1):
        lo, hi = shape.row_span(i)
        for j in range(lo, hi + 1):
            x = t.entry(i, j)
            if j > lo:
                left = t.entry(i, j - 1)
                if x.sort_key < left.sort_key:
                    return False
                if x.sort_key == left.sort_key and x.primed:
                    return False
            if i > 1 and (i - 1, j) in shape:
                up = t.entry(i - 1, j)
                if x.sort_key < up.sort_key:
                    return False
                if x.sort_key == up.sort_key and not x.primed:
                    return False
    return True


def enumerate_semistandard(
    shape: SkewShape,
    max_value: int,
    content: Optional[Sequence[int]] = None,
    alphabet: str = "both",
    diagonal_unprimed: bool = False,
) -> Iterator[PrimedTableau]:
    """All semistandard fillings with values <= max_value, each exactly once,
    in row-major lexicographic order of the letter sort keys.

    ``content`` restricts pooled counts: c_k(T) + c_{k'}(T) = content[k-1].
    ``diagonal_unprimed`` additionally forbids primed letters on the main
    diagonal of a shifted shape.
    """
    if max_value < 1:
        raise ValueError("max_value must be >= 1")
    if alphabet not in ("both", "primed", "unprimed"):
        raise ValueError(f"unknown alphabet {alphabet!r}")

    cell_list = cells(shape)
    ncells = len(cell_list)
    want: Optional[list[int]] = None
    if content is not None:
        want = [0] * max_value
        for k, c in enumerate(content):
            if c < 0:
                return
            if c > 0:
                if k >= max_value:
                    return
                want[k] = c
        if sum(want) != ncells:
            return
    if ncells == 0:
        yield PrimedTableau(shape, [() for _ in range(shape.outer.length())])
        return

    pool = []
    for v in range(1, max_value + 1):
        if alphabet in ("both", "primed"):
            pool.append(PrimedLetter(v, True))
        if alphabet in ("both", "unprimed"):
            pool.append(PrimedLetter(v, False))
    pool.sort(key=lambda x: x.sort_key)

    # flat cell metadata: index of left / upper neighbour, diagonal flag
    index = {cell: p for p, cell in enumerate(cell_list)}
    left_of = [index.get((i, j - 1), -1) for (i, j) in cell_list]
    up_of = [index.get((i - 1, j), -1) for (i, j) in cell_list]
    on_diag = [shape.shifted and i == j for (i, j) in cell_list]

    filled: list[PrimedLetter] = [None] * ncells  # type: ignore[list-item]
    keys = [0] * ncells
    remaining = want

    def build() -> PrimedTableau:
        rows: list[list[PrimedLetter]] = []
        p = 0
        for i in range(1, shape.outer.length() + 1):
            lo, hi = shape.row_span(i)
            width = max(hi - lo + 1, 0)
            rows.append(filled[p : p + width])
            p += width
        return PrimedTableau(shape, rows)

    def dfs(p: int) -> Iterator[PrimedTableau]:
        if p == ncells:
            yield build()
            return
        li, ui = left_of[p], up_of[p]
        lk = keys[li] if li >= 0 else 0
        lp = filled[li].primed if li >= 0 else False
        uk = keys[ui] if ui >= 0 else 0
        diag_block = diagonal_unprimed and on_diag[p]
        for x in pool:
            if diag_block and x.primed:
                continue
            k = x.sort_key
            if li >= 0 and (k < lk or (k == lk and x.primed)):
                continue
            if ui >= 0 and (k < uk or (k == uk and not x.primed)):
                continue
            if remaining is not None:
                if remaining[x.value - 1] == 0:
                    continue
                remaining[x.value - 1] -= 1
            filled[p] = x
            keys[p] = k
            yield from dfs(p + 1)
            if remaining is not None:
                remaining[x.value - 1] += 1
        filled[p] = None  # type: ignore[assignment]
        keys[p] = 0

    yield from dfs(0)


def enumerate_standard_shifted(nu: Partition) -> Iterator[PrimedTableau]:
    """Standard shifted tableaux of straight shape nu: unprimed 1..N, each once."""
    from .shapes import straight_shape

    n = nu.size()
    shape = straight_shape(nu, shifted=True)
    if n == 0:
        yield from enumerate_semistandard(shape, 1, content=(0,), alphabet="unprimed")
        return
    yield from enumerate_semistandard(shape, n, content=(1,) * n, alphabet="unprimed")
