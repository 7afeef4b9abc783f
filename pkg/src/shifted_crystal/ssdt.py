"""Semistandard decomposition tableaux on shifted (skew) shapes.

Rows are hook words: a nonempty weakly decreasing prefix followed by a
strictly increasing suffix.  Adjacent rows obey exclusion rules that make
the row word of maximal hook length inside the concatenation with the row
below.  The skew variant states the same rules in diagonal coordinates
T(p, q) = entry of row p on the q-th diagonal (absolute column p + q - 1),
with out-of-shape entries treated as absent.
"""

from __future__ import annotations

from typing import Iterator, Optional, Sequence

from .shapes import Partition, SkewShape, StrictPartition, straight_shape


class DecompTableau:
    """An unprimed filling of a shifted (skew) shape, one row word per row."""

    __slots__ = ("shape", "rows")

    def __init__(self, shape: SkewShape, rows: Sequence[Sequence[int]]):
        if not shape.shifted:
            raise ValueError("decomposition tableaux live on shifted shapes")
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        for i in range(1, shape.outer.length() + 1):
            want = shape.outer.part(i) - shape.inner.part(i)
            got = len(rows[i - 1]) if i <= len(rows) else 0
            if got != want:
                raise ValueError(f"row {i} needs {want} entries, got {got}")
        if len(rows) > shape.outer.length():
            raise ValueError("more rows than the shape has")
        self.shape = shape
        self.rows = rows

    @classmethod
    def from_rows(
        cls,
        outer: StrictPartition,
        rows: Sequence[Sequence[int]],
        inner: StrictPartition = StrictPartition(),
    ) -> "DecompTableau":
        return cls(SkewShape(outer, inner, shifted=True), rows)

    def diagonal_entry(self, p: int, q: int) -> Optional[int]:
        """T(p, q): entry of row p on diagonal q, or None outside the shape."""
        if not 1 <= p <= self.shape.outer.length():
            return None
        if self.shape.inner.part(p) < q <= self.shape.outer.part(p):
            return self.rows[p - 1][q - self.shape.inner.part(p) - 1]
        return None

    def content(self, n: int) -> tuple[int, ...]:
        counts = [0] * n
        for row in self.rows:
            for x in row:
                counts[x - 1] += 1
        return tuple(counts)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, DecompTableau)
            and self.shape == other.shape
            and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return hash((self.shape, self.rows))

    def __repr__(self) -> str:
        body = ",".join(str(list(row)) for row in self.rows)
        return f"DecompTableau({self.shape}: {body})"

    def to_json(self) -> dict:
        return {
            "shape": self.shape.to_json(),
            "rows": [[str(x) for x in row] for row in self.rows],
        }

    @classmethod
    def from_json(cls, data: dict) -> "DecompTableau":
        shape = SkewShape.from_json(data["shape"])
        return cls(shape, [[int(x) for x in row] for row in data["rows"]])


def reading_word(t: DecompTableau) -> tuple[int, ...]:
    """Rows top to bottom, right to left in each row."""
    out: list[int] = []
    for row in t.rows:
        out.extend(reversed(row))
    return tuple(out)


def reverse_reading_word(t: DecompTableau) -> tuple[int, ...]:
    """Rows bottom to top, left to right in each row."""
    out: list[int] = []
    for row in reversed(t.rows):
        out.extend(row)
    return tuple(out)


def hook_split(u: Sequence[int]) -> Optional[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Split into (maximal weakly decreasing prefix, rest), or None if the
    rest is not strictly increasing."""
    if not u:
        raise ValueError("hook_split of empty word")
    k = 1
    while k < len(u) and u[k] <= u[k - 1]:
        k += 1
    down, up = tuple(u[:k]), tuple(u[k:])
    for a, b in zip(up, up[1:]):
        if b <= a:
            return None
    return down, up


def is_hook_word(u: Sequence[int]) -> bool:
    return bool(u) and hook_split(u) is not None


def _pair_violates_123(upper: Sequence[int], lower: Sequence[int]) -> bool:
    """Exclusion form of the adjacent-row test on straight shapes."""
    m = len(lower)
    if any(upper[0] <= lower[i] for i in range(m)):
        return True  # (1)
    for i in range(m):
        for j in range(i + 1, m):
            if lower[i] >= lower[j] >= upper[i + 1]:
                return True  # (2)
    for i in range(m):
        for j in range(i, m):
            if lower[j] < upper[i] < upper[j + 1]:
                return True  # (3)
    return False


def _pair_ok_ab(upper: Sequence[int], lower: Sequence[int]) -> bool:
    """Acceptance form of the same test; equivalent to not _pair_violates_123."""
    m = len(lower)
    for i in range(m):
        for j in range(i, m):
            if upper[i] <= lower[j]:
                if i == 0 or not lower[i - 1] < lower[j]:
                    return False  # (a)
            else:
                if not upper[i] >= upper[j + 1]:
                    return False  # (b)
    return True


def is_ssdt(t: DecompTableau) -> bool:
    """Membership test for straight shifted shapes, run through both the
    exclusion and the acceptance formulation; the two must agree."""
    if t.shape.inner.length() != 0:
        raise ValueError("is_ssdt expects a straight shape; use is_skew_ssdt")
    hooks = all(is_hook_word(row) for row in t.rows)
    if not hooks:
        return False
    by_reject = not any(
        _pair_violates_123(t.rows[k], t.rows[k + 1]) for k in range(len(t.rows) - 1)
    )
    by_accept = all(_pair_ok_ab(t.rows[k], t.rows[k + 1]) for k in range(len(t.rows) - 1))
    if by_reject != by_accept:
        raise AssertionError(f"row-pair formulations disagree on {t!r}")
    return by_accept


def _skew_pair_ok(
    upper: Sequence[int], lower: Sequence[int], mu_k: int, mu_k1: int, lam_k1: int
) -> bool:
    """Diagonal-indexed adjacent-row rules; absent entries are vacuous."""

    def up_at(q: int) -> Optional[int]:
        return upper[q - mu_k - 1] if mu_k < q <= mu_k + len(upper) else None

    def low_at(q: int) -> Optional[int]:
        return lower[q - mu_k1 - 1] if mu_k1 < q <= lam_k1 else None

    for i in range(1, lam_k1 + 1):
        a = up_at(i)
        if a is None:
            continue
        for j in range(i, lam_k1 + 1):
            b = low_at(j)
            if b is None:
                continue
            if a <= b:
                if i == 1:
                    return False  # (S1)
                prev = low_at(i - 1)
                if prev is not None and not prev < b:
                    return False  # (S1)
            else:
                nxt = up_at(j + 1)
                if nxt is not None and not a >= nxt:
                    return False  # (S2)
    return True


def check_skew_shape(shape: SkewShape) -> None:
    """Skew decomposition tableaux are only defined when the inner shape is
    empty or strictly smaller in both first part and length."""
    if not shape.shifted:
        raise ValueError("skew decomposition tableaux need a shifted shape")
    mu, lam = shape.inner, shape.outer
    if mu.length() == 0:
        return
    if not (lam.part(1) > mu.part(1) and lam.length() > mu.length()):
        raise ValueError(
            f"shape {lam.parts}/{mu.parts} violates lam_1 > mu_1 and len(lam) > len(mu)"
        )


def is_skew_ssdt(t: DecompTableau) -> bool:
    check_skew_shape(t.shape)
    # rows of width zero carry no conditions at all
    if not all(is_hook_word(row) for row in t.rows if row):
        return False
    lam, mu = t.shape.outer, t.shape.inner
    for k in range(1, len(t.rows)):
        if not _skew_pair_ok(
            t.rows[k - 1], t.rows[k], mu.part(k), mu.part(k + 1), lam.part(k + 1)
        ):
            return False
    return True


def highest_tableau(lam: StrictPartition, n: int) -> DecompTableau:
    """The content-lam element: nested border strips, value v on the strip
    between the shifted diagrams of the suffixes of lam."""
    ell = lam.length()
    if ell > n:
        raise ValueError(f"{lam} has more than {n} rows")
    rows = []
    for i in range(1, ell + 1):
        row = []
        for j in range(i, lam.part(i) + i):
            t = 1
            while t < ell and t + i <= ell and j <= lam.part(t + i) + i - 1:
                t += 1
            row.append(t)
        rows.append(row)
    return DecompTableau(straight_shape(lam, shifted=True), rows)


def lowest_tableau(lam: StrictPartition, n: int) -> DecompTableau:
    """Row i constant equal to n - i + 1."""
    ell = lam.length()
    if ell > n:
        raise ValueError(f"{lam} has more than {n} rows")
    rows = [[n - i + 1] * lam.part(i) for i in range(1, ell + 1)]
    return DecompTableau(straight_shape(lam, shifted=True), rows)


def enumerate_ssdt(shape: SkewShape, n: int) -> Iterator[DecompTableau]:
    """All (skew) decomposition tableaux with entries <= n, rows built bottom
    up with incremental adjacent-row pruning.  Deterministic order."""
    if n < 1:
        raise ValueError("n must be >= 1")
    check_skew_shape(shape)
    lam, mu = shape.outer, shape.inner
    ell = lam.length()
    if ell == 0:
        yield DecompTableau(shape, [])
        return

    row_lens = [lam.part(i) - mu.part(i) for i in range(1, ell + 1)]
    rows: list[tuple[int, ...]] = [()] * ell

    def row_dfs(k: int) -> Iterator[DecompTableau]:
        """Fill row k (1-based) given rows k+1..ell, then recurse upward."""
        length = row_lens[k - 1]
        mu_k = mu.part(k)
        lower = rows[k] if k < ell else None
        mu_k1 = mu.part(k + 1)
        lam_k1 = lam.part(k + 1)

        def low_at(q: int) -> Optional[int]:
            if lower is None:
                return None
            return lower[q - mu_k1 - 1] if mu_k1 < q <= lam_k1 else None

        cur = [0] * length

        def place(p: int, dec: bool) -> Iterator[DecompTableau]:
            if p == length:
                rows[k - 1] = tuple(cur)
                if k == 1:
                    yield DecompTableau(shape, list(rows))
                else:
                    yield from row_dfs(k - 1)
                return
            prev = cur[p - 1] if p else None
            q = mu_k + p + 1  # diagonal index of this cell
            for x in range(1, n + 1):
                if prev is not None:
                    if dec:
                        ndec = x <= prev
                    else:
                        if x <= prev:
                            continue
                        ndec = False
                else:
                    ndec = True
                if lower is not None:
                    # (S1) with i = q: scan lower entries on diagonals >= q
                    if q <= lam_k1:
                        ok = True
                        prev_low = low_at(q - 1)
                        for j in range(max(q, mu_k1 + 1), lam_k1 + 1):
                            b = low_at(j)
                            if b is not None and x <= b:
                                if q == 1 or (prev_low is not None and not prev_low < b):
                                    ok = False
                                    break
                        if not ok:
                            continue
                    # (S2) with j = q - 1: earlier entries of this row vs cur
                    b = low_at(q - 1)
                    if b is not None and q - 1 <= lam_k1:
                        ok = True
                        for ii in range(0, p):
                            if cur[ii] > b and not cur[ii] >= x:
                                ok = False
                                break
                        if not ok:
                            continue
                cur[p] = x
                yield from place(p + 1, ndec)
            cur[p] = 0

        yield from place(0, True)

    yield from row_dfs(ell)


def star_join(mu: StrictPartition, big: int, t: DecompTableau) -> DecompTableau:
    """Glue the row-constant lowest tableau of shape mu (rank ``big``) onto a
    skew filling of outer/mu, producing a straight filling of the outer shape."""
    lam = t.shape.outer
    if t.shape.inner != StrictPartition(mu.parts):
        raise ValueError("inner shape mismatch")
    rows = []
    for i in range(1, lam.length() + 1):
        prefix = [big - i + 1] * mu.part(i)
        rows.append(prefix + list(t.rows[i - 1]))
    return DecompTableau(straight_shape(lam, shifted=True), rows)


def enumerate_straight_ssdt(lam: StrictPartition, n: int) -> Iterator[DecompTableau]:
    yield from enumerate_ssdt(straight_shape(lam, shifted=True), n)
