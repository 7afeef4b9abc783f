"""Coefficient families for Schur P-expansions and their explicit bijections.

Every coefficient is computable by at least two independent routes:

* shifted Littlewood-Richardson f: lattice-word tableaux, LRS tableaux,
  lowest-weight tensor elements, or polynomial expansion;
* staircase-skew Schur a: content/counting tableaux, crystal decomposition
  of skew semistandard tableaux, or polynomial expansion;
* Schur expansion g of a Schur P-function: primed tableaux, even-lowest
  vectors in the decomposition-tableau crystal, or polynomial expansion;
* skew decomposition character f(lam/mu): mu-lattice tableaux, crystal
  decomposition, or polynomial expansion.

The recording maps decode a lowest-weight word into a growth sequence of
strict partitions: reading the embedded word from its last letter to its
first, the letter x adds a box in row n - x + 1, and the box is filled
according to where the letter sat in its source tableau.
"""

from __future__ import annotations

from typing import Optional, Sequence

from . import crystal, oracle, ssdt, tableaux, words
from .shapes import (
    Partition,
    SkewShape,
    StrictPartition,
    cells,
    complement_in_rectangle,
    shifted_complement,
    staircase,
    straight_shape,
)
from .tableaux import PrimedTableau
from .words import PrimedLetter


# ---------------------------------------------------------------------------
# growth decoding


def _add_box(cur: list[int], row: int) -> int:
    """Add a box in the given 1-based row, keeping the list a strict
    partition; returns the shifted column of the new cell."""
    if row < 1 or row > len(cur):
        raise ValueError(f"cannot add a box in row {row}")
    cur[row - 1] += 1
    if row > 1 and cur[row - 2] <= cur[row - 1]:
        raise ValueError("growth broke strictness: the word is not lowest-compatible")
    return cur[row - 1] + row - 1


def _growth_cells(
    letters: Sequence[int], n: int, start: StrictPartition
) -> tuple[list[tuple[int, int]], StrictPartition]:
    """Process an embedded word from its last letter to its first; letter x
    adds a box in row n - x + 1.  Returns the cells in processing order and
    the final shape."""
    cur = list(start.padded(n))
    out: list[tuple[int, int]] = []
    for x in reversed(letters):
        row = n - x + 1
        col = _add_box(cur, row)
        out.append((row, col))
    return out, StrictPartition(tuple(p for p in cur if p))


def _annotated_ssdt_word(t: ssdt.DecompTableau) -> list[tuple[int, int, int, bool]]:
    """Letters of the reverse reading word with (letter, row, column, is-in-
    increasing-part) annotations."""
    ann: list[tuple[int, int, int, bool]] = []
    for k in range(len(t.rows), 0, -1):
        row = t.rows[k - 1]
        if not row:
            continue
        split = ssdt.hook_split(row)
        if split is None:
            raise ValueError(f"row {k} of {t!r} is not a hook word")
        down, _ = split
        for j, x in enumerate(row, start=1):
            ann.append((x, k, j, j > len(down)))
    return ann


# ---------------------------------------------------------------------------
# shifted Littlewood-Richardson coefficients


def enum_f_tableaux(
    lam: StrictPartition, mu: StrictPartition, nu: StrictPartition
) -> list[PrimedTableau]:
    """Skew primed tableaux of shape lam/mu and pooled content nu whose
    reading word has an unprimed last letter in every value and satisfies
    the pairwise lattice rules."""
    if lam.size() != mu.size() + nu.size() or not lam.contains(mu):
        return []
    shape = SkewShape(lam, mu, shifted=True)
    out = []
    for q in tableaux.enumerate_semistandard(
        shape, max(nu.length(), 1), content=nu.parts, alphabet="both"
    ):
        w = tableaux.reading_word(q)
        if words.rightmost_unprimed(w) and words.has_lattice_property(w):
            out.append(q)
    return out


def enum_lrs_tableaux(
    lam: StrictPartition, mu: StrictPartition, nu: StrictPartition
) -> list[PrimedTableau]:
    """Littlewood-Richardson-Stembridge tableaux: as above but with
    Stembridge's doubled-word lattice condition."""
    if lam.size() != mu.size() + nu.size() or not lam.contains(mu):
        return []
    shape = SkewShape(lam, mu, shifted=True)
    out = []
    for q in tableaux.enumerate_semistandard(
        shape, max(nu.length(), 1), content=nu.parts, alphabet="both"
    ):
        w = tableaux.reading_word(q)
        if words.rightmost_unprimed(w) and words.has_stembridge_lattice_property(w):
            out.append(q)
    return out


def _default_rank(*shapes: Partition) -> int:
    return max(2, *(s.length() for s in shapes))


def lowest_tensor_set(
    lam: StrictPartition,
    mu: StrictPartition,
    nu: StrictPartition,
    n: Optional[int] = None,
) -> list[ssdt.DecompTableau]:
    """All decomposition tableaux T of shape nu with entries <= n such that
    the concatenation of the reverse reading words of T and of the row-
    constant lowest tableau of shape mu is a lowest-weight word of weight
    reversed(lam)."""
    if n is None:
        n = _default_rank(lam, mu, nu)
    if lam.length() > n or mu.length() > n or nu.length() > n:
        raise ValueError("rank too small for the given shapes")
    if lam.size() != mu.size() + nu.size():
        return []
    tail = ssdt.reverse_reading_word(ssdt.lowest_tableau(mu, n))
    target = tuple(reversed(lam.padded(n)))
    out = []
    for t in ssdt.enumerate_straight_ssdt(nu, n):
        word = ssdt.reverse_reading_word(t) + tail
        if crystal.weight(word, n) == target and crystal.is_q_lowest(word, n):
            out.append(t)
    return out


def shifted_lr_coefficient(
    lam: StrictPartition,
    mu: StrictPartition,
    nu: StrictPartition,
    method: str = "all",
    n: Optional[int] = None,
    oracle_n: Optional[int] = None,
) -> int:
    """f^lam_{mu nu}, by one of the four routes or by all of them at once
    (in which case the answers must agree)."""

    def by_enum() -> int:
        return len(enum_f_tableaux(lam, mu, nu))

    def by_lrs() -> int:
        return len(enum_lrs_tableaux(lam, mu, nu))

    def by_crystal() -> int:
        return len(lowest_tensor_set(lam, mu, nu, n))

    def by_oracle() -> int:
        deg = mu.size() + nu.size()
        nn = oracle_n if oracle_n is not None else max(deg, 1)
        if lam.length() > nn:
            return 0
        prod = oracle.multiply(oracle.schurP_poly(mu, nn), oracle.schurP_poly(nu, nn))
        return oracle.expand_in_basis(prod, "schurP").get(lam, 0)

    routes = {"enum": by_enum, "lrs": by_lrs, "crystal": by_crystal, "oracle": by_oracle}
    if method == "all":
        values = {name: fn() for name, fn in routes.items()}
        if len(set(values.values())) != 1:
            raise AssertionError(f"methods disagree for f^{lam}_({mu},{nu}): {values}")
        return next(iter(values.values()))
    if method not in routes:
        raise ValueError(f"unknown method {method!r}")
    return routes[method]()


def shifted_lr_expansion(
    mu: StrictPartition, nu: StrictPartition, method: str = "enum"
) -> dict[StrictPartition, int]:
    """The full map lam -> f^lam_{mu nu} over strict lam of the right size."""
    out: dict[StrictPartition, int] = {}
    for lam in strict_partitions_of(mu.size() + nu.size()):
        c = shifted_lr_coefficient(lam, mu, nu, method=method)
        if c:
            out[lam] = c
    return out


def recording_tableau(
    t: ssdt.DecompTableau,
    lam: StrictPartition,
    mu: StrictPartition,
    nu: StrictPartition,
    n: Optional[int] = None,
) -> PrimedTableau:
    """The skew primed tableau recording the growth of a lowest tensor
    element: the box created by a letter of row k is filled with k' when the
    letter sits in the increasing part of its row, else with k."""
    if n is None:
        n = _default_rank(lam, mu, nu)
    ann = _annotated_ssdt_word(t)
    cells_in_order, final = _growth_cells([a[0] for a in ann], n, mu)
    if final != StrictPartition(lam.parts):
        raise ValueError(f"growth of {t!r} ends at {final}, not {lam}")
    entries: dict[tuple[int, int], PrimedLetter] = {}
    for (x, k, j, in_up), cell in zip(reversed(ann), cells_in_order):
        entries[cell] = PrimedLetter(k, primed=in_up)
    return _tableau_from_entries(SkewShape(lam, mu, shifted=True), entries)


def recording_tableau_standard(
    t: ssdt.DecompTableau,
    lam: StrictPartition,
    mu: StrictPartition,
    nu: StrictPartition,
    n: Optional[int] = None,
) -> PrimedTableau:
    """Same growth, but the m-th box created is filled with the step number m."""
    if n is None:
        n = _default_rank(lam, mu, nu)
    ann = _annotated_ssdt_word(t)
    cells_in_order, final = _growth_cells([a[0] for a in ann], n, mu)
    if final != StrictPartition(lam.parts):
        raise ValueError(f"growth of {t!r} ends at {final}, not {lam}")
    entries = {cell: PrimedLetter(m) for m, cell in enumerate(cells_in_order, start=1)}
    return _tableau_from_entries(SkewShape(lam, mu, shifted=True), entries)


def recording_tableau_inverse(
    q: PrimedTableau,
    lam: StrictPartition,
    mu: StrictPartition,
    nu: StrictPartition,
    n: Optional[int] = None,
) -> ssdt.DecompTableau:
    """Rebuild the tensor element from its recording tableau: the letter
    labeled k_j in the star labeling of the reading word sits in row k,
    column j, and equals n minus the row of its cell plus one."""
    if n is None:
        n = _default_rank(lam, mu, nu)
    w = tableaux.reading_word(q)
    labeled = words.star_labeling(w)
    row_of_cell = [cell[0] for cell, _ in q.cell_entries()]
    # reading word visits cells row by row, right to left
    order: list[int] = []
    p = 0
    for i in range(1, q.shape.outer.length() + 1):
        lo, hi = q.shape.row_span(i)
        width = max(hi - lo + 1, 0)
        order.extend(range(p + width - 1, p - 1, -1))
        p += width
    rows: list[list[int]] = [[0] * nu.part(k) for k in range(1, nu.length() + 1)]
    for (value, label), flat in zip(labeled, order):
        if value > nu.length() or label > nu.part(value):
            raise ValueError("labels do not fit the target shape")
        rows[value - 1][label - 1] = n - row_of_cell[flat] + 1
    return ssdt.DecompTableau(straight_shape(nu, shifted=True), rows)


def recording_tableau_standard_inverse(
    qhat: PrimedTableau,
    lam: StrictPartition,
    mu: StrictPartition,
    nu: StrictPartition,
    n: Optional[int] = None,
) -> ssdt.DecompTableau:
    """Rebuild the tensor element from the standard recording tableau: the
    cell holding m gives the m-th processed letter n - row + 1, and the
    processing order is the reading word of the result."""
    if n is None:
        n = _default_rank(lam, mu, nu)
    byrow: dict[int, int] = {}
    for (i, _), x in qhat.cell_entries():
        if x.primed:
            raise ValueError("standard recording tableaux are unprimed")
        byrow[x.value] = i
    nn = len(byrow)
    if sorted(byrow) != list(range(1, nn + 1)):
        raise ValueError("entries must be exactly 1..N")
    reading = [n - byrow[m] + 1 for m in range(1, nn + 1)]
    rows: list[list[int]] = []
    p = 0
    for k in range(1, nu.length() + 1):
        chunk = reading[p : p + nu.part(k)]
        rows.append(list(reversed(chunk)))
        p += nu.part(k)
    if p != nn:
        raise ValueError("entry count does not match the target shape")
    return ssdt.DecompTableau(straight_shape(nu, shifted=True), rows)


def _tableau_from_entries(
    shape: SkewShape, entries: dict[tuple[int, int], PrimedLetter]
) -> PrimedTableau:
    rows = []
    for i in range(1, shape.outer.length() + 1):
        lo, hi = shape.row_span(i)
        rows.append([entries[(i, j)] for j in range(lo, hi + 1)])
    return PrimedTableau(shape, rows)


# ---------------------------------------------------------------------------
# staircase-skew Schur functions: a-coefficients


def _check_staircase_frame(lam: Partition, r: int) -> None:
    if not lam.contains(Partition(staircase(r).parts)):
        raise ValueError(f"{lam} does not contain the staircase of {r} rows")
    if lam.length() > r + 1 or lam.part(1) > r + 1:
        raise ValueError(f"{lam} does not fit in the ({r + 1})^({r + 1}) square")


def staircase_content(lam: Partition, r: int) -> tuple[int, ...]:
    """Forced letter multiplicities for the counting tableaux: value k
    occurs lam_{r-k+2} - k + 1 times."""
    _check_staircase_frame(lam, r)
    return tuple(lam.part(r - k + 2) - k + 1 for k in range(1, r + 2))


def enum_a_tableaux(lam: Partition, r: int, nu: StrictPartition) -> list[PrimedTableau]:
    """Shifted unprimed tableaux of shape nu over 1..r+1 with the forced
    content whose reverse reading word keeps m_k <= m_{k+1} + 1 at every
    prefix."""
    want = staircase_content(lam, r)
    if sum(want) != nu.size():
        return []
    shape = straight_shape(nu, shifted=True)
    out = []
    for q in tableaux.enumerate_semistandard(shape, r + 1, content=want, alphabet="unprimed"):
        rev = tableaux.reverse_reading_word(q)
        counts = [0] * (r + 2)
        ok = True
        for x in rev:
            v = x.value
            counts[v - 1] += 1
            if v <= r and counts[v - 1] > counts[v] + 1:
                ok = False
                break
        if ok:
            out.append(q)
    return out


def _max_strict_length(size: int) -> int:
    ell = 0
    while (ell + 1) * (ell + 2) // 2 <= size:
        ell += 1
    return ell


def staircase_skew_words(lam: Partition, r: int, n: int) -> list[crystal.CWord]:
    """Reading words of all semistandard fillings of lam minus the staircase
    with entries <= n: the vertex set of the skew crystal."""
    _check_staircase_frame(lam, r)
    shape = SkewShape(lam, Partition(staircase(r).parts))
    out = []
    for q in tableaux.enumerate_semistandard(shape, n, alphabet="unprimed"):
        out.append(tuple(x.value for x in tableaux.reading_word(q)))
    return out


_A_DECOMP_CACHE: dict[tuple[tuple[int, ...], int, int], dict] = {}
_SKEW_DECOMP_CACHE: dict[tuple[tuple[int, ...], tuple[int, ...], int], dict] = {}


def a_crystal_decomposition(lam: Partition, r: int, n: int) -> dict:
    """Component multiset of the staircase-skew crystal, memoized."""
    key = (lam.parts, r, n)
    if key not in _A_DECOMP_CACHE:
        _A_DECOMP_CACHE[key] = dict(crystal.decompose(staircase_skew_words(lam, r, n), n))
    return _A_DECOMP_CACHE[key]


def skew_ssdt_decomposition(lam: StrictPartition, mu: StrictPartition, n: int) -> dict:
    """Component multiset of the skew decomposition-tableau crystal, memoized."""
    key = (lam.parts, mu.parts, n)
    if key not in _SKEW_DECOMP_CACHE:
        _SKEW_DECOMP_CACHE[key] = dict(crystal.decompose(skew_ssdt_words(lam, mu, n), n))
    return _SKEW_DECOMP_CACHE[key]


def a_coefficient(
    lam: Partition,
    r: int,
    nu: StrictPartition,
    method: str = "all",
    n: Optional[int] = None,
    oracle_n: Optional[int] = None,
) -> int:
    """Coefficient of the Schur P-function at nu in the staircase-skew Schur
    function of lam."""
    _check_staircase_frame(lam, r)

    def by_enum() -> int:
        return len(enum_a_tableaux(lam, r, nu))

    def by_crystal() -> int:
        size = lam.size() - staircase(r).size()
        nn = n if n is not None else max(2, lam.length(), _max_strict_length(size))
        if nu.length() > nn:
            return 0
        counts = a_crystal_decomposition(lam, r, nn)
        return counts.get(StrictPartition(nu.parts), 0)

    def by_oracle() -> int:
        size = lam.size() - staircase(r).size()
        nn = oracle_n if oracle_n is not None else max(size, 1)
        if nu.length() > nn:
            return 0
        poly = oracle.staircase_skew_schur_poly(lam, r, nn)
        return oracle.expand_in_basis(poly, "schurP").get(nu, 0)

    routes = {"enum": by_enum, "crystal": by_crystal, "oracle": by_oracle}
    if method == "all":
        values = {name: fn() for name, fn in routes.items()}
        if len(set(values.values())) != 1:
            raise AssertionError(f"methods disagree for a({lam}/delta_{r}, {nu}): {values}")
        return next(iter(values.values()))
    if method not in routes:
        raise ValueError(f"unknown method {method!r}")
    return routes[method]()


def a_expansion(lam: Partition, r: int, method: str = "enum", **kw) -> dict[StrictPartition, int]:
    out: dict[StrictPartition, int] = {}
    size = lam.size() - staircase(r).size()
    for nu in strict_partitions_of(size):
        c = a_coefficient(lam, r, nu, method=method, **kw)
        if c:
            out[nu] = c
    return out


def _annotated_skew_sst_word(q: PrimedTableau) -> list[tuple[int, int]]:
    """(letter value, row index) pairs along the reading word."""
    out = []
    for (i, _), x in q.cell_entries():
        out.append((x.value, i))
    # reading word is right-to-left within rows
    ann: list[tuple[int, int]] = []
    p = 0
    for i in range(1, q.shape.outer.length() + 1):
        lo, hi = q.shape.row_span(i)
        width = max(hi - lo + 1, 0)
        ann.extend(reversed(out[p : p + width]))
        p += width
    return ann


def lowest_staircase_tensors(
    lam: Partition, r: int, nu: StrictPartition, n: int
) -> list[PrimedTableau]:
    """Fillings of lam minus the staircase whose reading word is lowest of
    weight reversed(nu)."""
    _check_staircase_frame(lam, r)
    shape = SkewShape(lam, Partition(staircase(r).parts))
    target = tuple(reversed(nu.padded(n)))
    out = []
    for q in tableaux.enumerate_semistandard(shape, n, alphabet="unprimed"):
        w = tuple(x.value for x in tableaux.reading_word(q))
        if crystal.weight(w, n) == target and crystal.is_q_lowest(w, n):
            out.append(q)
    return out


def staircase_recording_tableau(
    q: PrimedTableau, lam: Partition, r: int, nu: StrictPartition, n: int
) -> PrimedTableau:
    """Counting recording: the box created by a letter from row l is filled
    with r + 2 - l.  Lands among the counting tableaux for (lam, r, nu)."""
    ann = _annotated_skew_sst_word(q)
    cells_in_order, final = _growth_cells([a[0] for a in ann], n, StrictPartition())
    if final != StrictPartition(nu.parts):
        raise ValueError(f"growth ends at {final}, not {nu}")
    entries = {
        cell: PrimedLetter(r + 2 - l)
        for (x, l), cell in zip(reversed(ann), cells_in_order)
    }
    return _tableau_from_entries(straight_shape(nu, shifted=True), entries)


def staircase_recording_standard(
    q: PrimedTableau, lam: Partition, r: int, nu: StrictPartition, n: int
) -> PrimedTableau:
    """Standard recording: the m-th box created is filled with m.  Lands in
    the Ardila-Serrano set for the conjugated complement of lam."""
    ann = _annotated_skew_sst_word(q)
    cells_in_order, final = _growth_cells([a[0] for a in ann], n, StrictPartition())
    if final != StrictPartition(nu.parts):
        raise ValueError(f"growth ends at {final}, not {nu}")
    entries = {cell: PrimedLetter(m) for m, cell in enumerate(cells_in_order, start=1)}
    return _tableau_from_entries(straight_shape(nu, shifted=True), entries)


def staircase_recording_inverse(
    qp: PrimedTableau, lam: Partition, r: int, nu: StrictPartition, n: int
) -> PrimedTableau:
    """Rebuild the skew filling from the standard recording tableau."""
    byrow: dict[int, int] = {}
    for (i, _), x in qp.cell_entries():
        byrow[x.value] = i
    nn = len(byrow)
    if sorted(byrow) != list(range(1, nn + 1)):
        raise ValueError("entries must be exactly 1..N")
    reading = [n - byrow[m] + 1 for m in range(1, nn + 1)]
    shape = SkewShape(lam, Partition(staircase(r).parts))
    cell_list = cells(shape)
    if len(cell_list) != nn:
        raise ValueError("entry count does not match the skew shape")
    entries: dict[tuple[int, int], PrimedLetter] = {}
    p = 0
    for i in range(1, shape.outer.length() + 1):
        lo, hi = shape.row_span(i)
        for j in range(hi, lo - 1, -1):
            entries[(i, j)] = PrimedLetter(reading[p])
            p += 1
    return _tableau_from_entries(shape, entries)


def a_recording_inverse(
    q: PrimedTableau, lam: Partition, r: int, nu: StrictPartition, n: int
) -> PrimedTableau:
    """Rebuild the skew filling from a counting tableau: the i-th value-k
    cell from the southwest corresponds to the i-th entry of row r + 2 - k."""
    by_value: dict[int, list[tuple[int, int]]] = {}
    for (i, j), x in q.cell_entries():
        by_value.setdefault(x.value, []).append((i, j))
    shape = SkewShape(lam, Partition(staircase(r).parts))
    row_entries: dict[int, list[int]] = {}
    for k, cs in by_value.items():
        cs.sort(key=lambda c: c[1])  # southwest to northeast along a horizontal strip
        row_entries[r + 2 - k] = [n - i + 1 for (i, _) in cs]
    rows = []
    for i in range(1, shape.outer.length() + 1):
        lo, hi = shape.row_span(i)
        width = hi - lo + 1
        got = row_entries.get(i, [])
        if len(got) != width:
            raise ValueError(f"row {i} needs {width} entries, got {len(got)}")
        rows.append([PrimedLetter(v) for v in got])
    return PrimedTableau(shape, rows)


# ---------------------------------------------------------------------------
# Ardila-Serrano tableaux: b-coefficients


def staircase_filling(mu: Partition, r: int) -> PrimedTableau:
    """Fill the staircase of r+1 rows minus mu with 1..N, bottom row to top,
    left to right in each row."""
    delta = Partition(staircase(r + 1).parts)
    if not delta.contains(mu):
        raise ValueError(f"{mu} not contained in the staircase of {r + 1} rows")
    shape = SkewShape(delta, mu)
    entries: dict[tuple[int, int], PrimedLetter] = {}
    m = 0
    for i in range(shape.outer.length(), 0, -1):
        lo, hi = shape.row_span(i)
        for j in range(lo, hi + 1):
            m += 1
            entries[(i, j)] = PrimedLetter(m)
    return _tableau_from_entries(shape, entries)


def enum_b_tableaux(mu: Partition, r: int, nu: StrictPartition) -> list[PrimedTableau]:
    """Standard shifted tableaux of shape nu compatible with the staircase
    filling: a label directly above another must land strictly to its right,
    and a label directly right of its predecessor must land strictly below it."""
    filling = staircase_filling(mu, r)
    size = filling.shape.size()
    if nu.size() != size:
        return []
    pos = {x.value: cell for cell, x in filling.cell_entries()}
    above_pairs = []  # (i, j): j sits directly above i
    right_pairs = []  # (i, i+1): i+1 sits directly right of i
    for v, (i, j) in pos.items():
        if (i - 1, j) in filling.shape:
            above_pairs.append((v, filling.entry(i - 1, j).value))
        if (i, j + 1) in filling.shape and pos.get(v + 1) == (i, j + 1):
            right_pairs.append(v)
    out = []
    for q in tableaux.enumerate_standard_shifted(nu):
        where = {x.value: cell for cell, x in q.cell_entries()}
        if all(where[b][1] > where[a][1] for a, b in above_pairs) and all(
            where[v + 1][0] > where[v][0] for v in right_pairs
        ):
            out.append(q)
    return out


def b_coefficient(mu: Partition, r: int, nu: StrictPartition) -> int:
    return len(enum_b_tableaux(mu, r, nu))


# ---------------------------------------------------------------------------
# Schur expansion of a Schur P-function: g-coefficients


def enum_g_tableaux(lam: StrictPartition, mu: Partition) -> list[PrimedTableau]:
    """Unshifted primed tableaux of shape mu, pooled content lam, rightmost
    letter of each value unprimed, reading word passing Stembridge's
    lattice condition."""
    if lam.size() != mu.size():
        return []
    shape = straight_shape(mu)
    out = []
    for q in tableaux.enumerate_semistandard(
        shape, max(lam.length(), 1), content=lam.parts, alphabet="both"
    ):
        w = tableaux.reading_word(q)
        if words.rightmost_unprimed(w) and words.has_stembridge_lattice_property(w):
            out.append(q)
    return out


def g_coefficient(
    lam: StrictPartition,
    mu: Partition,
    method: str = "all",
    n: Optional[int] = None,
    oracle_n: Optional[int] = None,
) -> int:
    """Coefficient of the Schur function at mu in the Schur P-function at lam."""

    def by_enum() -> int:
        return len(enum_g_tableaux(lam, mu))

    def by_crystal() -> int:
        nn = n if n is not None else _default_rank(lam, mu)
        if mu.length() > nn or lam.length() > nn:
            return 0
        pool = [
            ssdt.reverse_reading_word(t) for t in ssdt.enumerate_straight_ssdt(lam, nn)
        ]
        return crystal.decompose_gl(pool, nn).get(Partition(mu.parts), 0)

    def by_oracle() -> int:
        nn = oracle_n if oracle_n is not None else max(lam.size(), 1)
        if lam.length() > nn or mu.length() > nn:
            return 0
        poly = oracle.schurP_poly(lam, nn)
        return oracle.expand_in_basis(poly, "schur").get(Partition(mu.parts), 0)

    routes = {"enum": by_enum, "crystal": by_crystal, "oracle": by_oracle}
    if method == "all":
        values = {name: fn() for name, fn in routes.items()}
        if len(set(values.values())) != 1:
            raise AssertionError(f"methods disagree for g({lam}, {mu}): {values}")
        return next(iter(values.values()))
    if method not in routes:
        raise ValueError(f"unknown method {method!r}")
    return routes[method]()


def g_expansion(lam: StrictPartition, method: str = "enum", **kw) -> dict[Partition, int]:
    out: dict[Partition, int] = {}
    for mu in partitions_of(lam.size()):
        c = g_coefficient(lam, mu, method=method, **kw)
        if c:
            out[mu] = c
    return out


# ---------------------------------------------------------------------------
# skew decomposition tableaux: f^{lam/mu}_nu


def enum_fskew_tableaux(
    lam: StrictPartition, mu: StrictPartition, nu: StrictPartition
) -> list[PrimedTableau]:
    """Straight shifted primed tableaux of shape nu with pooled content
    lam - mu, rightmost letters unprimed, and the mu-relaxed lattice rules."""
    ssdt.check_skew_shape(SkewShape(lam, mu, shifted=True))
    want = tuple(lam.part(k) - mu.part(k) for k in range(1, lam.length() + 1))
    if sum(want) != nu.size():
        return []
    shape = straight_shape(nu, shifted=True)
    out = []
    for q in tableaux.enumerate_semistandard(
        shape, max(lam.length(), 1), content=want, alphabet="both"
    ):
        w = tableaux.reading_word(q)
        if words.rightmost_unprimed(w) and words.has_mu_lattice_property(w, mu):
            out.append(q)
    return out


def skew_ssdt_words(lam: StrictPartition, mu: StrictPartition, n: int) -> list[crystal.CWord]:
    shape = SkewShape(lam, mu, shifted=True)
    return [ssdt.reverse_reading_word(t) for t in ssdt.enumerate_ssdt(shape, n)]


def skew_ssdt_coefficient(
    lam: StrictPartition,
    mu: StrictPartition,
    nu: StrictPartition,
    method: str = "all",
    n: Optional[int] = None,
    oracle_n: Optional[int] = None,
) -> int:
    """Multiplicity of the component at nu in the crystal of skew
    decomposition tableaux of shape lam/mu."""
    ssdt.check_skew_shape(SkewShape(lam, mu, shifted=True))

    def by_enum() -> int:
        return len(enum_fskew_tableaux(lam, mu, nu))

    def by_crystal() -> int:
        size = lam.size() - mu.size()
        nn = n if n is not None else max(2, lam.length(), _max_strict_length(size))
        if nu.length() > nn:
            return 0
        counts = skew_ssdt_decomposition(lam, mu, nn)
        return counts.get(StrictPartition(nu.parts), 0)

    def by_oracle() -> int:
        size = lam.size() - mu.size()
        nn = oracle_n if oracle_n is not None else max(size, 1)
        if nu.length() > nn:
            return 0
        poly = oracle.skew_ssdt_char(SkewShape(lam, mu, shifted=True), nn)
        return oracle.expand_in_basis(poly, "schurP").get(nu, 0)

    routes = {"enum": by_enum, "crystal": by_crystal, "oracle": by_oracle}
    if method == "all":
        values = {name: fn() for name, fn in routes.items()}
        if len(set(values.values())) != 1:
            raise AssertionError(f"methods disagree for f({lam}/{mu}, {nu}): {values}")
        return next(iter(values.values()))
    if method not in routes:
        raise ValueError(f"unknown method {method!r}")
    return routes[method]()


def skew_ssdt_expansion(
    lam: StrictPartition, mu: StrictPartition, method: str = "enum", **kw
) -> dict[StrictPartition, int]:
    out: dict[StrictPartition, int] = {}
    for nu in strict_partitions_of(lam.size() - mu.size()):
        c = skew_ssdt_coefficient(lam, mu, nu, method=method, **kw)
        if c:
            out[nu] = c
    return out


def skew_recording_tableau(
    t: ssdt.DecompTableau,
    lam: StrictPartition,
    mu: StrictPartition,
    nu: StrictPartition,
    n: Optional[int] = None,
) -> PrimedTableau:
    """Recording tableau of a lowest-weight skew decomposition tableau; the
    growth starts from the empty shape and ends at nu."""
    if n is None:
        n = _default_rank(lam, mu, nu)
    ann = _annotated_ssdt_word(t)
    cells_in_order, final = _growth_cells([a[0] for a in ann], n, StrictPartition())
    if final != StrictPartition(nu.parts):
        raise ValueError(f"growth of {t!r} ends at {final}, not {nu}")
    entries: dict[tuple[int, int], PrimedLetter] = {}
    for (x, k, j, in_up), cell in zip(reversed(ann), cells_in_order):
        entries[cell] = PrimedLetter(k, primed=in_up)
    return _tableau_from_entries(straight_shape(nu, shifted=True), entries)


def lowest_skew_ssdt(
    lam: StrictPartition, mu: StrictPartition, nu: StrictPartition, n: int
) -> list[ssdt.DecompTableau]:
    shape = SkewShape(lam, mu, shifted=True)
    target = tuple(reversed(nu.padded(n)))
    out = []
    for t in ssdt.enumerate_ssdt(shape, n):
        w = ssdt.reverse_reading_word(t)
        if crystal.weight(w, n) == target and crystal.is_q_lowest(w, n):
            out.append(t)
    return out


# ---------------------------------------------------------------------------
# partition streams


def partitions_of(size: int, max_part: Optional[int] = None) -> list[Partition]:
    """All partitions of the given size, largest part first."""
    if max_part is None:
        max_part = size
    if size == 0:
        return [Partition()]
    out = []
    for first in range(min(size, max_part), 0, -1):
        for rest in partitions_of(size - first, first):
            out.append(Partition((first,) + rest.parts))
    return out


def strict_partitions_of(size: int, max_part: Optional[int] = None) -> list[StrictPartition]:
    """All strict partitions of the given size, largest part first."""
    if max_part is None:
        max_part = size
    if size == 0:
        return [StrictPartition()]
    out = []
    for first in range(min(size, max_part), 0, -1):
        for rest in strict_partitions_of(size - first, first - 1):
            out.append(StrictPartition((first,) + rest.parts))
    return out


def remark_complement_identity(nu: StrictPartition, lam: StrictPartition, r: int) -> bool:
    """g(nu, lam) equals the a-coefficient of the rectangle complement of
    lam at the shifted complement of nu, for lam inside the staircase."""
    lam_c = complement_in_rectangle(Partition(lam.parts), r)
    nu_c = shifted_complement(nu, r)
    g = g_coefficient(nu, Partition(lam.parts), method="enum")
    a = a_coefficient(lam_c, r, nu_c, method="enum")
    return g == a
