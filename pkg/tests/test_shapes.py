import itertools

import pytest
from hypothesis import given, strategies as st

from shifted_crystal.shapes import (
    Partition,
    SkewShape,
    StrictPartition,
    cells,
    complement_in_rectangle,
    conjugate,
    shifted_complement,
    staircase,
    straight_shape,
)


def partitions_up_to(size):
    for total in range(size + 1):
        def rec(rest, cap):
            if rest == 0:
                yield ()
                return
            for first in range(min(rest, cap), 0, -1):
                for tail in rec(rest - first, first):
                    yield (first,) + tail
        yield from (Partition(p) for p in rec(total, total))


def test_partition_validation():
    assert Partition((3, 1, 0, 0)).parts == (3, 1)
    with pytest.raises(ValueError):
        Partition((1, 3))
    with pytest.raises(ValueError):
        Partition((2, -1))
    with pytest.raises(ValueError):
        StrictPartition((2, 2))
    assert StrictPartition().parts == ()


def test_staircase():
    assert staircase(0).parts == ()
    assert staircase(1).parts == (1,)
    assert staircase(4).parts == (4, 3, 2, 1)
    with pytest.raises(ValueError):
        staircase(-1)


def test_complement_in_rectangle():
    lam = Partition((5, 4, 4, 4, 2))
    assert complement_in_rectangle(lam, 4).parts == (3, 1, 1, 1)
    assert lam.size() + complement_in_rectangle(lam, 4).size() == 25
    assert complement_in_rectangle(Partition((3, 3, 3)), 2).parts == ()
    assert complement_in_rectangle(Partition(), 2).parts == (3, 3, 3)
    with pytest.raises(ValueError):
        complement_in_rectangle(Partition((6,)), 4)


def test_complement_is_involution():
    for r in range(4):
        side = r + 1
        for parts in itertools.product(*[range(side + 1)] * side):
            if all(parts[i] >= parts[i + 1] for i in range(side - 1)):
                lam = Partition(tuple(p for p in parts if p))
                assert complement_in_rectangle(complement_in_rectangle(lam, r), r) == lam


def test_shifted_complement():
    assert shifted_complement(StrictPartition(), 0).parts == (1,)
    assert shifted_complement(staircase(3), 2).parts == ()
    assert shifted_complement(StrictPartition((2,)), 1).parts == (1,)
    with pytest.raises(ValueError):
        shifted_complement(StrictPartition((3,)), 1)


def test_shifted_complement_size():
    for r in range(4):
        delta = staircase(r + 1)
        for total in range(delta.size() + 1):
            for lam in (p for p in partitions_up_to(delta.size()) if p.size() == total):
                try:
                    lam_s = StrictPartition(lam.parts)
                except ValueError:
                    continue
                if not delta.contains(lam_s):
                    continue
                comp = shifted_complement(lam_s, r)
                assert lam_s.size() + comp.size() == delta.size()


def test_conjugate_examples():
    assert conjugate(Partition((3, 1))).parts == (2, 1, 1)
    assert conjugate(Partition()).parts == ()
    assert conjugate(Partition((4, 4, 2))).parts == (3, 3, 2, 2)


def test_conjugate_cellset_oracle():
    for mu in partitions_up_to(8):
        cellset = {(i + 1, j + 1) for i, p in enumerate(mu.parts) for j in range(p)}
        transposed = {(j, i) for (i, j) in cellset}
        conj = conjugate(mu)
        expect = {(i + 1, j + 1) for i, p in enumerate(conj.parts) for j in range(p)}
        assert transposed == expect


@given(st.lists(st.integers(min_value=1, max_value=8), min_size=0, max_size=6))
def test_conjugate_involution(parts):
    mu = Partition(sorted(parts, reverse=True))
    assert conjugate(conjugate(mu)) == mu


def test_cells_examples():
    shifted = SkewShape(StrictPartition((3, 1)), StrictPartition(), shifted=True)
    assert cells(shifted) == [(1, 1), (1, 2), (1, 3), (2, 2)]
    unshifted = SkewShape(Partition((2,)), Partition((1,)))
    assert cells(unshifted) == [(1, 2)]
    skew = SkewShape(StrictPartition((4, 3, 1)), StrictPartition((3, 1)), shifted=True)
    assert cells(skew) == [(1, 4), (2, 3), (2, 4), (3, 3)]


def test_cells_staircase_profile():
    for r in range(1, 5):
        shape = straight_shape(staircase(r), shifted=True)
        cs = cells(shape)
        assert len(cs) == staircase(r).size()
        assert len(set(cs)) == len(cs)
        # one cell per (row, col) with columns i..r in row i
        for i in range(1, r + 1):
            assert [(i, j) for j in range(i, r + 1)] == [c for c in cs if c[0] == i]


def test_skew_shape_validation():
    with pytest.raises(ValueError):
        SkewShape(Partition((2,)), Partition((3,)))
    shape = SkewShape(StrictPartition((4, 3, 1)), StrictPartition((3, 1)), shifted=True)
    assert shape.size() == 4
    assert (1, 4) in shape and (1, 3) not in shape


def test_json_round_trip():
    lam = Partition((4, 3, 1))
    assert Partition.from_json(lam.to_json()) == lam
    shape = SkewShape(StrictPartition((4, 3, 1)), StrictPartition((3, 1)), shifted=True)
    assert SkewShape.from_json(shape.to_json()) == shape
    assert shape.to_json() == {"outer": [4, 3, 1], "inner": [3, 1], "shifted": True}
