"""Shared test oracles, kept deliberately independent of the implementations
they check: a recursive tensor-rule crystal, a longest-hook-subword
membership test for decomposition tableaux, and exhaustive word pools."""

from __future__ import annotations

import itertools

import pytest

from shifted_crystal.crystal import weight
from shifted_crystal.words import PrimedLetter


# -- recursive tensor-rule crystal operators (quadratic, oracle only) -------


def eps_phi_tensor(w, n, i):
    if len(w) == 0:
        return 0, 0
    if len(w) == 1:
        x = w[0]
        return (1 if x == i + 1 else 0), (1 if x == i else 0)
    b1, b2 = w[:1], w[1:]
    e1, p1 = eps_phi_tensor(b1, n, i)
    e2, p2 = eps_phi_tensor(b2, n, i)
    wt1, wt2 = weight(b1, n), weight(b2, n)
    h1 = wt1[i - 1] - wt1[i]
    h2 = wt2[i - 1] - wt2[i]
    return max(e1, e2 - h1), max(p1 + h2, p2)


def f_tensor(w, n, i):
    if len(w) == 0:
        return None
    if len(w) == 1:
        return (i + 1,) if w[0] == i else None
    b1, b2 = w[:1], w[1:]
    _, p1 = eps_phi_tensor(b1, n, i)
    e2, _ = eps_phi_tensor(b2, n, i)
    if p1 > e2:
        r = f_tensor(b1, n, i)
        return None if r is None else r + b2
    r = f_tensor(b2, n, i)
    return None if r is None else b1 + r


def e_tensor(w, n, i):
    if len(w) == 0:
        return None
    if len(w) == 1:
        return (i,) if w[0] == i + 1 else None
    b1, b2 = w[:1], w[1:]
    _, p1 = eps_phi_tensor(b1, n, i)
    e2, _ = eps_phi_tensor(b2, n, i)
    if p1 >= e2:
        r = e_tensor(b1, n, i)
        return None if r is None else r + b2
    r = e_tensor(b2, n, i)
    return None if r is None else b1 + r


def f_1bar_tensor(w, n):
    if len(w) == 0:
        return None
    if len(w) == 1:
        return (2,) if w[0] == 1 else None
    b1, b2 = w[:1], w[1:]
    wt2 = weight(b2, n)
    if wt2[0] == 0 and wt2[1] == 0:
        r = f_1bar_tensor(b1, n)
        return None if r is None else r + b2
    r = f_1bar_tensor(b2, n)
    return None if r is None else b1 + r


def e_1bar_tensor(w, n):
    if len(w) == 0:
        return None
    if len(w) == 1:
        return (1,) if w[0] == 2 else None
    b1, b2 = w[:1], w[1:]
    wt2 = weight(b2, n)
    if wt2[0] == 0 and wt2[1] == 0:
        r = e_1bar_tensor(b1, n)
        return None if r is None else r + b2
    r = e_1bar_tensor(b2, n)
    return None if r is None else b1 + r


# -- direct maximal-hook-subword membership ---------------------------------


def longest_hook_subword(u):
    """Longest subsequence that weakly decreases then strictly increases."""
    m = len(u)
    down = [1] * m
    for a in range(m):
        for b in range(a):
            if u[b] >= u[a]:
                down[a] = max(down[a], down[b] + 1)
    up = [1] * m
    for a in range(m - 1, -1, -1):
        for b in range(a + 1, m):
            if u[b] > u[a]:
                up[a] = max(up[a], up[b] + 1)
    best = max(down, default=0)
    for a in range(m):
        for b in range(a + 1, m):
            if u[b] > u[a]:
                best = max(best, down[a] + up[b])
    return best


def is_ssdt_by_definition(rows) -> bool:
    from shifted_crystal.ssdt import hook_split

    for row in rows:
        if not row or hook_split(row) is None:
            return False
    for k in range(len(rows) - 1):
        if longest_hook_subword(tuple(rows[k + 1]) + tuple(rows[k])) != len(rows[k]):
            return False
    return True


# -- word pools --------------------------------------------------------------


def primed_words(max_len: int, max_value: int):
    letters = [PrimedLetter(v, p) for v in range(1, max_value + 1) for p in (False, True)]
    for length in range(max_len + 1):
        yield from itertools.product(letters, repeat=length)


@pytest.fixture(scope="session")
def seed() -> int:
    return 20260809
