"""Crystal operator calculus on words over {1..n}.

Words w1...wN are read as tensors w1 (x) w2 (x) ... of the rank-n letter
crystal.  The even operators e_i, f_i (1 <= i <= n-1) follow the bracket
(signature) rule: letters i open, letters i+1 close, matched open-close
pairs cancel, f_i raises the leftmost unmatched i and e_i lowers the
rightmost unmatched i+1.  The odd pair e_1bar, f_1bar acts on the last
letter whose strict suffix contains neither 1 nor 2.  Odd operators for
i >= 2 are conjugates of the rank-1 ones by a Weyl group action.

None plays the role of the null element; operators return None when the
action is undefined.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .shapes import Partition, StrictPartition

CWord = tuple[int, ...]


def check_word(w: Sequence[int], n: int) -> CWord:
    if n < 2:
        raise ValueError("rank n must be >= 2")
    w = tuple(int(x) for x in w)
    if any(not 1 <= x <= n for x in w):
        raise ValueError(f"letters must lie in 1..{n}: {w}")
    return w


def weight(w: Sequence[int], n: int) -> tuple[int, ...]:
    counts = [0] * n
    for x in w:
        counts[x - 1] += 1
    return tuple(counts)


def _check_i(i: int, n: int) -> None:
    if not 1 <= i <= n - 1:
        raise ValueError(f"operator index {i} out of range 1..{n - 1}")


def _unmatched_opens(w: Sequence[int], i: int) -> list[int]:
    opens: list[int] = []
    for p, x in enumerate(w):
        if x == i:
            opens.append(p)
        elif x == i + 1 and opens:
            opens.pop()
    return opens


def _unmatched_closes(w: Sequence[int], i: int) -> list[int]:
    closes: list[int] = []
    for p in range(len(w) - 1, -1, -1):
        x = w[p]
        if x == i + 1:
            closes.append(p)
        elif x == i and closes:
            closes.pop()
    return closes


def f_i(w: Sequence[int], n: int, i: int) -> Optional[CWord]:
    """Raise the leftmost unmatched i to i+1, or None."""
    _check_i(i, n)
    opens = _unmatched_opens(w, i)
    if not opens:
        return None
    p = opens[0]
    return tuple(w[:p]) + (i + 1,) + tuple(w[p + 1 :])


def e_i(w: Sequence[int], n: int, i: int) -> Optional[CWord]:
    """Lower the rightmost unmatched i+1 to i, or None."""
    _check_i(i, n)
    closes = _unmatched_closes(w, i)
    if not closes:
        return None
    p = closes[0]
    return tuple(w[:p]) + (i,) + tuple(w[p + 1 :])


def phi_i(w: Sequence[int], n: int, i: int) -> int:
    """String length in the f_i direction (count of unmatched i's)."""
    _check_i(i, n)
    return len(_unmatched_opens(w, i))


def eps_i(w: Sequence[int], n: int, i: int) -> int:
    """String length in the e_i direction (count of unmatched i+1's)."""
    _check_i(i, n)
    return len(_unmatched_closes(w, i))


def _odd_position(w: Sequence[int]) -> Optional[int]:
    """Index of the last letter in {1, 2}; None when absent."""
    for p in range(len(w) - 1, -1, -1):
        if w[p] in (1, 2):
            return p
    return None


def f_1bar(w: Sequence[int], n: int) -> Optional[CWord]:
    p = _odd_position(w)
    if p is None or w[p] != 1:
        return None
    return tuple(w[:p]) + (2,) + tuple(w[p + 1 :])


def e_1bar(w: Sequence[int], n: int) -> Optional[CWord]:
    p = _odd_position(w)
    if p is None or w[p] != 2:
        return None
    return tuple(w[:p]) + (1,) + tuple(w[p + 1 :])


def weyl_reflect(w: Sequence[int], n: int, i: int) -> CWord:
    """Apply f_i or e_i |<wt, h_i>| times; an involution on words."""
    _check_i(i, n)
    wt = weight(w, n)
    d = wt[i - 1] - wt[i]
    cur: Optional[CWord] = tuple(w)
    for _ in range(abs(d)):
        assert cur is not None, "Weyl reflection ran off the string"
        cur = f_i(cur, n, i) if d > 0 else e_i(cur, n, i)
    assert cur is not None
    return cur


def _reduced_word(perm: Sequence[int]) -> list[int]:
    """A reduced word r_{j1}...r_{jm} (as the list [j1..jm]) for the
    permutation given in one-line notation."""
    line = list(perm)
    n = len(line)
    ops: list[int] = []
    pos = {v: p for p, v in enumerate(line)}
    changed = True
    while changed:
        changed = False
        for j in range(1, n):
            if pos[j] > pos[j + 1]:
                # left-multiplying by r_j removes one inversion, so the
                # collected list is already a reduced word in product order
                ops.append(j)
                pos[j], pos[j + 1] = pos[j + 1], pos[j]
                changed = True
    return ops


def apply_weyl(w: Sequence[int], n: int, perm: Sequence[int]) -> CWord:
    """The Weyl group action S_sigma for sigma in one-line notation.

    Satisfies weight(S_sigma b)[sigma(k)] = weight(b)[k].
    """
    if sorted(perm) != list(range(1, n + 1)):
        raise ValueError(f"not a permutation of 1..{n}: {perm}")
    cur = tuple(w)
    for j in reversed(_reduced_word(perm)):
        cur = weyl_reflect(cur, n, j)
    return cur


def _perm_sending_to_front(n: int, i: int) -> tuple[int, ...]:
    """One-line permutation with i -> 1, i+1 -> 2, others order-preserving."""
    line = [0] * n
    line[i - 1] = 1
    line[i] = 2
    nxt = 3
    for k in range(1, n + 1):
        if k not in (i, i + 1):
            line[k - 1] = nxt
            nxt += 1
    return tuple(line)


def _inverse_perm(perm: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(perm)
    for p, v in enumerate(perm):
        inv[v - 1] = p + 1
    return tuple(inv)


def f_ibar(w: Sequence[int], n: int, i: int) -> Optional[CWord]:
    """Conjugated odd lowering operator, 2 <= i <= n-1 (i = 1 is f_1bar)."""
    if i == 1:
        return f_1bar(w, n)
    if not 2 <= i <= n - 1:
        raise ValueError(f"odd index {i} out of range")
    sigma = _perm_sending_to_front(n, i)
    moved = apply_weyl(w, n, sigma)
    hit = f_1bar(moved, n)
    if hit is None:
        return None
    return apply_weyl(hit, n, _inverse_perm(sigma))


def e_ibar(w: Sequence[int], n: int, i: int) -> Optional[CWord]:
    if i == 1:
        return e_1bar(w, n)
    if not 2 <= i <= n - 1:
        raise ValueError(f"odd index {i} out of range")
    sigma = _perm_sending_to_front(n, i)
    moved = apply_weyl(w, n, sigma)
    hit = e_1bar(moved, n)
    if hit is None:
        return None
    return apply_weyl(hit, n, _inverse_perm(sigma))


def is_q_lowest(w: Sequence[int], n: int) -> bool:
    """Suffix criterion: every suffix weight, read reversed, is a strict
    partition (zeros allowed only before the first nonzero coordinate)."""
    counts = [0] * n
    for p in range(len(w) - 1, -1, -1):
        counts[w[p] - 1] += 1
        prev = counts[n - 1]
        for k in range(n - 2, -1, -1):
            c = counts[k]
            if not (c < prev or c == prev == 0):
                return False
            prev = c
    return True


def is_q_highest(w: Sequence[int], n: int) -> bool:
    """Killed by every even raising operator and every odd one."""
    w = tuple(w)
    for i in range(1, n):
        if e_i(w, n, i) is not None:
            return False
    if e_1bar(w, n) is not None:
        return False
    for i in range(2, n):
        if e_ibar(w, n, i) is not None:
            return False
    return True


def is_q_lowest_definitional(w: Sequence[int], n: int) -> bool:
    """Reference test: the longest Weyl element sends lowest to highest."""
    w0 = tuple(range(n, 0, -1))
    return is_q_highest(apply_weyl(w, n, w0), n)


def is_gl_lowest(w: Sequence[int], n: int) -> bool:
    return all(f_i(w, n, i) is None for i in range(1, n))


def psi_shift(w: Sequence[int], n: int, t: int) -> CWord:
    """Add t to every letter; the result lives at rank n + t."""
    if t < 0:
        raise ValueError("shift must be non-negative")
    return tuple(x + t for x in w)


@dataclass(frozen=True)
class CrystalGraph:
    """Vertices sorted lexicographically; edges are (from, to, label) index
    triples with label "1".."n-1" or "1bar"."""

    n: int
    vertices: tuple[CWord, ...]
    edges: tuple[tuple[int, int, str], ...]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "vertices": [[str(x) for x in v] for v in self.vertices],
            "edges": [{"from": a, "to": b, "label": lab} for a, b, lab in self.edges],
        }


def _operator_labels(n: int, operator_set: str) -> list[str]:
    labels = [str(i) for i in range(1, n)]
    if operator_set == "q":
        labels.append("1bar")
    elif operator_set != "gl":
        raise ValueError(f"unknown operator set {operator_set!r}")
    return labels


def _apply_f(w: CWord, n: int, label: str) -> Optional[CWord]:
    if label == "1bar":
        return f_1bar(w, n)
    return f_i(w, n, int(label))


def _apply_e(w: CWord, n: int, label: str) -> Optional[CWord]:
    if label == "1bar":
        return e_1bar(w, n)
    return e_i(w, n, int(label))


def component_closure(start: Sequence[int], n: int, operator_set: str = "q") -> CrystalGraph:
    """Connected component through the chosen raising/lowering operators."""
    labels = _operator_labels(n, operator_set)
    start = check_word(start, n)
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for w in frontier:
            for lab in labels:
                for img in (_apply_f(w, n, lab), _apply_e(w, n, lab)):
                    if img is not None and img not in seen:
                        seen.add(img)
                        nxt.append(img)
        frontier = nxt
    return graph_on(seen, n, operator_set)


def graph_on(words: Iterable[CWord], n: int, operator_set: str = "q") -> CrystalGraph:
    """Labeled f-edge graph on a fixed vertex set (edges leaving the set are
    dropped); deterministic regardless of input order."""
    labels = _operator_labels(n, operator_set)
    vertices = tuple(sorted(set(map(tuple, words))))
    index = {v: k for k, v in enumerate(vertices)}
    edges = []
    for v in vertices:
        for lab in labels:
            img = _apply_f(v, n, lab)
            if img is not None and img in index:
                edges.append((index[v], index[img], lab))
    return CrystalGraph(n, vertices, tuple(sorted(edges)))


def verify_closure(words: Iterable[CWord], n: int, operator_set: str = "q") -> None:
    """Raise if any operator image of the set escapes the set."""
    labels = _operator_labels(n, operator_set)
    pool = set(map(tuple, words))
    for w in pool:
        for lab in labels:
            for img in (_apply_f(w, n, lab), _apply_e(w, n, lab)):
                if img is not None and img not in pool:
                    raise ValueError(
                        f"set not closed: {lab} sends {w} to {img} outside the set"
                    )


def decompose(words: Iterable[CWord], n: int) -> Counter:
    """Multiset of strict partitions lam, one per lowest-weight element of
    weight reversed(lam), after verifying closure under the q-operators."""
    pool = set(map(tuple, words))
    verify_closure(pool, n, "q")
    out: Counter = Counter()
    for w in pool:
        if is_q_lowest(w, n):
            lam = tuple(x for x in reversed(weight(w, n)) if x)
            out[StrictPartition(lam)] += 1
    return out


def decompose_gl(words: Iterable[CWord], n: int) -> Counter:
    """Multiset of partitions mu, one per gl-lowest element of weight
    reversed(mu), after verifying closure under the even operators."""
    pool = set(map(tuple, words))
    verify_closure(pool, n, "gl")
    out: Counter = Counter()
    for w in pool:
        if is_gl_lowest(w, n):
            rev = tuple(reversed(weight(w, n)))
            out[Partition(tuple(x for x in rev if x))] += 1
    return out


def export_dot(graph: CrystalGraph) -> str:
    """Deterministic DOT text: solid even edges, dashed odd edges."""
    lines = ["digraph crystal {"]
    for k, v in enumerate(graph.vertices):
        label = json.dumps([str(x) for x in v])
        lines.append(f"  n{k} [label={json.dumps(label)}];")
    for a, b, lab in graph.edges:
        style = ", style=dashed" if lab == "1bar" else ""
        lines.append(f"  n{a} -> n{b} [label=\"{lab}\"{style}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
