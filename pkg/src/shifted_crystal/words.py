"""Words over the primed alphabet 1' < 1 < 2' < 2 < ... and lattice predicates.

The star labeling attaches subscripts to all letters of a common value k:
unprimed k's are numbered 1..c_k left to right, then primed k's continue
c_k+1..m_k right to left, and primes are erased.  Three lattice-style
predicates act on the labeled word:

* ``has_lattice_property`` -- pairwise exclusion rules (L1)-(L3) below;
* ``has_stembridge_lattice_property`` -- Stembridge's count condition on the
  doubled word w . w-hat-reversed;
* ``has_mu_lattice_property`` -- the (L1)-(L3) rules relaxed by the row gaps
  alpha_k = mu_k - mu_{k+1} of a strict partition mu.

On words whose pooled content is a strict partition and whose rightmost
letter of every value is unprimed, the first two predicates agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .shapes import StrictPartition


@dataclass(frozen=True)
class PrimedLetter:
    """A letter k or k'; primed k' sorts just below unprimed k."""

    value: int
    primed: bool = False

    def __post_init__(self):
        if self.value < 1:
            raise ValueError("letter value must be positive")

    @property
    def sort_key(self) -> int:
        return 2 * self.value - (1 if self.primed else 0)

    def __lt__(self, other: "PrimedLetter") -> bool:
        return self.sort_key < other.sort_key

    def __le__(self, other: "PrimedLetter") -> bool:
        return self.sort_key <= other.sort_key

    def __str__(self) -> str:
        return f"{self.value}'" if self.primed else str(self.value)


Word = tuple[PrimedLetter, ...]


def letter(value: int, primed: bool = False) -> PrimedLetter:
    return PrimedLetter(value, primed)


def parse_letter(text: str) -> PrimedLetter:
    """Parse "3", "3'" or "3p"."""
    text = text.strip()
    primed = text.endswith(("'", "p"))
    if primed:
        text = text[:-1]
    return PrimedLetter(int(text), primed)


def parse_word(text: str) -> Word:
    """Parse a whitespace-separated word such as "2 1' 1"."""
    return tuple(parse_letter(tok) for tok in text.split())


def word_str(w: Sequence[PrimedLetter]) -> str:
    return " ".join(str(x) for x in w)


def word_to_json(w: Sequence[PrimedLetter]) -> list[str]:
    return [str(x) for x in w]


def word_from_json(data: Iterable[str]) -> Word:
    return tuple(parse_letter(tok) for tok in data)


def content(w: Sequence[PrimedLetter]) -> tuple[int, ...]:
    """Pooled counts m_k = (number of k's) + (number of k' 's), no trailing zeros."""
    if not w:
        return ()
    top = max(x.value for x in w)
    counts = [0] * top
    for x in w:
        counts[x.value - 1] += 1
    while counts and counts[-1] == 0:
        counts.pop()
    return tuple(counts)


def rightmost_unprimed(w: Sequence[PrimedLetter]) -> bool:
    """True iff for every value present, its last occurrence is unprimed."""
    last: dict[int, bool] = {}
    for x in w:
        last[x.value] = x.primed
    return not any(last.values())


def star_labeling(w: Sequence[PrimedLetter]) -> tuple[tuple[int, int], ...]:
    """The labeled word w*: pairs (value, label) with primes erased.

    For each value k, unprimed occurrences receive labels 1..c_k left to
    right, then primed ones receive c_k+1..m_k right to left.
    """
    unprimed_seen: dict[int, int] = {}
    labels: list[int] = [0] * len(w)
    for p, x in enumerate(w):
        if not x.primed:
            unprimed_seen[x.value] = unprimed_seen.get(x.value, 0) + 1
            labels[p] = unprimed_seen[x.value]
    primed_next = dict(unprimed_seen)
    for p in range(len(w) - 1, -1, -1):
        x = w[p]
        if x.primed:
            primed_next[x.value] = primed_next.get(x.value, 0) + 1
            labels[p] = primed_next[x.value]
    return tuple((x.value, labels[p]) for p, x in enumerate(w))


def _lattice_on_labels(
    labeled: Sequence[tuple[int, int]],
    alpha: Sequence[int],
    exempt_below: int,
) -> bool:
    """Shared engine for the plain and mu-relaxed lattice predicates.

    ``alpha[k-1]`` is the slack for value k (0 beyond the given prefix) and
    values k <= exempt_below are exempt from the leading-letter rule (L1).

    (L1) a letter of value k+1 may only appear after the label-1 letter of
         value k (k > exempt_below);
    (L2) between (k+1)_i and a later k_{i+1-alpha_k} (i >= alpha_k, so that
         the companion label is at least 1) no (k+1)_j with j > i may occur;
         when the label i+1-alpha_k occurs nowhere at all, the exclusion
         zone extends to the end of the word;
    (L3) between k_{j+1-alpha_k} and a later (k+1)_j (j >= alpha_k) no k_i
         with i <= j-alpha_k may occur.

    Including i = alpha_k in (L2) is what makes the relaxed predicate match
    the crystal decomposition of skew decomposition tableaux; with i >
    alpha_k the exclusion misses pairs whose companion is the label-1
    letter, and the enumeration overcounts.
    """
    pos: dict[tuple[int, int], int] = {}
    mult: dict[int, int] = {}
    for p, (v, j) in enumerate(labeled):
        pos[(v, j)] = p
        mult[v] = max(mult.get(v, 0), j)
    n = len(labeled)

    def a(k: int) -> int:
        return alpha[k - 1] if k <= len(alpha) else 0

    # (L1)
    for p, (v, _) in enumerate(labeled):
        k = v - 1
        if k >= 1 and k > exempt_below:
            first = pos.get((k, 1))
            if first is None or first >= p:
                return False

    # (L2)
    for k in range(1, max(mult, default=0)):
        ak = a(k)
        for i in range(max(ak, 1), mult.get(k + 1, 0) + 1):
            s = pos[(k + 1, i)]
            t = pos.get((k, i + 1 - ak))
            if t is None:
                hi = n - 1
            elif t > s:
                hi = t
            else:
                continue
            if any(s < pos[(k + 1, j)] <= hi for j in range(i + 1, mult.get(k + 1, 0) + 1)):
                return False

    # (L3): j = alpha_k would forbid labels i <= 0, so starting above it
    # loses nothing
    for k in range(1, max(mult, default=0)):
        ak = a(k)
        for j in range(max(ak, 1), mult.get(k + 1, 0) + 1):
            s = pos.get((k, j + 1 - ak))
            t = pos.get((k + 1, j))
            if s is None or t is None or t < s:
                continue
            if any(s <= pos[(k, i)] <= t for i in range(1, j - ak + 1)):
                return False

    return True


def has_lattice_property(w: Sequence[PrimedLetter]) -> bool:
    """Pairwise lattice rules (L1)-(L3) on the star-labeled word."""
    return _lattice_on_labels(star_labeling(w), (), 0)


def has_mu_lattice_property(w: Sequence[PrimedLetter], mu: StrictPartition) -> bool:
    """Lattice rules relaxed by alpha_k = mu_k - mu_{k+1}; values <= len(mu) skip (L1)."""
    ell = mu.length()
    alpha = tuple(mu.part(k) - mu.part(k + 1) for k in range(1, ell + 1))
    return _lattice_on_labels(star_labeling(w), alpha, ell)


def has_stembridge_lattice_property(w: Sequence[PrimedLetter]) -> bool:
    """Stembridge's lattice condition on the doubled word.

    Build w-hat by sending k to (k+1)' and k' to k, append its reverse to w,
    and scan left to right keeping unprimed counts m_k.  The word passes iff
    a letter of value k+1 is never read while m_{k+1} = m_k.
    """
    doubled = list(w)
    for x in reversed(w):
        if x.primed:
            doubled.append(PrimedLetter(x.value, False))
        else:
            doubled.append(PrimedLetter(x.value + 1, True))
    counts: dict[int, int] = {}
    for x in doubled:
        v = x.value
        if v >= 2 and counts.get(v, 0) == counts.get(v - 1, 0):
            return False
        if not x.primed:
            counts[v] = counts.get(v, 0) + 1
    return True
