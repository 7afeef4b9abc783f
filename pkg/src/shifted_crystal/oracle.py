"""Exact sparse polynomials in n variables and triangular basis expansion.

Ground truth for every coefficient family: Schur P-polynomials are built by
enumerating decomposition tableaux (or, as a cross-check, shifted primed
tableaux with unprimed diagonal), Schur polynomials by enumerating ordinary
semistandard tableaux, and expansions are solved greedily against the
lexicographically greatest exponent, which must be the indexing partition
of a basis element at every step.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Optional

from . import ssdt, tableaux
from .shapes import Partition, SkewShape, StrictPartition, staircase, straight_shape


class SparsePoly:
    """Integer-coefficient polynomial with fixed variable count."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Optional[Mapping[tuple[int, ...], int]] = None):
        if n < 1:
            raise ValueError("variable count must be >= 1")
        self.n = n
        self.terms: dict[tuple[int, ...], int] = {}
        if terms:
            for exp, c in terms.items():
                if len(exp) != n:
                    raise ValueError(f"exponent {exp} has wrong arity for n={n}")
                if c:
                    self.terms[tuple(exp)] = c

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, SparsePoly) and self.n == other.n and self.terms == other.terms

    def __repr__(self) -> str:
        return f"SparsePoly(n={self.n}, {len(self.terms)} terms)"

    def coefficient(self, exp: tuple[int, ...]) -> int:
        return self.terms.get(tuple(exp), 0)

    def total_mass(self) -> int:
        """Sum of all coefficients: the value at x_1 = ... = x_n = 1."""
        return sum(self.terms.values())

    def leading_exponent(self) -> tuple[int, ...]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading exponent")
        return max(self.terms)

    def add_scaled(self, other: "SparsePoly", c: int) -> "SparsePoly":
        if other.n != self.n:
            raise ValueError("variable count mismatch")
        out = dict(self.terms)
        for exp, d in other.terms.items():
            v = out.get(exp, 0) + c * d
            if v:
                out[exp] = v
            else:
                out.pop(exp, None)
        return SparsePoly(self.n, out)

    def to_json(self) -> list[dict]:
        return [{"exp": list(exp), "coef": c} for exp, c in sorted(self.terms.items())]

    @classmethod
    def from_json(cls, n: int, data: Iterable[dict]) -> "SparsePoly":
        return cls(n, {tuple(item["exp"]): item["coef"] for item in data})


def multiply(p: SparsePoly, q: SparsePoly) -> SparsePoly:
    if p.n != q.n:
        raise ValueError(f"variable count mismatch: {p.n} vs {q.n}")
    out: dict[tuple[int, ...], int] = {}
    for e1, c1 in p.terms.items():
        for e2, c2 in q.terms.items():
            exp = tuple(a + b for a, b in zip(e1, e2))
            v = out.get(exp, 0) + c1 * c2
            if v:
                out[exp] = v
            else:
                del out[exp]
    return SparsePoly(p.n, out)


def is_symmetric(p: SparsePoly) -> bool:
    """Invariance under every adjacent variable swap."""
    for k in range(p.n - 1):
        for exp, c in p.terms.items():
            if exp[k] == exp[k + 1]:
                continue
            swapped = exp[:k] + (exp[k + 1], exp[k]) + exp[k + 2 :]
            if p.terms.get(swapped, 0) != c:
                return False
    return True


_SCHURP_CACHE: dict[tuple[tuple[int, ...], int, str], SparsePoly] = {}
_SCHUR_CACHE: dict[tuple[tuple[int, ...], tuple[int, ...], int], SparsePoly] = {}


def schurP_poly(lam: StrictPartition, n: int, model: str = "ssdt") -> SparsePoly:
    """P_lam(x_1..x_n) as a weight generating function.

    model "ssdt" sums over decomposition tableaux, "primed" over shifted
    primed tableaux with unprimed main diagonal, "both" computes the two and
    insists they are identical.
    """
    if lam.length() > n:
        raise ValueError(f"{lam} needs more than {n} variables")
    if model == "both":
        a = schurP_poly(lam, n, "ssdt")
        b = schurP_poly(lam, n, "primed")
        if a != b:
            raise AssertionError(f"P models disagree for {lam}, n={n}")
        return a
    key = (lam.parts, n, model)
    if key in _SCHURP_CACHE:
        return _SCHURP_CACHE[key]
    terms: dict[tuple[int, ...], int] = {}
    if model == "ssdt":
        for t in ssdt.enumerate_straight_ssdt(lam, n):
            exp = t.content(n)
            terms[exp] = terms.get(exp, 0) + 1
    elif model == "primed":
        shape = straight_shape(lam, shifted=True)
        for q in tableaux.enumerate_semistandard(
            shape, n, alphabet="both", diagonal_unprimed=True
        ):
            counts = [0] * n
            for _, x in q.cell_entries():
                counts[x.value - 1] += 1
            exp = tuple(counts)
            terms[exp] = terms.get(exp, 0) + 1
    else:
        raise ValueError(f"unknown model {model!r}")
    poly = SparsePoly(n, terms)
    _SCHURP_CACHE[key] = poly
    return poly


def skew_schur_poly(shape: SkewShape, n: int) -> SparsePoly:
    """s_{outer/inner}(x_1..x_n) over ordinary semistandard tableaux."""
    if shape.shifted:
        raise ValueError("Schur polynomials use unshifted shapes")
    key = (shape.outer.parts, shape.inner.parts, n)
    if key in _SCHUR_CACHE:
        return _SCHUR_CACHE[key]
    terms: dict[tuple[int, ...], int] = {}
    for q in tableaux.enumerate_semistandard(shape, n, alphabet="unprimed"):
        counts = [0] * n
        for _, x in q.cell_entries():
            counts[x.value - 1] += 1
        exp = tuple(counts)
        terms[exp] = terms.get(exp, 0) + 1
    poly = SparsePoly(n, terms)
    _SCHUR_CACHE[key] = poly
    return poly


def schur_poly(mu: Partition, n: int) -> SparsePoly:
    return skew_schur_poly(straight_shape(mu), n)


def staircase_skew_schur_poly(lam: Partition, r: int, n: int) -> SparsePoly:
    return skew_schur_poly(SkewShape(lam, Partition(staircase(r).parts)), n)


def skew_ssdt_char(shape: SkewShape, n: int) -> SparsePoly:
    """Weight generating function of skew decomposition tableaux."""
    terms: dict[tuple[int, ...], int] = {}
    for t in ssdt.enumerate_ssdt(shape, n):
        exp = t.content(n)
        terms[exp] = terms.get(exp, 0) + 1
    return SparsePoly(n, terms)


def _exp_to_partition(exp: tuple[int, ...], strict: bool) -> Partition:
    parts = tuple(x for x in exp if x)
    if any(exp[k] < exp[k + 1] for k in range(len(exp) - 1)):
        raise ValueError(f"leading exponent {exp} is not a partition")
    if strict:
        if any(parts[k] <= parts[k + 1] for k in range(len(parts) - 1)):
            raise ValueError(f"leading exponent {exp} is not a strict partition")
        return StrictPartition(parts)
    return Partition(parts)


def expand_in_basis(p: SparsePoly, basis: str, n: Optional[int] = None) -> dict[Partition, int]:
    """Greedy triangular expansion of a symmetric polynomial.

    Repeatedly reads the lex-greatest exponent as the next basis index,
    which must be valid for the basis (strict for "schurP"); subtracts that
    basis polynomial and records its coefficient.  Raises on non-symmetric
    input or an invalid leading monomial.
    """
    if basis not in ("schurP", "schur"):
        raise ValueError(f"unknown basis {basis!r}")
    if n is None:
        n = p.n
    if n != p.n:
        raise ValueError("n must match the polynomial")
    if not is_symmetric(p):
        raise ValueError("polynomial is not symmetric")
    strict = basis == "schurP"
    out: dict[Partition, int] = {}
    cur = p
    while cur:
        lead = cur.leading_exponent()
        lam = _exp_to_partition(lead, strict)
        c = cur.coefficient(lead)
        if strict:
            b = schurP_poly(StrictPartition(lam.parts), n)
        else:
            b = schur_poly(lam, n)
        if b.leading_exponent() != lead or b.coefficient(lead) != 1:
            raise AssertionError(f"basis polynomial for {lam} is not monic at {lead}")
        out[lam] = out.get(lam, 0) + c
        cur = cur.add_scaled(b, -c)
    return {lam: c for lam, c in out.items() if c}
