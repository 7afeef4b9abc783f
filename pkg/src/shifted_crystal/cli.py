"""Command-line interface: coefficient queries, enumerations, crystal graph
export, and verification sweeps.

Partitions on the command line are comma-separated descending integers;
non-monotone input is rejected rather than sorted.  All outputs are JSON
(or DOT for graph export); the exit code is 0 exactly when every requested
check passed.  The environment variable SHIFTED_CRYSTAL_THREADS caps the
worker count used by verification sweeps.
"""

from __future__ import annotations

import argparse
import itertools
import json
import os
import random
import sys
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Optional

from . import crystal, expansions, oracle, ssdt, tableaux, words
from .shapes import Partition, SkewShape, StrictPartition, staircase, straight_shape


def parse_partition(text: str) -> Partition:
    if text.strip() in ("", "-"):
        return Partition()
    parts = [int(tok) for tok in text.split(",")]
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise ValueError(f"parts must be given in weakly decreasing order: {text}")
    return Partition(parts)


def parse_strict(text: str) -> StrictPartition:
    return StrictPartition(parse_partition(text).parts)


def partition_key(p: Partition) -> str:
    return ",".join(str(x) for x in p.parts)


def _thread_count() -> int:
    try:
        return max(1, int(os.environ.get("SHIFTED_CRYSTAL_THREADS", "1")))
    except ValueError:
        return 1


def _run_cases(fn: Callable, cases: list) -> list:
    workers = _thread_count()
    if workers <= 1:
        return [fn(c) for c in cases]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, cases))


def _emit(data, out: Optional[str]) -> None:
    text = data if isinstance(data, str) else json.dumps(data, indent=2, sort_keys=True)
    if not text.endswith("\n"):
        text += "\n"
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------
# coeff


_FAMILIES = ("shifted-lr", "skew-schur-staircase", "ardila-serrano", "schur-expansion", "skew-ssdt")
_ALIASES = {"f": "shifted-lr", "a": "skew-schur-staircase", "b": "ardila-serrano",
            "g": "schur-expansion", "fskew": "skew-ssdt"}


def _coeff_maps(args) -> dict[str, dict[str, int]]:
    """Per-method expansion maps for the requested family."""
    family = _ALIASES.get(args.family, args.family)
    methods: list[str]
    out: dict[str, dict[str, int]] = {}

    if family == "shifted-lr":
        mu, nu = parse_strict(args.mu), parse_strict(args.nu)
        methods = ["enum", "lrs", "crystal", "oracle"] if args.method == "all" else [args.method]
        for m in methods:
            exp = expansions.shifted_lr_expansion(mu, nu, method=m)
            out[m] = {partition_key(k): v for k, v in exp.items()}
    elif family == "skew-schur-staircase":
        lam, r = parse_partition(args.lam), args.r
        methods = ["enum", "crystal", "oracle"] if args.method == "all" else [args.method]
        for m in methods:
            exp = expansions.a_expansion(lam, r, method=m)
            out[m] = {partition_key(k): v for k, v in exp.items()}
    elif family == "ardila-serrano":
        mu, r = parse_partition(args.mu), args.r
        size = staircase(r + 1).size() - mu.size()
        exp = {}
        for nu in expansions.strict_partitions_of(size):
            c = expansions.b_coefficient(mu, r, nu)
            if c:
                exp[partition_key(nu)] = c
        out["enum"] = exp
        if args.method == "all":
            # the only independent route is through the complement identity
            lam_c = expansions.complement_in_rectangle(mu, r)
            from .shapes import conjugate

            alt = expansions.a_expansion(conjugate(lam_c), r, method="enum")
            out["staircase-complement"] = {partition_key(k): v for k, v in alt.items()}
    elif family == "schur-expansion":
        lam = parse_strict(args.lam)
        methods = ["enum", "crystal", "oracle"] if args.method == "all" else [args.method]
        for m in methods:
            exp = expansions.g_expansion(lam, method=m)
            out[m] = {partition_key(k): v for k, v in exp.items()}
    elif family == "skew-ssdt":
        lam, mu = parse_strict(args.lam), parse_strict(args.mu)
        methods = ["enum", "crystal", "oracle"] if args.method == "all" else [args.method]
        for m in methods:
            exp = expansions.skew_ssdt_expansion(lam, mu, method=m)
            out[m] = {partition_key(k): v for k, v in exp.items()}
    else:
        raise ValueError(f"unknown family {args.family!r}")
    return out


def cmd_coeff(args) -> int:
    maps = _coeff_maps(args)
    if len(maps) > 1:
        agree = len({json.dumps(m, sort_keys=True) for m in maps.values()}) == 1
        payload = {"coefficients": next(iter(maps.values())), "methods": maps, "agree": agree}
        _emit(payload, args.out)
        return 0 if agree else 1
    _emit(next(iter(maps.values())), args.out)
    return 0


# ---------------------------------------------------------------------------
# enumerate


def cmd_enumerate(args) -> int:
    what = args.what
    items: list
    if what == "ssdt":
        lam = parse_strict(args.lam)
        inner = parse_strict(args.inner) if args.inner else StrictPartition()
        shape = SkewShape(lam, inner, shifted=True)
        items = [t.to_json() for t in ssdt.enumerate_ssdt(shape, args.n)]
    elif what == "sst":
        outer = parse_partition(args.lam)
        inner = parse_partition(args.inner) if args.inner else Partition()
        if args.shifted:
            shape = SkewShape(StrictPartition(outer.parts),
                              StrictPartition(inner.parts), shifted=True)
        else:
            shape = SkewShape(outer, inner)
        content = parse_partition(args.content).parts if args.content else None
        items = [
            t.to_json()
            for t in tableaux.enumerate_semistandard(
                shape, args.n, content=content, alphabet=args.alphabet
            )
        ]
    elif what == "f":
        items = [q.to_json() for q in expansions.enum_f_tableaux(
            parse_strict(args.lam), parse_strict(args.mu), parse_strict(args.nu))]
    elif what == "lrs":
        items = [q.to_json() for q in expansions.enum_lrs_tableaux(
            parse_strict(args.lam), parse_strict(args.mu), parse_strict(args.nu))]
    elif what == "a":
        items = [q.to_json() for q in expansions.enum_a_tableaux(
            parse_partition(args.lam), args.r, parse_strict(args.nu))]
    elif what == "b":
        items = [q.to_json() for q in expansions.enum_b_tableaux(
            parse_partition(args.mu), args.r, parse_strict(args.nu))]
    elif what == "g":
        items = [q.to_json() for q in expansions.enum_g_tableaux(
            parse_strict(args.lam), parse_partition(args.mu))]
    elif what == "fskew":
        items = [q.to_json() for q in expansions.enum_fskew_tableaux(
            parse_strict(args.lam), parse_strict(args.mu), parse_strict(args.nu))]
    else:
        raise ValueError(f"unknown enumeration target {what!r}")
    _emit({"count": len(items), "items": items}, args.out)
    return 0


# ---------------------------------------------------------------------------
# crystal graph


def cmd_crystal(args) -> int:
    n = args.n
    if args.model == "ssdt":
        lam = parse_strict(args.lam)
        inner = parse_strict(args.skew_inner) if args.skew_inner else StrictPartition()
        shape = SkewShape(lam, inner, shifted=True)
        pool = [ssdt.reverse_reading_word(t) for t in ssdt.enumerate_ssdt(shape, n)]
    elif args.model == "ssyt":
        outer = parse_partition(args.lam)
        inner = parse_partition(args.skew_inner) if args.skew_inner else Partition()
        shape = SkewShape(outer, inner)
        pool = [
            tuple(x.value for x in tableaux.reading_word(t))
            for t in tableaux.enumerate_semistandard(shape, n, alphabet="unprimed")
        ]
    else:
        raise ValueError(f"unknown model {args.model!r}")
    if not pool:
        print("empty crystal for the requested shape", file=sys.stderr)
        return 1
    crystal.verify_closure(pool, n, "q")
    graph = crystal.graph_on(pool, n, "q")
    if args.dot:
        _emit(crystal.export_dot(graph), args.dot)
    if args.json or not args.dot:
        _emit(graph.to_json(), args.json)
    return 0


# ---------------------------------------------------------------------------
# verify suites


def _suite_lr_methods(max_size: int, seed: int) -> dict:
    cases = []
    for s in range(2, max_size + 1):
        for a in range(1, s):
            for mu in expansions.strict_partitions_of(a):
                for nu in expansions.strict_partitions_of(s - a):
                    cases.append((mu, nu, s))

    def check(case):
        mu, nu, s = case
        prod = oracle.multiply(oracle.schurP_poly(mu, s), oracle.schurP_poly(nu, s))
        exp = oracle.expand_in_basis(prod, "schurP")
        for lam in expansions.strict_partitions_of(s):
            f_set = expansions.enum_f_tableaux(lam, mu, nu)
            lrs_set = expansions.enum_lrs_tableaux(lam, mu, nu)
            cry = expansions.shifted_lr_coefficient(lam, mu, nu, method="crystal")
            if set(f_set) != set(lrs_set) or len(f_set) != cry or len(f_set) != exp.get(lam, 0):
                return (partition_key(mu), partition_key(nu), partition_key(lam))
        return None

    failures = [r for r in _run_cases(check, cases) if r is not None]
    return {"cases": len(cases), "failures": sorted(failures)}


def _suite_lattice_equivalence(max_size: int, seed: int) -> dict:
    max_len = max_size
    letters = [words.PrimedLetter(v, p) for v in (1, 2, 3) for p in (False, True)]
    total = 0
    failures = []
    for length in range(0, max_len + 1):
        for combo in itertools.product(letters, repeat=length):
            c = words.content(combo)
            strictly = all(
                c[i] > c[i + 1] or c[i + 1] == 0 for i in range(len(c) - 1)
            ) and all(not (c[i] == 0 and any(c[i:])) for i in range(len(c)))
            if not strictly or not words.rightmost_unprimed(combo):
                continue
            total += 1
            if words.has_lattice_property(combo) != words.has_stembridge_lattice_property(combo):
                failures.append(" ".join(str(x) for x in combo))
    return {"cases": total, "failures": failures[:10]}


def _suite_rank_stability(max_size: int, seed: int) -> dict:
    failures = []
    cases = 0
    for s in range(2, min(max_size, 6) + 1):
        for a in range(1, s):
            for mu in expansions.strict_partitions_of(a):
                for nu in expansions.strict_partitions_of(s - a):
                    for lam in expansions.strict_partitions_of(s):
                        n0 = max(2, lam.length(), mu.length(), nu.length())
                        cases += 1
                        v0 = len(expansions.lowest_tensor_set(lam, mu, nu, n0))
                        v1 = len(expansions.lowest_tensor_set(lam, mu, nu, n0 + 1))
                        if v0 != v1:
                            failures.append((partition_key(lam), partition_key(mu), partition_key(nu)))
    rng = random.Random(seed)
    for _ in range(200):
        n = rng.randint(2, 4)
        w = tuple(rng.randint(1, n) for _ in range(rng.randint(0, 6)))
        for t in (1, 2, 3):
            if crystal.is_q_lowest(w, n) != crystal.is_q_lowest(crystal.psi_shift(w, n, t), n + t):
                failures.append(("psi", str(w), t))
    return {"cases": cases + 200, "failures": failures[:10]}


def _suite_axioms(max_size: int, seed: int) -> dict:
    rng = random.Random(seed)
    failures = []
    trials = 10_000
    for _ in range(trials):
        n = rng.randint(2, 5)
        length = rng.randint(0, max(0, min(max_size, 8)))
        w = tuple(rng.randint(1, n) for _ in range(length))
        wt = crystal.weight(w, n)
        for i in range(1, n):
            phi, eps = crystal.phi_i(w, n, i), crystal.eps_i(w, n, i)
            if phi != wt[i - 1] - wt[i] + eps:
                failures.append(("phi", w, i))
            fw = crystal.f_i(w, n, i)
            if (fw is not None) != (phi > 0):
                failures.append(("f-domain", w, i))
            if fw is not None and crystal.e_i(fw, n, i) != w:
                failures.append(("partial-inverse", w, i))
        fw = crystal.f_1bar(w, n)
        if fw is not None:
            if crystal.e_1bar(fw, n) != w:
                failures.append(("odd-inverse", w))
            got, want = crystal.weight(fw, n), list(wt)
            want[0] -= 1
            want[1] += 1
            if list(got) != want:
                failures.append(("odd-weight", w))
        ew = crystal.e_1bar(w, n)
        if ew is not None and crystal.f_1bar(ew, n) != w:
            failures.append(("odd-inverse-e", w))
        for i in range(3, n):
            for odd, even_pair in ((crystal.e_1bar, (crystal.e_i, crystal.f_i)),):
                for even in even_pair:
                    lhs = odd(even(w, n, i), n) if even(w, n, i) is not None else None
                    rhs = even(odd(w, n), n, i) if odd(w, n) is not None else None
                    if lhs != rhs:
                        failures.append(("commute", w, i))
    return {"cases": trials, "failures": failures[:10]}


def _closure_suite_ssdt(max_size: int, seed: int) -> dict:
    cases = 0
    failures = []
    for n in (2, 3, 4):
        for tot in range(1, min(max_size, 7) + 1):
            for lam in expansions.strict_partitions_of(tot):
                if lam.length() > n:
                    continue
                pool = [ssdt.reverse_reading_word(t) for t in ssdt.enumerate_straight_ssdt(lam, n)]
                cases += 1
                try:
                    crystal.verify_closure(pool, n, "q")
                except ValueError:
                    failures.append((partition_key(lam), n))
    return {"cases": cases, "failures": failures}


def _closure_suite_staircase(max_size: int, seed: int) -> dict:
    cases = 0
    failures = []
    for r in range(0, 4):
        side = r + 1
        frames = []
        for parts in itertools.product(*[range(0, side + 1)] * side):
            if all(parts[i] >= parts[i + 1] for i in range(side - 1)):
                lam = Partition(tuple(x for x in parts if x))
                if lam.contains(Partition(staircase(r).parts)):
                    frames.append(lam)
        for lam in sorted(set(frames), key=lambda q: q.parts):
            for n in (2, 3, 4):
                pool = expansions.staircase_skew_words(lam, r, n)
                cases += 1
                try:
                    crystal.verify_closure(pool, n, "q")
                except ValueError:
                    failures.append((partition_key(lam), r, n))
    return {"cases": cases, "failures": failures}


def _closure_suite_skew(max_size: int, seed: int) -> dict:
    cases = 0
    failures = []
    for tot in range(1, 9):
        for lam in expansions.strict_partitions_of(tot):
            for msz in range(max(0, tot - min(max_size, 6)), tot):
                for mu in expansions.strict_partitions_of(msz):
                    if not lam.contains(mu):
                        continue
                    if mu.length() and not (
                        lam.part(1) > mu.part(1) and lam.length() > mu.length()
                    ):
                        continue
                    for n in (2, 3):
                        pool = expansions.skew_ssdt_words(lam, mu, n)
                        cases += 1
                        try:
                            crystal.verify_closure(pool, n, "q")
                        except ValueError:
                            failures.append((partition_key(lam), partition_key(mu), n))
    return {"cases": cases, "failures": failures}


def _suite_p_dual_model(max_size: int, seed: int) -> dict:
    cases = 0
    failures = []
    for n in (2, 3, 4):
        for tot in range(1, min(max_size, 7) + 1):
            for lam in expansions.strict_partitions_of(tot):
                if lam.length() > n:
                    continue
                cases += 1
                a = oracle.schurP_poly(lam, n, model="ssdt")
                b = oracle.schurP_poly(lam, n, model="primed")
                if a != b:
                    failures.append((partition_key(lam), n))
    return {"cases": cases, "failures": failures}


def _suite_mu_lattice(max_size: int, seed: int) -> dict:
    cases = 0
    failures = []
    for tot in range(1, min(max_size, 7) + 1):
        for lam in expansions.strict_partitions_of(tot):
            for msz in range(0, tot):
                for mu in expansions.strict_partitions_of(msz):
                    if not lam.contains(mu):
                        continue
                    if mu.length() and not (
                        lam.part(1) > mu.part(1) and lam.length() > mu.length()
                    ):
                        continue
                    cases += 1
                    em = expansions.skew_ssdt_expansion(lam, mu, method="enum")
                    cm = expansions.skew_ssdt_expansion(lam, mu, method="crystal")
                    if em != cm:
                        failures.append((partition_key(lam), partition_key(mu)))
    return {"cases": cases, "failures": failures}


def _suite_complement_identity(max_size: int, seed: int) -> dict:
    from .shapes import complement_in_rectangle, shifted_complement

    cases = 0
    failures = []
    for r in range(0, 4):
        delta = staircase(r + 1)

        def fits(p: StrictPartition) -> bool:
            return delta.contains(p)

        pool = [
            lam
            for tot in range(0, delta.size() + 1)
            for lam in expansions.strict_partitions_of(tot)
            if fits(lam)
        ]
        for lam in pool:
            lam_c = complement_in_rectangle(Partition(lam.parts), r)
            for nu in expansions.strict_partitions_of(lam.size()):
                if not fits(nu):
                    continue
                cases += 1
                g = expansions.g_coefficient(nu, Partition(lam.parts), method="enum")
                a = expansions.a_coefficient(lam_c, r, shifted_complement(nu, r), method="enum")
                if g != a:
                    failures.append((partition_key(nu), partition_key(lam), r))
    return {"cases": cases, "failures": failures}


_SUITES = {
    "lr-methods": _suite_lr_methods,
    "lattice-equivalence": _suite_lattice_equivalence,
    "rank-stability": _suite_rank_stability,
    "axioms": _suite_axioms,
    "closure-ssdt": _closure_suite_ssdt,
    "closure-staircase": _closure_suite_staircase,
    "closure-skew": _closure_suite_skew,
    "p-dual-model": _suite_p_dual_model,
    "mu-lattice": _suite_mu_lattice,
    "complement-identity": _suite_complement_identity,
}


def cmd_verify(args) -> int:
    if args.suite not in _SUITES:
        print(f"unknown suite {args.suite!r}; known: {', '.join(sorted(_SUITES))}", file=sys.stderr)
        return 2
    report = _SUITES[args.suite](args.max_size, args.seed)
    ok = not report["failures"]
    _emit({"suite": args.suite, "pass": ok, **report}, args.out)
    return 0 if ok else 1


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="shifted-crystal")
    sub = ap.add_subparsers(dest="verb", required=True)

    pc = sub.add_parser("coeff", help="expansion coefficients for one family")
    pc.add_argument("family", choices=sorted(set(_FAMILIES) | set(_ALIASES)))
    pc.add_argument("--lambda", dest="lam", default="")
    pc.add_argument("--mu", default="")
    pc.add_argument("--nu", default="")
    pc.add_argument("--r", type=int, default=0)
    pc.add_argument("--method", default="all",
                    choices=["all", "enum", "lrs", "crystal", "oracle"])
    pc.add_argument("--out")
    pc.set_defaults(fn=cmd_coeff)

    pe = sub.add_parser("enumerate", help="list tableaux of one family")
    pe.add_argument("what", choices=["ssdt", "sst", "f", "lrs", "a", "b", "g", "fskew"])
    pe.add_argument("--lambda", dest="lam", default="")
    pe.add_argument("--mu", default="")
    pe.add_argument("--nu", default="")
    pe.add_argument("--inner", default="")
    pe.add_argument("--content", default="")
    pe.add_argument("--r", type=int, default=0)
    pe.add_argument("--n", type=int, default=3)
    pe.add_argument("--shifted", action="store_true")
    pe.add_argument("--alphabet", default="both", choices=["both", "primed", "unprimed"])
    pe.add_argument("--out")
    pe.set_defaults(fn=cmd_enumerate)

    pg = sub.add_parser("crystal", help="build and export a crystal graph")
    pg.add_argument("--lambda", dest="lam", required=True)
    pg.add_argument("--n", type=int, required=True)
    pg.add_argument("--skew-inner", dest="skew_inner", default="")
    pg.add_argument("--model", default="ssdt", choices=["ssdt", "ssyt"])
    pg.add_argument("--dot")
    pg.add_argument("--json")
    pg.set_defaults(fn=cmd_crystal)

    pv = sub.add_parser("verify", help="run a verification sweep")
    pv.add_argument("--suite", required=True)
    pv.add_argument("--max-size", dest="max_size", type=int, default=6)
    pv.add_argument("--seed", type=int, default=20260809)
    pv.add_argument("--out")
    pv.set_defaults(fn=cmd_verify)

    return ap


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (ValueError, AssertionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
