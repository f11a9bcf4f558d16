"""Property suites run by ``cyclopqr verify`` and by the acceptance tests.

Small parameters are checked exhaustively; larger ones are sampled with a
seeded :class:`random.Random`, so a given seed always prints the same report.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .binary import binary_dense, lam_leung_support, signs_alternate
from .bounds import bounds_report
from .chi import ChiContext, chi, chi_array, chi_windows
from .errors import ConsistencyError
from .oracle import cyclotomic_oracle
from .residue import binary_count_identity, primes_up_to
from .ternary import (
    TernaryTriple,
    classify_classes,
    height,
    max_partial_sum,
    shift_relation_holds,
    ternary_all_coefficients,
    ternary_coefficient,
    zero_sum_residual,
)

SUITES = ("binary", "chi", "ternary", "bounds")


@dataclass(frozen=True)
class Check:
    suite: str
    name: str
    passed: bool
    detail: str

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'}  {self.suite}.{self.name}  {self.detail}"


def odd_prime_pairs(max_product: int) -> list[tuple[int, int]]:
    ps = [x for x in primes_up_to(max_product // 3) if x > 2]
    return [(p, q) for p in ps for q in ps if p < q and p * q <= max_product]


def odd_prime_triples(max_product: int) -> list[tuple[int, int, int]]:
    ps = [x for x in primes_up_to(max_product // 15) if x > 2]
    out = []
    for a in ps:
        for b in ps:
            if b <= a or a * b * b >= max_product:
                continue
            for c in ps:
                if c <= b:
                    continue
                if a * b * c > max_product:
                    break
                out.append((a, b, c))
    return out


def seeded_triples(seed: int, count: int = 20) -> list[tuple[int, int, int]]:
    rng = random.Random(seed)
    ps = [x for x in primes_up_to(200) if x > 2]
    picked: set[tuple[int, int, int]] = set()
    while len(picked) < count:
        picked.add(tuple(sorted(rng.sample(ps[:12], 1) + rng.sample(ps[12:], 2))))
    return sorted(picked)


def _first_failure(items, pred: Callable) -> object | None:
    for item in items:
        if not pred(item):
            return item
    return None


def _check(suite: str, name: str, items, pred: Callable, what: str) -> Check:
    items = list(items)
    bad = _first_failure(items, pred)
    if bad is None:
        return Check(suite, name, True, f"{len(items)} {what}")
    return Check(suite, name, False, f"counterexample {bad!r}")


# -- binary -----------------------------------------------------------------

def binary_suite(seed: int, max_pq: int = 10_000) -> list[Check]:
    pairs = odd_prime_pairs(max_pq)
    checks = [
        _check("binary", "count_identity", pairs, lambda pq: _counts_ok(*pq), "pairs"),
        _check("binary", "inverse_identity", pairs, lambda pq: binary_count_identity(*pq), "pairs"),
        _check("binary", "sign_alternation", pairs,
               lambda pq: signs_alternate(binary_dense(lam_leung_support(*pq))), "pairs"),
        _check("binary", "oracle_equivalence", pairs,
               lambda pq: binary_dense(lam_leung_support(*pq)) == cyclotomic_oracle(pq[0] * pq[1]),
               "pairs"),
    ]
    return checks


def _counts_ok(p: int, q: int) -> bool:
    s = lam_leung_support(p, q)
    plus, minus = s.plus_support, s.minus_support
    return (
        plus.size == s.p_q_star * s.q_p_star
        and minus.size == (q - s.p_q_star) * (p - s.q_p_star)
        and plus.size - minus.size == 1
        and np.intersect1d(plus, minus).size == 0
        and plus.min() >= 0 and minus.min() >= 0
        and max(plus.max(), minus.max()) == s.degree
    )


# -- chi --------------------------------------------------------------------

def chi_suite(seed: int) -> list[Check]:
    rng = random.Random(seed)
    checks = []
    for p, q in [(3, 5), (3, 7), (5, 7), (5, 11)]:
        ctx = ChiContext(p, q)
        grid = [(n, i) for n in range(ctx.pq) for i in range(ctx.pq)]
        checks.append(_check("chi", f"window_consistency({p},{q})", grid,
                             lambda ni, ctx=ctx: _window_agrees(ctx, *ni), "(n, i) pairs"))
        checks.append(_check("chi", f"window_sizes({p},{q})", range(ctx.pq),
                             lambda n, ctx=ctx: _window_sizes_ok(ctx, n), "n values"))
        samples = [(rng.randrange(ctx.pq), rng.randrange(ctx.pq), rng.randrange(-5, 6), rng.randrange(-5, 6))
                   for _ in range(200)]
        checks.append(_check("chi", f"periodicity({p},{q})", samples,
                             lambda s, ctx=ctx: chi(ctx, s[0] + s[2] * ctx.pq, s[1] + s[3] * ctx.pq)
                             == chi(ctx, s[0], s[1]), "shifted samples"))

    t = TernaryTriple.of(3, 5, 7)
    pq = t.p * t.q
    grid = [(m, i) for m in range(-pq, 2 * pq) for i in range(pq)]
    checks.append(_check("chi", "shift_relation(3,5,7)", grid,
                         lambda mi: shift_relation_holds(t, *mi), "(m, i) pairs"))
    others = [TernaryTriple.of(*x) for x in seeded_triples(seed, 5)]
    samples = [(tt, rng.randrange(-tt.p * tt.q, tt.p * tt.q * 2), rng.randrange(tt.p * tt.q))
               for tt in others for _ in range(200)]
    checks.append(_check("chi", "shift_relation(random)", samples,
                         lambda s: shift_relation_holds(*s), "samples"))
    return checks


def _window_agrees(ctx: ChiContext, n: int, i: int) -> bool:
    try:
        ref = chi(ctx, n, i)
    except ConsistencyError:
        return False
    plus, minus = chi_windows(ctx, n)
    closed = 1 if i in plus else (-1 if i in minus else 0)
    return ref == closed == int(chi_array(ctx, n, i))


def _window_sizes_ok(ctx: ChiContext, n: int) -> bool:
    plus, minus = chi_windows(ctx, n)
    a, b = plus.residues(), minus.residues()
    return len(a) == len(b) == ctx.p and not (a & b)


# -- ternary ----------------------------------------------------------------

def ternary_suite(seed: int) -> list[Check]:
    rng = random.Random(seed)
    triples = [TernaryTriple.of(*x) for x in seeded_triples(seed)]
    t0 = TernaryTriple.of(3, 5, 7)
    checks = [
        _check("ternary", "zero_sum(3,5,7)", range(t0.p * t0.q),
               lambda i: zero_sum_residual(t0, t0.support(), i) == 0, "residues"),
        _check("ternary", "zero_sum(seeded)", triples, _zero_sum_exhaustive, "triples"),
        _check("ternary", "fast_equals_reference",
               [TernaryTriple.of(*x) for x in [(3, 5, 7), (3, 5, 11), (5, 7, 11), (3, 11, 13)]],
               _fast_is_reference, "triples"),
        _check("ternary", "oracle_equivalence(seeded)", triples,
               lambda t: ternary_all_coefficients(t, t.support()) == cyclotomic_oracle(t.n), "triples"),
        _check("ternary", "partial_sum_dominance(seeded)", triples,
               lambda t: max_partial_sum(t, t.support()) >= height(t, t.support()).height, "triples"),
    ]
    samples = [(t, rng.randrange(t.phi + 1), rng.randrange(-2, t.p * t.q + 2)) for t in triples for _ in range(5)]
    checks.append(_check("ternary", "class_partition(seeded)", samples, _partition_ok, "(t, i, j) samples"))
    return checks


def _zero_sum_exhaustive(t: TernaryTriple) -> bool:
    s = t.support()
    ibar = np.arange(t.p * t.q)
    vals = chi_array(t.chi_context(), s.exponents[None, :] * t.r, ibar[:, None]).astype(np.int64)
    return not np.any(vals @ s.signs.astype(np.int64))


def _fast_is_reference(t: TernaryTriple) -> bool:
    s = t.support()
    fast = ternary_all_coefficients(t, s).tolist()
    return fast == [ternary_coefficient(t, s, i) for i in range(t.phi + 1)]


def _partition_ok(sample) -> bool:
    t, i, j = sample
    part = classify_classes(t, t.support(), i, j)
    sets = (part.special, part.plain, part.null_)
    union = set().union(*sets)
    return union == set(range(t.p)) and sum(map(len, sets)) == t.p


# -- bounds -----------------------------------------------------------------

def bounds_suite(seed: int) -> list[Check]:
    triples = [TernaryTriple.of(*x) for x in odd_prime_triples(30_000)]
    reports = [bounds_report(t, height(t, t.support()).height) for t in triples]
    small_p = [b for b in reports if b.triple.p <= 5]
    checks = [
        _check("bounds", "proven_bounds(pqr<=30000)", reports, lambda b: not b.violated_bounds(), "triples"),
        _check("bounds", "beiter_small_p(pqr<=30000)", small_p, lambda b: not b.beiter_violated, "triples"),
    ]
    for p in (3, 5, 7):
        hits = [b for b in reports if b.triple.p == p and b.height >= (p + 1) // 2]
        checks.append(Check("bounds", f"moller_witness(p={p})", bool(hits),
                            f"first {hits[0].triple.as_tuple()} height {hits[0].height}" if hits else "none found"))
    return checks


def run_suites(suite: str = "all", seed: int = 0) -> list[Check]:
    runners = {"binary": binary_suite, "chi": chi_suite, "ternary": ternary_suite, "bounds": bounds_suite}
    names = SUITES if suite == "all" else (suite,)
    checks: list[Check] = []
    for name in names:
        checks.extend(runners[name](seed))
    return checks
