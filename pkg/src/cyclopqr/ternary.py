"""Coefficients and height of ternary cyclotomic polynomials Phi_pqr.

Every coefficient is assembled from the binary polynomial Phi_pq:

    c_i = sum of d_m * chi_{m r}(i) over m with m*r + p + q >= i + 1 + p*q

where d_m are the coefficients of Phi_pq and chi is the kernel in
:mod:`cyclopqr.chi`.  The threshold uses the integer ``i`` itself, not its
residue.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import config
from .binary import SparseBinarySupport, lam_leung_support
from .chi import ChiContext, chi, chi_array
from .errors import ConsistencyError, InvalidArgument, ResourceLimitError
from .poly import DensePoly
from .residue import INT64_MAX, is_prime, mod_inverse_in_range


@dataclass(frozen=True)
class TernaryTriple:
    p: int
    q: int
    r: int
    q_p_star: int
    r_p_star: int
    p_q_star: int
    q_bar_p: int
    phi: int

    @classmethod
    def of(cls, p: int, q: int, r: int) -> "TernaryTriple":
        for x in (p, q, r):
            if x % 2 == 0 or not is_prime(x):
                raise InvalidArgument(f"{x} is not an odd prime")
        if not p < q < r:
            raise InvalidArgument(f"need p < q < r, got ({p}, {q}, {r})")
        if p * q * r > INT64_MAX:
            raise InvalidArgument("pqr does not fit in 64 bits")
        return cls(
            p, q, r,
            q_p_star=mod_inverse_in_range(q, p),
            r_p_star=mod_inverse_in_range(r, p),
            p_q_star=mod_inverse_in_range(p, q),
            q_bar_p=q % p,
            phi=(p - 1) * (q - 1) * (r - 1),
        )

    @property
    def n(self) -> int:
        return self.p * self.q * self.r

    def chi_context(self) -> ChiContext:
        return ChiContext(self.p, self.q, self.r_p_star)

    def support(self) -> SparseBinarySupport:
        return lam_leung_support(self.p, self.q)

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.p, self.q, self.r)


@dataclass(frozen=True)
class HeightReport:
    triple: TernaryTriple
    height: int
    witness_exponent: int
    partial_sum_max: int | None = None


@dataclass(frozen=True)
class ClassPartition:
    """Special/plain/null split of the p class labels for a given (i, j).

    ``witnesses[label]`` maps ``"upper"`` (exponent >= j) and ``"lower"``
    (exponent < j) to the ``(u, exponent)`` pairs carrying the required sign.
    """

    special: frozenset[int]
    plain: frozenset[int]
    null_: frozenset[int]
    i: int
    j: int
    witnesses: dict[int, dict[str, list[tuple[int, int]]]] = field(repr=False, compare=False)

    def label_of(self, v: int) -> str:
        if v in self.special:
            return "special"
        if v in self.plain:
            return "plain"
        return "null"


def _check_pair(t: TernaryTriple, s: SparseBinarySupport) -> None:
    if (s.p, s.q) != (t.p, t.q):
        raise InvalidArgument(f"support built for ({s.p}, {s.q}), triple has ({t.p}, {t.q})")


def _thresholds(t: TernaryTriple, exps: np.ndarray) -> np.ndarray:
    # largest i for which exponent m still contributes
    return exps * t.r + t.p + t.q - t.p * t.q - 1


def ternary_coefficient(t: TernaryTriple, s: SparseBinarySupport, i: int) -> int:
    """Reference evaluation of a single coefficient, term by term."""
    _check_pair(t, s)
    if i < 0 or i > t.phi:
        return 0
    ctx = t.chi_context()
    pq = t.p * t.q
    total = 0
    for m, d in zip(s.exponents.tolist(), s.signs.tolist()):
        if m * t.r + t.p + t.q >= i + 1 + pq:
            total += d * chi(ctx, m * t.r, i)
    return total


def _window_intervals(start: np.ndarray, length: int, modulus: int):
    """Split cyclic windows into at most two half-open linear intervals."""
    end = start + length
    wraps = end > modulus
    first = (start, np.where(wraps, modulus, end))
    second = (np.zeros_like(start), np.where(wraps, end - modulus, 0))
    return first, second


def ternary_all_coefficients(
    t: TernaryTriple, s: SparseBinarySupport, max_degree: int | None = None
) -> DensePoly:
    """All coefficients c_0..c_phi via block-wise cyclic difference arrays.

    Indices are cut into blocks of ``pq`` consecutive exponents.  An exponent
    m of Phi_pq contributes to every i up to its threshold ``T_m``; it is fully
    active in blocks strictly below the block holding ``T_m`` and truncated
    inside that block.  Full activations go into a per-block difference row
    that is suffix-summed over blocks; truncated ones go into a second row
    for the block itself.  One cumulative sum along each row then yields the
    coefficients.
    """
    _check_pair(t, s)
    cap = config.max_degree(config.ENGINE_MAX_DEGREE) if max_degree is None else max_degree
    if t.phi > cap:
        raise ResourceLimitError(f"phi({t.n}) = {t.phi} exceeds degree cap {cap}")

    pq = t.p * t.q
    length = t.phi + 1
    nblocks = -(-length // pq)

    exps = s.exponents.astype(np.int64)
    signs = s.signs.astype(np.int64)
    thr = _thresholds(t, exps)
    keep = thr >= 0
    exps, signs, thr = exps[keep], signs[keep], thr[keep]
    thr = np.minimum(thr, length - 1)
    block, cut = np.divmod(thr, pq)

    full = np.zeros((nblocks + 1, pq + 1), dtype=np.int64)
    part = np.zeros((nblocks, pq + 1), dtype=np.int64)

    starts_weights = (
        (np.mod(exps * t.r + t.q, pq), signs),   # +1 window
        (np.mod(exps * t.r, pq), -signs),        # -1 window
    )
    for start, w in starts_weights:
        for lo, hi in _window_intervals(start, t.p, pq):
            live = hi > lo
            b, l, h, ww, c = block[live], lo[live], hi[live], w[live], cut[live]
            np.add.at(full, (b, l), ww)
            np.add.at(full, (b, h), -ww)
            h_cut = np.minimum(h, c + 1)
            ok = l < h_cut
            np.add.at(part, (b[ok], l[ok]), ww[ok])
            np.add.at(part, (b[ok], h_cut[ok]), -ww[ok])

    # block k sees every exponent whose threshold block is > k
    active = np.cumsum(full[::-1], axis=0)[::-1][1:]
    coeffs = np.cumsum(active + part, axis=1)[:, :pq].ravel()[:length]

    if coeffs.size and np.abs(coeffs).max() >= 2**31:
        raise ConsistencyError("ternary coefficient outside 32-bit range")
    return DensePoly(coeffs.astype(np.int32))


def height(t: TernaryTriple, s: SparseBinarySupport, with_partial_sums: bool = False) -> HeightReport:
    poly = ternary_all_coefficients(t, s)
    mags = np.abs(poly.coefficients.astype(np.int64))
    a = int(mags.max())
    witness = int(np.argmax(mags == a))
    psm = max_partial_sum(t, s) if with_partial_sums else None
    return HeightReport(t, a, witness, psm)


def zero_sum_residual(t: TernaryTriple, s: SparseBinarySupport, i: int) -> int:
    """Untruncated sum of d_m * chi_{mr}(i); identically zero."""
    _check_pair(t, s)
    vals = chi_array(t.chi_context(), s.exponents * t.r, i).astype(np.int64)
    return int((vals * s.signs).sum())


def max_partial_sum(t: TernaryTriple, s: SparseBinarySupport) -> int:
    """max over i, j of |sum_{m >= j} d_m chi_{mr}(i)|.

    The summand depends on i only through its residue mod pq, and on j only
    through which support exponents lie at or above it, so the search runs
    over residues 0..pq-1 and suffixes of the descending support.  The empty
    suffix contributes 0.
    """
    _check_pair(t, s)
    ctx = t.chi_context()
    pq = t.p * t.q
    desc = s.exponents[::-1].astype(np.int64)
    sgn = s.signs[::-1].astype(np.int64)
    best = 0
    rows = max(1, 4_000_000 // max(1, desc.size))
    for lo in range(0, pq, rows):
        ibar = np.arange(lo, min(pq, lo + rows), dtype=np.int64)
        terms = chi_array(ctx, desc[None, :] * t.r, ibar[:, None]).astype(np.int64) * sgn
        best = max(best, int(np.abs(np.cumsum(terms, axis=1)).max()))
    return best


def classify_classes(t: TernaryTriple, s: SparseBinarySupport, i: int, j: int) -> ClassPartition:
    _check_pair(t, s)
    ctx = t.chi_context()
    p, q, r = t.p, t.q, t.r
    special, plain, null = set(), set(), set()
    witnesses: dict[int, dict[str, list[tuple[int, int]]]] = {}

    for v in range(p):
        if v < t.q_p_star:
            us = range(0, t.p_q_star)
            offset, upper_sign = v * q, -1
        else:
            us = range(t.p_q_star, q)
            offset, upper_sign = v * q - p * q, 1
        upper, lower = [], []
        for u in us:
            m = u * p + offset
            val = chi(ctx, m * r, i)
            if m >= j and val == upper_sign:
                upper.append((u, m))
            elif m < j and val == -upper_sign:
                lower.append((u, m))
        witnesses[v] = {"upper": upper, "lower": lower}
        if upper and lower:
            special.add(v)
        elif upper or lower:
            plain.add(v)
        else:
            null.add(v)

    return ClassPartition(frozenset(special), frozenset(plain), frozenset(null), i, j, witnesses)


def shift_relation_holds(t: TernaryTriple, m: int, i: int) -> bool:
    """chi_{mr}(i) = -1 exactly when chi_{(m - r_p* q) r}(i) = +1."""
    ctx = t.chi_context()
    lhs = chi(ctx, m * t.r, i) == -1
    rhs = chi(ctx, (m - t.r_p_star * t.q) * t.r, i) == 1
    return lhs == rhs
