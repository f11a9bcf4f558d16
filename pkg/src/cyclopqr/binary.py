"""The binary cyclotomic polynomial Phi_pq from its Lam-Leung support."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import InvalidArgument
from .poly import DensePoly
from .residue import is_prime, mod_inverse_in_range


@dataclass(frozen=True)
class SparseBinarySupport:
    """Nonzero exponents of Phi_pq split by sign.

    ``plus_support`` holds ``u*p + v*q`` for ``u < p_q_star``, ``v < q_p_star``;
    ``minus_support`` holds ``u*p + v*q - p*q`` for ``u >= p_q_star``,
    ``v >= q_p_star``.  Both are sorted ascending.  ``exponents``/``signs`` is
    the merged view the ternary engine iterates over.
    """

    p: int
    q: int
    p_q_star: int
    q_p_star: int
    plus_support: np.ndarray = field(repr=False)
    minus_support: np.ndarray = field(repr=False)
    exponents: np.ndarray = field(repr=False)
    signs: np.ndarray = field(repr=False)

    @property
    def degree(self) -> int:
        return (self.p - 1) * (self.q - 1)

    def __len__(self) -> int:
        return int(self.exponents.size)


def lam_leung_support(p: int, q: int) -> SparseBinarySupport:
    if not (p % 2 and q % 2 and is_prime(p) and is_prime(q)):
        raise InvalidArgument(f"({p}, {q}) must be odd primes")
    if p >= q:
        raise InvalidArgument(f"need p < q, got p={p}, q={q}")
    p_q = mod_inverse_in_range(p, q)
    q_p = mod_inverse_in_range(q, p)

    u = np.arange(p_q, dtype=np.int64)
    v = np.arange(q_p, dtype=np.int64)
    plus = np.sort((u[:, None] * p + v[None, :] * q).ravel())

    u2 = np.arange(p_q, q, dtype=np.int64)
    v2 = np.arange(q_p, p, dtype=np.int64)
    minus = np.sort((u2[:, None] * p + v2[None, :] * q - p * q).ravel())

    exps = np.concatenate([plus, minus])
    sgn = np.concatenate([np.ones(plus.size, np.int8), -np.ones(minus.size, np.int8)])
    order = np.argsort(exps, kind="stable")
    exps, sgn = exps[order], sgn[order]
    for arr in (plus, minus, exps, sgn):
        arr.setflags(write=False)
    return SparseBinarySupport(p, q, p_q, q_p, plus, minus, exps, sgn)


def binary_coefficient(s: SparseBinarySupport, m: int) -> int:
    """d_m of Phi_pq; zero outside ``[0, (p-1)(q-1)]``."""
    k = int(np.searchsorted(s.exponents, m))
    if k < s.exponents.size and s.exponents[k] == m:
        return int(s.signs[k])
    return 0


def binary_dense(s: SparseBinarySupport) -> DensePoly:
    out = np.zeros(s.degree + 1, dtype=np.int64)
    out[s.exponents] = s.signs
    return DensePoly(out)


def signs_alternate(poly: DensePoly) -> bool:
    """True when the nonzero coefficients read ``+1, -1, +1, ...`` ascending."""
    nz = poly.coefficients[np.flatnonzero(poly.coefficients)]
    if nz.size == 0:
        return True
    expected = np.where(np.arange(nz.size) % 2 == 0, 1, -1)
    return bool(np.array_equal(nz, expected))
