"""Brute-force Phi_n from the product of (x^d - 1)^mu(n/d), plus kernel reduction.

This module deliberately shares nothing with the ternary engine beyond the
residue helpers: it is the ground truth the engine is checked against.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import config
from .errors import ConsistencyError, InvalidArgument, ResourceLimitError
from .poly import DensePoly
from .residue import divisors, euler_phi, factorize, mobius

_SAFE = 2**62


def _mul_xd_minus_1(a: np.ndarray, d: int) -> np.ndarray:
    if a.size and np.abs(a).max() >= _SAFE // 2:
        raise ResourceLimitError("intermediate coefficient exceeds 64-bit range")
    out = np.zeros(a.size + d, dtype=np.int64)
    out[d:] += a
    out[: a.size] -= a
    return out


def _div_xd_minus_1(a: np.ndarray, d: int) -> np.ndarray:
    """Exact quotient a / (x^d - 1); raises if the remainder is nonzero.

    From a_k = q_{k-d} - q_k the quotient is minus the running sum of a over
    residue classes mod d, i.e. a cumulative sum of length-d blocks.
    """
    deg = a.size - 1
    if deg < d:
        raise ConsistencyError(f"cannot divide degree {deg} by x^{d} - 1")
    nb = -(-a.size // d)
    if a.size and int(np.abs(a).max()) * nb >= _SAFE:
        raise ResourceLimitError("intermediate coefficient exceeds 64-bit range")
    padded = np.zeros(nb * d, dtype=np.int64)
    padded[: a.size] = a
    q = -np.cumsum(padded.reshape(nb, d), axis=0).ravel()
    if np.any(q[deg - d + 1 :]):
        raise ConsistencyError(f"x^{d} - 1 does not divide the running product")
    return q[: deg - d + 1]


def cyclotomic_oracle(n: int, max_degree: int | None = None) -> DensePoly:
    if n < 1:
        raise InvalidArgument(f"n must be positive, got {n}")
    cap = config.max_degree(config.ORACLE_MAX_DEGREE) if max_degree is None else max_degree
    phi = euler_phi(n)
    if phi > cap:
        raise ResourceLimitError(f"phi({n}) = {phi} exceeds oracle degree cap {cap}")

    divs = divisors(n)
    numer = [d for d in divs if mobius(n // d) == 1]
    denom = sorted((d for d in divs if mobius(n // d) == -1), reverse=True)

    poly = np.ones(1, dtype=np.int64)
    for d in numer:
        poly = _mul_xd_minus_1(poly, d)
    for d in denom:
        poly = _div_xd_minus_1(poly, d)

    if poly.size - 1 != phi or poly[-1] != 1:
        raise ConsistencyError(f"oracle produced degree {poly.size - 1} for n={n}, expected {phi}")
    return DensePoly(poly)


def height_oracle(n: int) -> int:
    return cyclotomic_oracle(n).height()


@dataclass(frozen=True)
class ReductionStep:
    """One height-preserving rewrite ``from_n -> to_n``.

    ``kind == "absorb"``: prime**2 divided from_n, Phi_{from_n}(x) = Phi_{to_n}(x**prime).
    ``kind == "negate"``: from_n = 2 * to_n with to_n odd, Phi_{from_n}(x) = Phi_{to_n}(-x)
    (up to an overall sign when to_n = 1).
    """

    kind: str
    prime: int
    from_n: int
    to_n: int


@dataclass(frozen=True)
class ReductionPlan:
    original_n: int
    kernel_n: int
    steps: tuple[ReductionStep, ...]

    @property
    def kernel_order(self) -> int:
        """Number of prime factors of the kernel."""
        return len(factorize(self.kernel_n)) if self.kernel_n > 1 else 0


def reduce_to_kernel(n: int) -> ReductionPlan:
    if n < 1:
        raise InvalidArgument(f"n must be positive, got {n}")
    steps = []
    cur = n
    for prime, e in factorize(n):
        for _ in range(e - 1):
            steps.append(ReductionStep("absorb", prime, cur, cur // prime))
            cur //= prime
    if cur % 2 == 0:
        steps.append(ReductionStep("negate", 2, cur, cur // 2))
        cur //= 2
    return ReductionPlan(n, cur, tuple(steps))


def expand_from_kernel(kernel_poly: DensePoly, plan: ReductionPlan) -> DensePoly:
    """Rebuild Phi_{original_n} from Phi_{kernel_n} by replaying the plan backwards."""
    poly = kernel_poly
    for step in reversed(plan.steps):
        if step.kind == "absorb":
            poly = poly.substitute_power(step.prime)
        elif step.to_n == 1:
            poly = DensePoly(-poly.negate_variable().coefficients)
        else:
            poly = poly.negate_variable()
    return poly
