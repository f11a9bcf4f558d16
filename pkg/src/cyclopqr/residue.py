"""Residue arithmetic, multiplicative functions and prime sieving."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import InvalidArgument, NoInverseError

INT64_MAX = 2**63 - 1


@dataclass(frozen=True)
class ResiduePair:
    modulus: int
    value: int

    def __post_init__(self) -> None:
        if self.modulus < 1:
            raise InvalidArgument(f"modulus must be positive, got {self.modulus}")
        if not 0 <= self.value < self.modulus:
            raise InvalidArgument(f"value {self.value} not in [0, {self.modulus})")

    @classmethod
    def of(cls, n: int, modulus: int) -> "ResiduePair":
        return cls(modulus, bar(n, modulus))


def bar(n: int, modulus: int) -> int:
    """Least non-negative residue of ``n`` modulo ``modulus``."""
    if modulus < 1:
        raise InvalidArgument(f"modulus must be positive, got {modulus}")
    # floor semantics of % keep negative n in range
    return n % modulus


def extended_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, x, y)`` with ``a*x + b*y == g == gcd(a, b)``."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        k = old_r // r
        old_r, r = r, old_r - k * r
        old_s, s = s, old_s - k * s
        old_t, t = t, old_t - k * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def mod_inverse_in_range(a: int, m: int) -> int:
    """Inverse of ``a`` modulo ``m`` normalised to the open range ``(0, m)``."""
    if m < 2:
        raise InvalidArgument(f"modulus must be at least 2, got {m}")
    g, x, _ = extended_gcd(a % m, m)
    if g != 1:
        raise NoInverseError(f"{a} has no inverse modulo {m} (gcd {g})")
    return x % m


@lru_cache(maxsize=4096)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorisation of ``n`` as ``((prime, exponent), ...)`` ascending."""
    if n < 1:
        raise InvalidArgument(f"cannot factor {n}")
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def mobius(n: int) -> int:
    if n < 1:
        raise InvalidArgument(f"mobius is defined for n >= 1, got {n}")
    fs = factorize(n)
    if any(e > 1 for _, e in fs):
        return 0
    return -1 if len(fs) % 2 else 1


def euler_phi(n: int) -> int:
    if n < 1:
        raise InvalidArgument(f"euler_phi is defined for n >= 1, got {n}")
    result = n
    for prime, _ in factorize(n):
        result -= result // prime
    return result


def divisors(n: int) -> list[int]:
    divs = [1]
    for prime, e in factorize(n):
        divs = [d * prime**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def primes_up_to(limit: int) -> list[int]:
    """Sieve of Eratosthenes; ascending list of primes ``<= limit``."""
    if limit < 2:
        return []
    sieve = np.ones(limit + 1, dtype=bool)
    sieve[:2] = False
    for k in range(2, int(limit**0.5) + 1):
        if sieve[k]:
            sieve[k * k :: k] = False
    return np.flatnonzero(sieve).tolist()


def binary_count_identity(p: int, q: int) -> bool:
    """Check ``(p-1)(q-1) == (p_q* - 1)p + (q_p* - 1)q`` for distinct primes."""
    p_q = mod_inverse_in_range(p, q)
    q_p = mod_inverse_in_range(q, p)
    return (p - 1) * (q - 1) == (p_q - 1) * p + (q_p - 1) * q
