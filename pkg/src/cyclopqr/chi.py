"""The {0, +1, -1} kernel chi_n(i) over residues modulo pq.

``chi`` evaluates the six-branch case table literally and is the reference.
``chi_windows``/``chi_array`` use the closed form: with ``o = (i - n) mod pq``,
chi is -1 for ``o`` in ``[0, p)``, +1 for ``o`` in ``[q, q + p)``, else 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .errors import ConsistencyError, InvalidArgument
from .residue import INT64_MAX, bar, mod_inverse_in_range


@dataclass(frozen=True)
class ChiContext:
    p: int
    q: int
    r_p_star: int | None = None

    def __post_init__(self) -> None:
        if not 0 < self.p < self.q:
            raise InvalidArgument(f"need 0 < p < q, got ({self.p}, {self.q})")
        if self.p * self.q > INT64_MAX:
            raise InvalidArgument("pq does not fit in 64 bits")
        if self.r_p_star is not None and not 0 < self.r_p_star < self.p:
            raise InvalidArgument(f"r_p_star must lie in (0, {self.p})")

    @property
    def pq(self) -> int:
        return self.p * self.q

    @classmethod
    def for_triple(cls, p: int, q: int, r: int) -> "ChiContext":
        return cls(p, q, mod_inverse_in_range(r, p))


@dataclass(frozen=True)
class CyclicWindow:
    """``length`` consecutive residues modulo ``modulus`` starting at ``start``."""

    start: int
    length: int
    modulus: int

    def __contains__(self, i: int) -> bool:
        return bar(i - self.start, self.modulus) < self.length

    def __iter__(self) -> Iterator[int]:
        return ((self.start + k) % self.modulus for k in range(self.length))

    def __len__(self) -> int:
        return self.length

    def residues(self) -> set[int]:
        return set(self)


def chi(ctx: ChiContext, n: int, i: int) -> int:
    pq = ctx.pq
    p, q = ctx.p, ctx.q
    i1 = bar(i + 1, pq)

    hi, lo = bar(n + p + q, pq), bar(n + q, pq)
    plus = (hi >= i1 > lo) or (i1 <= hi < lo) or (hi < lo < i1)

    hi, lo = bar(n + p, pq), bar(n, pq)
    minus = (hi >= i1 > lo) or (i1 <= hi < lo) or (hi < lo < i1)

    if plus and minus:
        raise ConsistencyError(f"chi branches overlap at n={n}, i={i}, (p, q)=({p}, {q})")
    if plus:
        return 1
    if minus:
        return -1
    return 0


def chi_windows(ctx: ChiContext, n: int) -> tuple[CyclicWindow, CyclicWindow]:
    """(plus window, minus window) of residues i-bar for chi_n."""
    pq = ctx.pq
    return (
        CyclicWindow(bar(n + ctx.q, pq), ctx.p, pq),
        CyclicWindow(bar(n, pq), ctx.p, pq),
    )


def chi_array(ctx: ChiContext, n, i) -> np.ndarray:
    """Vectorised chi over broadcastable integer arrays ``n`` and ``i``."""
    off = np.mod(np.asarray(i, dtype=np.int64) - np.asarray(n, dtype=np.int64), ctx.pq)
    out = np.zeros(off.shape, dtype=np.int8)
    out[off < ctx.p] = -1
    out[(off >= ctx.q) & (off < ctx.q + ctx.p)] = 1
    return out
