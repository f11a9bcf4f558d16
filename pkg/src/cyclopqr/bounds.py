"""Upper bounds on the height of Phi_pqr and how a computed height compares."""

from __future__ import annotations

from dataclasses import dataclass

from .residue import mod_inverse_in_range
from .ternary import TernaryTriple


@dataclass(frozen=True)
class BzdegaParams:
    alpha: int
    beta: int
    beta_star: int


@dataclass(frozen=True)
class BoundsReport:
    triple: TernaryTriple
    height: int
    bang: int
    beiter_classic: int
    beiter_conjecture: int
    corrected_beiter: int
    bzdega: int
    beiter_violated: bool
    corrected_violated: bool

    @property
    def severity(self) -> str:
        # exceeding floor(2p/3) can only mean a bug in whatever produced `height`
        return "defect" if self.corrected_violated else "ok"

    def violated_bounds(self) -> list[str]:
        """Names of proven bounds that ``height`` exceeds (should be empty)."""
        names = ("bang", "beiter_classic", "bzdega", "corrected_beiter")
        return [name for name in names if self.height > getattr(self, name)]


def bzdega_params(t: TernaryTriple) -> BzdegaParams:
    p = t.p
    alpha = min(t.q_p_star, t.r_p_star, p - t.q_p_star, p - t.r_p_star)
    beta = mod_inverse_in_range(alpha * t.q * t.r, p)
    return BzdegaParams(alpha, beta, min(beta, p - beta))


def bzdega_bound(t: TernaryTriple) -> int:
    bp = bzdega_params(t)
    return min(2 * bp.alpha + bp.beta_star, t.p - bp.beta_star)


def corrected_beiter_cap(p: int) -> int:
    return 2 * p // 3


def bounds_report(t: TernaryTriple, height: int) -> BoundsReport:
    p = t.p
    cap = corrected_beiter_cap(p)
    return BoundsReport(
        triple=t,
        height=height,
        bang=p - 1,
        beiter_classic=p - p // 4,
        beiter_conjecture=(p + 1) // 2,
        corrected_beiter=cap,
        bzdega=bzdega_bound(t),
        beiter_violated=height > (p + 1) // 2,
        corrected_violated=height > cap,
    )
