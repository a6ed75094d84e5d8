"""Temperature dynamics of the MIN: regimes, sudden-change temperatures,
asymptotics, and the three-regime law for N_AI + N_AII.

The sudden change is a kink of N(T): the argument attaining the min[...]
term of the closed-form MIN switches index at T_sc.  For the A-I side this
happens at T_sc = -w / ln(c3^2/m^2 - 1) with m = min(|c1|, |c2|), which is
positive and finite only when m > (sqrt(2)/2)|c3|; for A-II at
T_sc = +w / ln(c3^2/m^2 - 1), finite only when 0 < m < (sqrt(2)/2)|c3|.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .correlations import min_AI, min_AII
from .states import XStateParams
from .unruh import UnruhPoint, thermal_amps

SIDES = ("AI", "AII")
_HALF_SQRT2 = math.sqrt(2.0) / 2.0


class RegimeError(ValueError):
    """Raised when a sudden-change temperature is requested outside regime ii_sudden."""


@dataclass(frozen=True)
class RegimeLabel:
    side: str  # "AI" | "AII"
    case: str  # "i" | "ii_sudden" | "ii_smooth" | "iii"
    t_sc: float | None = None
    boundary: bool = False  # min(|c1|,|c2|) == (sqrt(2)/2)|c3| exactly


def classify(p: XStateParams, side: str) -> RegimeLabel:
    """Regime of N(T) for one side of the channel.

    Case i: |c1|, |c2| >= |c3| (monotone).  Case iii: c1 = c2 = 0.
    Otherwise |c3| > min(|c1|, |c2|) and the behavior is ii_sudden or
    ii_smooth depending on which side of (sqrt(2)/2)|c3| the min falls;
    the exact boundary is classified ii_smooth (T_sc diverges) and flagged.
    """
    if side not in SIDES:
        raise ValueError(f"side must be one of {SIDES}, got {side!r}")
    a1, a2, a3 = p.magnitudes()
    if a1 == 0.0 and a2 == 0.0 and a3 > 0.0:
        return RegimeLabel(side=side, case="iii")
    m = min(a1, a2)
    if m >= a3:
        return RegimeLabel(side=side, case="i")
    threshold = _HALF_SQRT2 * a3
    boundary = m == threshold
    if side == "AI":
        sudden = m > threshold
    else:
        sudden = 0.0 < m < threshold
    if not sudden:
        return RegimeLabel(side=side, case="ii_smooth", boundary=boundary)
    t_sc = t_sc_AI(p, w=1.0, _checked=True) if side == "AI" else t_sc_AII(
        p, w=1.0, _checked=True
    )
    return RegimeLabel(side=side, case="ii_sudden", t_sc=t_sc)


def _log_ratio(p: XStateParams) -> float:
    a1, a2, a3 = p.magnitudes()
    m = min(a1, a2)
    return math.log(a3 * a3 / (m * m) - 1.0)


def t_sc_AI(p: XStateParams, w: float, _checked: bool = False) -> float:
    """T_sc = -w / ln(c3^2 / min(c1^2, c2^2) - 1); requires regime ii_sudden."""
    if not _checked:
        label = classify(p, "AI")
        if label.case != "ii_sudden":
            raise RegimeError(f"no sudden change for AI: regime is {label.case}")
    return -w / _log_ratio(p)


def t_sc_AII(p: XStateParams, w: float, _checked: bool = False) -> float:
    """T_sc = +w / ln(c3^2 / min(c1^2, c2^2) - 1); requires regime ii_sudden."""
    if not _checked:
        label = classify(p, "AII")
        if label.case != "ii_sudden":
            raise RegimeError(f"no sudden change for AII: regime is {label.case}")
    return w / _log_ratio(p)


def t_sc_oracle(
    p: XStateParams,
    w: float,
    side: str,
    t_lo_factor: float = 1e-6,
    t_hi_factor: float = 1e6,
    rel_tol: float = 1e-10,
) -> float:
    """Numeric sudden-change temperature, independent of the closed forms.

    Bisects on the sign of (c3-term - min(c1,c2)-term) of the MIN formula
    over a log temperature bracket.  No sign change across the bracket
    means the regime was misclassified.
    """
    if side not in SIDES:
        raise ValueError(f"side must be one of {SIDES}, got {side!r}")
    a1, a2, a3 = p.magnitudes()
    m = min(a1, a2)

    def gap(temp: float) -> float:
        # c3-term minus min(c1,c2)-term of the MIN formula, with the common
        # positive thermal factor divided out so the sign survives underflow
        # at extreme temperatures.
        amps = thermal_amps(UnruhPoint(w=w, T_unruh=temp))
        fsq = amps.f0 ** 2 if side == "AI" else amps.f1 ** 2
        return a3 * a3 * fsq - m * m

    lo, hi = t_lo_factor * w, t_hi_factor * w
    g_lo, g_hi = gap(lo), gap(hi)
    if g_lo == 0.0:
        return lo
    if g_hi == 0.0:
        return hi
    if math.copysign(1.0, g_lo) == math.copysign(1.0, g_hi):
        raise RegimeError(
            f"no argmin switch on [{lo:.3g}, {hi:.3g}] for side {side}: "
            "not in regime ii_sudden"
        )
    while hi - lo > rel_tol * lo:
        mid = math.sqrt(lo * hi)
        g_mid = gap(mid)
        if g_mid == 0.0:
            return mid
        if math.copysign(1.0, g_mid) == math.copysign(1.0, g_lo):
            lo, g_lo = mid, g_mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def asymptote(p: XStateParams) -> float:
    """Shared T -> inf limit of both sides:
    (1/16)(2c1^2 + 2c2^2 + c3^2 - min(2c1^2, 2c2^2, c3^2))."""
    t = (2.0 * p.c1 ** 2, 2.0 * p.c2 ** 2, p.c3 ** 2)
    return (sum(t) - min(t)) / 16.0


@dataclass(frozen=True)
class SumRegime:
    case: str  # "a" | "b" | "c"
    t_sc: float | None = None
    boundary: bool = False


def sum_regime(p: XStateParams, w: float = 1.0) -> SumRegime:
    """Which of the three dynamics the sum N_AI + N_AII follows.

    (a) constant in T when |c1|, |c2| >= |c3|;
    (b) decreasing until -w/ln(c3^2/m^2 - 1), then constant, when
        |c3| > m >= (sqrt(2)/2)|c3|;
    (c) fast then slow decay with kink at +w/ln(c3^2/m^2 - 1), when
        m < (sqrt(2)/2)|c3|.
    At the exact (b)/(c) boundary T_sc diverges; it is reported as (b)
    with t_sc absent and flagged.
    """
    a1, a2, a3 = p.magnitudes()
    m = min(a1, a2)
    if m >= a3:
        return SumRegime(case="a")
    threshold = _HALF_SQRT2 * a3
    if m > threshold:
        return SumRegime(case="b", t_sc=-w / _log_ratio(p))
    if m == threshold:
        return SumRegime(case="b", t_sc=None, boundary=True)
    t_sc = w / _log_ratio(p) if m > 0.0 else None
    return SumRegime(case="c", t_sc=t_sc)


def sum_min(p: XStateParams, u: UnruhPoint) -> tuple[float, SumRegime]:
    """N_AI + N_AII at one temperature, with the sum-regime annotation."""
    return min_AI(p, u) + min_AII(p, u), sum_regime(p, w=u.w)
