"""Norming sequences (a_n, b_n) that put normalized extremes on their limit law.

Closed forms for the four worked families:

    pareto(alpha)   a_n = n^(1/alpha)                        b_n = 0
    uniform01       a_n = 1/n                                b_n = 1
    exponential     a_n = 1                                  b_n = log n
    std_normal      a_n = 1/sqrt(2 log n)
                    b_n = sqrt(2 log n) - (log log n + log 4pi) / (2 sqrt(2 log n))

and the generic quantile recipes, with q_n = F^-1(1 - 1/n):

    Frechet target  a_n = q_n,            b_n = 0
    Weibull target  a_n = r(F) - q_n,     b_n = r(F)      (needs r(F) finite)
    Gumbel target   a_n = u(q_n),         b_n = q_n

where u(t) = int_t^r(F) (1 - F(s)) ds / (1 - F(t)) is the mean-excess
auxiliary function, evaluated by quadrature.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

from scipy.integrate import quad

from .distributions import (
    UnivariateDistribution,
    make_exponential,
    make_pareto,
    make_std_normal,
    make_uniform01,
)
from .errors import DomainError, NumericalError
from .max_stable import GUMBEL, FRECHET, WEIBULL, MaxStableLaw, frechet, gumbel, weibull

CLOSED_FORM = "closed_form"
QUANTILE_RECIPE = "quantile_recipe"

# doubling-window cap for the mean-excess integral on an infinite tail
_U_WINDOW_CAP = 2.0 ** 46


@dataclass(frozen=True)
class NormingSequence:
    """n -> (a_n > 0, b_n), tagged with the limit law it targets."""

    scale: Callable[[int], float]
    center: Callable[[int], float]
    target: MaxStableLaw
    provenance: str


def _check_n(n: int) -> int:
    if not isinstance(n, int) or n < 1:
        raise DomainError(f"block size n must be a positive integer, got {n!r}")
    return n


def _const(value: float) -> Callable[[int], float]:
    def sequence(n: int) -> float:
        _check_n(n)
        return value
    return sequence


def closed_form_norming(family: str, alpha: Optional[float] = None) -> NormingSequence:
    """The exact norming sequences of the worked families."""
    if family == "pareto":
        if alpha is None or alpha <= 0.0:
            raise DomainError(f"pareto norming needs alpha > 0, got {alpha!r}")
        a = float(alpha)
        return NormingSequence(
            scale=lambda n: float(_check_n(n)) ** (1.0 / a),
            center=_const(0.0),
            target=frechet(a),
            provenance=CLOSED_FORM,
        )
    if family in ("uniform", "uniform01"):
        return NormingSequence(
            scale=lambda n: 1.0 / _check_n(n),
            center=_const(1.0),
            target=weibull(1.0),
            provenance=CLOSED_FORM,
        )
    if family == "exponential":
        return NormingSequence(
            scale=_const(1.0),
            center=lambda n: math.log(_check_n(n)),
            target=gumbel(),
            provenance=CLOSED_FORM,
        )
    if family in ("normal", "std_normal"):
        def _root(n: int) -> float:
            if _check_n(n) == 1:
                raise DomainError("normal norming is undefined at n = 1 (log log n)")
            return math.sqrt(2.0 * math.log(n))

        return NormingSequence(
            scale=lambda n: 1.0 / _root(n),
            center=lambda n: _root(n) - (math.log(math.log(n)) + math.log(4.0 * math.pi)) / (2.0 * _root(n)),
            target=gumbel(),
            provenance=CLOSED_FORM,
        )
    raise DomainError(f"no closed-form norming for family {family!r}")


def worked_family(family: str, alpha: Optional[float] = None
                  ) -> tuple[UnivariateDistribution, NormingSequence]:
    """Parent distribution and its closed-form norming, by family label."""
    if family == "pareto":
        a = 2.0 if alpha is None else alpha
        return make_pareto(a), closed_form_norming("pareto", a)
    if family in ("uniform", "uniform01"):
        return make_uniform01(), closed_form_norming("uniform01")
    if family == "exponential":
        return make_exponential(), closed_form_norming("exponential")
    if family in ("normal", "std_normal"):
        return make_std_normal(), closed_form_norming("std_normal")
    raise DomainError(f"unknown worked family {family!r}")


def auxiliary_u(F: UnivariateDistribution, t: float) -> float:
    """Mean-excess auxiliary function u(t) = int_t^r(F) sf(s) ds / sf(t).

    On an infinite tail the integral runs over doubling windows until the
    survival has decayed below 1e-18 of sf(t); if the cap is reached while
    the last window still carries a visible share of the mass, the integral
    is declared divergent.
    """
    st = F.sf(t)
    if not st > 0.0:
        raise DomainError(f"survival function vanishes at t={t!r}")

    def rel_sf(s: float) -> float:
        return F.sf(s) / st

    if math.isfinite(F.right_end):
        if t >= F.right_end:
            raise DomainError(f"t={t!r} is not below the right endpoint")
        val, _ = quad(rel_sf, t, F.right_end, epsabs=1e-13, epsrel=1e-11, limit=200)
        return val

    pieces = []
    lo, w = t, 1.0
    while True:
        hi = t + w
        piece, _ = quad(rel_sf, lo, hi, epsabs=1e-13, epsrel=1e-11, limit=200)
        pieces.append(piece)
        if F.sf(hi) < 1e-18 * st:
            break
        if w > _U_WINDOW_CAP:
            total = math.fsum(pieces)
            if piece > 0.05 * total:
                raise DomainError(
                    f"mean-excess integral does not converge for {F.name} (tail too heavy)")
            break
        lo, w = hi, 2.0 * w
    return math.fsum(pieces)


def quantile_norming(F: UnivariateDistribution, target: MaxStableLaw) -> NormingSequence:
    """Generic norming built from the parent's top quantiles."""
    if target.family == WEIBULL and not math.isfinite(F.right_end):
        raise DomainError(
            f"Weibull target is inconsistent with infinite right endpoint of {F.name}")

    def top_quantile(n: int) -> float:
        return F.quantile(1.0 - 1.0 / _check_n(n))

    if target.family == FRECHET:
        return NormingSequence(
            scale=top_quantile,
            center=_const(0.0),
            target=target,
            provenance=QUANTILE_RECIPE,
        )
    if target.family == WEIBULL:
        return NormingSequence(
            scale=lambda n: F.right_end - top_quantile(n),
            center=_const(F.right_end),
            target=target,
            provenance=QUANTILE_RECIPE,
        )
    return NormingSequence(
        scale=lambda n: auxiliary_u(F, top_quantile(n)),
        center=top_quantile,
        target=target,
        provenance=QUANTILE_RECIPE,
    )


def tail_equivalence(F: UnivariateDistribution, seq: NormingSequence, n: int,
                     xs) -> list[float]:
    """n * (1 - F(a_n x + b_n)) over a grid; converges to -log G(x)."""
    _check_n(n)
    a, b = seq.scale(n), seq.center(n)
    return [n * F.sf(a * x + b) for x in xs]
