"""The three max-stable laws, their k-th extreme limits, and closed-form entropies.

Families (alpha > 0 where present):

    Frechet   cdf exp(-x^-alpha)   on x >= 0, 0 below
    Weibull   cdf exp(-|x|^alpha)  on x < 0,  1 from 0 on
    Gumbel    cdf exp(-e^-x)       on all of R

The k-th extreme limit attached to a law G with density g has cdf

    K_k(x) = G(x) * sum_{i=0}^{k-1} (-log G(x))^i / i!

on {G > 0} (zero elsewhere) and density

    K_k'(x) = g(x) * (-log G(x))^(k-1) / (k-1)!

so k = 1 reduces to G itself.  Deep in the lower tail -log G(x) explodes;
all evaluations therefore run through logarithms and only exponentiate at
the end.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .errors import DomainError
from .special import EULER_GAMMA, a_of_k, gamma_fn

FRECHET = "frechet"
WEIBULL = "weibull"
GUMBEL = "gumbel"
FAMILIES = (FRECHET, WEIBULL, GUMBEL)

# math.exp overflows past ~709.78; larger arguments are settled in log space
_EXP_MAX = 709.0


@dataclass(frozen=True)
class MaxStableLaw:
    family: str
    alpha: Optional[float] = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise DomainError(f"unknown max-stable family {self.family!r}")
        if self.family == GUMBEL:
            if self.alpha is not None:
                raise DomainError("the Gumbel law has no shape parameter")
        elif self.alpha is None or self.alpha <= 0.0:
            raise DomainError(f"{self.family} needs alpha > 0, got {self.alpha!r}")


def frechet(alpha: float) -> MaxStableLaw:
    return MaxStableLaw(FRECHET, float(alpha))


def weibull(alpha: float) -> MaxStableLaw:
    return MaxStableLaw(WEIBULL, float(alpha))


def gumbel() -> MaxStableLaw:
    return MaxStableLaw(GUMBEL)


def support(law: MaxStableLaw) -> tuple[float, float]:
    """Open interval where the density is positive."""
    if law.family == FRECHET:
        return (0.0, math.inf)
    if law.family == WEIBULL:
        return (-math.inf, 0.0)
    return (-math.inf, math.inf)


def neg_log_cdf(law: MaxStableLaw, x: float) -> float:
    """-log G(x), the exponent of the max-stable cdf; in [0, inf]."""
    if law.family == FRECHET:
        return x ** -law.alpha if x > 0.0 else math.inf
    if law.family == WEIBULL:
        return (-x) ** law.alpha if x < 0.0 else 0.0
    return math.exp(-x) if x > -_EXP_MAX else math.inf


def cdf(law: MaxStableLaw, x: float) -> float:
    s = neg_log_cdf(law, x)
    return math.exp(-s) if s < math.inf else 0.0


def logpdf(law: MaxStableLaw, x: float) -> float:
    if law.family == FRECHET:
        if x <= 0.0:
            return -math.inf
        a = law.alpha
        return math.log(a) - (a + 1.0) * math.log(x) - x ** -a
    if law.family == WEIBULL:
        if x >= 0.0:
            return -math.inf
        a = law.alpha
        return math.log(a) + (a - 1.0) * math.log(-x) - (-x) ** a
    if x < -_EXP_MAX:
        return -math.inf
    return -x - math.exp(-x)


def pdf(law: MaxStableLaw, x: float) -> float:
    lp = logpdf(law, x)
    return math.exp(lp) if lp > -math.inf else 0.0


def quantile(law: MaxStableLaw, p: float) -> float:
    """Inverse cdf; endpoints are returned at p = 0 and p = 1."""
    if not 0.0 <= p <= 1.0:
        raise DomainError(f"probability must lie in [0, 1], got {p!r}")
    if p == 0.0:
        return support(law)[0]
    if p == 1.0:
        return support(law)[1]
    s = -math.log(p)
    if law.family == FRECHET:
        return s ** (-1.0 / law.alpha)
    if law.family == WEIBULL:
        return -(s ** (1.0 / law.alpha))
    return -math.log(s)


def entropy(law: MaxStableLaw) -> float:
    """Closed-form Shannon entropy of the max-stable law."""
    g = EULER_GAMMA
    if law.family == FRECHET:
        a = law.alpha
        return -math.log(a) + (a + 1.0) / a * g + 1.0
    if law.family == WEIBULL:
        a = law.alpha
        return -math.log(a) + (a - 1.0) / a * g + 1.0
    return g + 1.0


@dataclass(frozen=True)
class KthExtremeLimit:
    """Limit law of the k-th upper extreme attached to a max-stable law."""

    law: MaxStableLaw
    k: int = 1

    def __post_init__(self):
        if not isinstance(self.k, int) or self.k < 1:
            raise DomainError(f"k must be a positive integer, got {self.k!r}")


def kth_support(lim: KthExtremeLimit) -> tuple[float, float]:
    return support(lim.law)


def kth_cdf(lim: KthExtremeLimit, x: float) -> float:
    """K_k(x); equals 0 wherever G(x) = 0."""
    s = neg_log_cdf(lim.law, x)
    if s == math.inf:
        return 0.0
    if s == 0.0:
        return 1.0
    if s < _EXP_MAX:
        term = 1.0
        total = 1.0
        for i in range(1, lim.k):
            term *= s / i
            total += term
        return math.exp(-s) * total
    # exp(-s) underflows: sum the k terms in log space
    logs = math.log(s)
    top = max(-s + i * logs - math.lgamma(i + 1.0) for i in range(lim.k))
    if top < -745.0:
        return 0.0
    acc = sum(math.exp(-s + i * logs - math.lgamma(i + 1.0) - top) for i in range(lim.k))
    return math.exp(top) * acc


def kth_logpdf(lim: KthExtremeLimit, x: float) -> float:
    s = neg_log_cdf(lim.law, x)
    if s == 0.0 or s == math.inf:
        return -math.inf
    base = logpdf(lim.law, x)
    if base == -math.inf:
        return -math.inf
    if lim.k == 1:
        return base
    return base + (lim.k - 1.0) * math.log(s) - math.lgamma(lim.k)


def kth_pdf(lim: KthExtremeLimit, x: float) -> float:
    lp = kth_logpdf(lim, x)
    return math.exp(lp) if lp > -math.inf else 0.0


def kth_entropy(lim: KthExtremeLimit) -> float:
    """Closed-form entropy of K_k.

    With t = -gamma + H_{k-1} (the scaled log-moment a_of_k(k)/(k-1)!):

        Frechet  -log(alpha/(k-1)!) - ((alpha k + 1)/alpha) t + Gamma(k+1)/(k-1)!
        Weibull  -log(alpha/(k-1)!) - ((alpha k - 1)/alpha) t + Gamma(k+1)/(k-1)!
        Gumbel    log((k-1)!)       -           k           t + Gamma(k+1)/(k-1)!
    """
    k = lim.k
    fac = math.factorial(k - 1)
    t = a_of_k(k) / fac
    tail = gamma_fn(k + 1.0) / fac
    if lim.law.family == FRECHET:
        a = lim.law.alpha
        return -math.log(a / fac) - (a * k + 1.0) / a * t + tail
    if lim.law.family == WEIBULL:
        a = lim.law.alpha
        return -math.log(a / fac) - (a * k - 1.0) / a * t + tail
    return math.log(fac) - k * t + tail


def kth_window(lim: KthExtremeLimit, tail: float) -> tuple[float, float]:
    """Finite interval holding all but ~``tail`` of the K_k mass.

    The upper cut reuses the base law's quantile (K_k is stochastically
    below G).  The lower cut solves t * s^(k-1)/(k-1)! = tail/2 for the
    base-law level t (s = -log t) by a short fixed-point iteration, since
    the k-th extreme carries more mass toward the lower support edge.
    """
    if not 0.0 < tail < 1.0:
        raise DomainError(f"tail must lie in (0, 1), got {tail!r}")
    half = tail / 2.0
    t = half
    if lim.k > 1:
        fac = math.factorial(lim.k - 1)
        for _ in range(4):
            s = -math.log(t)
            t = max(half * fac / s ** (lim.k - 1), 1e-300)
    return (quantile(lim.law, t), quantile(lim.law, 1.0 - half))
