"""Special constants and exact small integrals used by the closed forms.

Everything here is a pure function of its arguments; the heavy lifting
(Gamma itself) is delegated to scipy's implementation, which is validated
against factorials and sqrt(pi) in the test suite.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from scipy.special import gamma as _scipy_gamma

from .errors import DomainError

#: Euler-Mascheroni constant, the limit of H_n - log n.
EULER_GAMMA = 0.5772156649015329

#: Direct-summation cutoff for harmonic numbers.  Beyond it the asymptotic
#: expansion gamma + log n + 1/(2n) - 1/(12 n^2) is exact to ~1e-30, far
#: below float64 resolution, while summation would cost seconds.
HARMONIC_CROSSOVER = 10_000_000


@dataclass(frozen=True)
class SpecialConstants:
    euler_gamma: float = EULER_GAMMA
    precision: int = 15  # significant decimal digits carried by float64


CONSTANTS = SpecialConstants()


@lru_cache(maxsize=4096)
def harmonic(n: int) -> float:
    """n-th harmonic number H_n = sum_{k<=n} 1/k, by compensated summation."""
    if n < 1:
        raise DomainError(f"harmonic requires n >= 1, got {n!r}")
    if n <= HARMONIC_CROSSOVER:
        return math.fsum(1.0 / k for k in range(1, n + 1))
    return EULER_GAMMA + math.log(n) + 1.0 / (2.0 * n) - 1.0 / (12.0 * n * n)


def gamma_fn(x: float) -> float:
    """Gamma function on the positive half line."""
    if x <= 0.0:
        raise DomainError(f"gamma_fn requires x > 0, got {x!r}")
    return float(_scipy_gamma(x))


def a_of_k(k: int) -> float:
    """Log-moment of the Gamma kernel: integral of u^(k-1) e^-u log u on (0, inf).

    Evaluates the closed form (k-1)! * (-gamma + H_{k-1}), which is -gamma
    at k = 1; the defining integral is kept as an independent test oracle.
    """
    if k < 1:
        raise DomainError(f"a_of_k requires k >= 1, got {k!r}")
    if k == 1:
        return -EULER_GAMMA
    return math.factorial(k - 1) * (-EULER_GAMMA + harmonic(k - 1))


def digamma_at_one_moments(k: int) -> float:
    """Raw moment of the Gumbel law: gamma for k=1, gamma^2 + pi^2/6 for k=2."""
    if k == 1:
        return EULER_GAMMA
    if k == 2:
        return EULER_GAMMA * EULER_GAMMA + math.pi * math.pi / 6.0
    raise DomainError(f"only Gumbel moments k in {{1, 2}} are supported, got {k!r}")
