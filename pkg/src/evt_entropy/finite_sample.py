"""Exact finite-n laws of the normalized k-th upper extreme.

For a parent F with pdf f, norming (a_n, b_n), and y = a_n x + b_n, the
normalized maximum (k = 1) has density

    g_n(x) = n a_n F^(n-1)(y) f(y)

and the k-th upper extreme X_{n-k+1:n} has density

    g_{k:n}(x) = n!/((k-1)!(n-k)!) a_n f(y) F^(n-k)(y) (1 - F(y))^(k-1),

with cdf the binomial tail sum_{i<k} C(n,i) (1-F)^i F^(n-i).  Every power
is assembled as exp of a sum of logs (log F through log1p of the survival
function, factorial ratios through lgamma) so n up to 10^6 and beyond
neither underflows nor overflows.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from scipy.stats import beta as _beta

from .distributions import UnivariateDistribution
from .errors import DomainError
from .norming import NormingSequence


@dataclass(frozen=True)
class FiniteSampleLaw:
    """Law of (X_{n-k+1:n} - b_n) / a_n for an iid block of size n."""

    parent: UnivariateDistribution
    norming: NormingSequence
    n: int
    k: int = 1
    a: float = field(init=False, repr=False)
    b: float = field(init=False, repr=False)

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise DomainError(f"n must be a positive integer, got {self.n!r}")
        if not isinstance(self.k, int) or not 1 <= self.k <= self.n:
            raise DomainError(f"k must satisfy 1 <= k <= n, got k={self.k!r}, n={self.n!r}")
        a = self.norming.scale(self.n)
        if not a > 0.0:
            raise DomainError(f"norming scale must be positive, got {a!r} at n={self.n}")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", self.norming.center(self.n))


def _log_cdf(parent: UnivariateDistribution, y: float, sf: float) -> float:
    """log F(y), via log1p(-sf) whenever the survival is the small quantity."""
    if sf < 0.5:
        return math.log1p(-sf)
    c = parent.cdf(y)
    return math.log(c) if c > 0.0 else -math.inf


def log_density(law: FiniteSampleLaw, x: float) -> float:
    y = law.a * x + law.b
    f = law.parent.pdf(y)
    if not f > 0.0:
        return -math.inf
    sf = law.parent.sf(y)
    log_f_cdf = _log_cdf(law.parent, y, sf)
    if log_f_cdf == -math.inf:
        return -math.inf
    n, k = law.n, law.k
    if k == 1:
        return math.log(n) + math.log(law.a) + (n - 1) * log_f_cdf + math.log(f)
    if not sf > 0.0:
        return -math.inf
    log_comb = math.lgamma(n + 1.0) - math.lgamma(n - k + 1.0) - math.lgamma(float(k))
    return (log_comb + math.log(law.a) + math.log(f)
            + (n - k) * log_f_cdf + (k - 1) * math.log(sf))


def density(law: FiniteSampleLaw, x: float) -> float:
    lp = log_density(law, x)
    return math.exp(lp) if lp > -math.inf else 0.0


def cdf(law: FiniteSampleLaw, x: float) -> float:
    """P(normalized k-th extreme <= x): at most k-1 block members above y."""
    y = law.a * x + law.b
    sf = law.parent.sf(y)
    log_f_cdf = _log_cdf(law.parent, y, sf)
    if log_f_cdf == -math.inf:
        return 0.0
    n, k = law.n, law.k
    if k == 1:
        return math.exp(n * log_f_cdf)
    if not sf > 0.0:
        return 1.0
    log_sf = math.log(sf)
    total = 0.0
    for i in range(k):
        log_term = (math.lgamma(n + 1.0) - math.lgamma(i + 1.0) - math.lgamma(n - i + 1.0)
                    + i * log_sf + (n - i) * log_f_cdf)
        total += math.exp(log_term)
    return min(total, 1.0)


def support(law: FiniteSampleLaw) -> tuple[float, float]:
    """Affine image of the parent support: ((l(F)-b_n)/a_n, (r(F)-b_n)/a_n)."""
    lo = (law.parent.left_end - law.b) / law.a
    hi = (law.parent.right_end - law.b) / law.a
    return (lo, hi)


def quantile(law: FiniteSampleLaw, p: float) -> float:
    """Quantile via the uniform order statistic: X_{n-k+1:n} = F^-1(B),
    B ~ Beta(n-k+1, k)."""
    if not 0.0 < p < 1.0:
        raise DomainError(f"quantile needs 0 < p < 1, got {p!r}")
    u = float(_beta.ppf(p, law.n - law.k + 1, law.k))
    return (law.parent.quantile(u) - law.b) / law.a
