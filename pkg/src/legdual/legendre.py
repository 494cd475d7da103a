"""First-kind Ferrers functions on (-1,1), associated Legendre functions of
the first and second kind on (1,infinity), complex degree and order.

All fractional powers have positive real bases on the supported windows and
are taken as principal values.  The reciprocal-gamma prefactor makes the
values entire in the order parameter wherever the underlying series
terminates; the nonterminating pole limit is surfaced as a typed error.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from enum import Enum

from .errors import DomainError, EntireLimitUnsupported, PoleError
from .hypergeom import (
    DEFAULT_POLICY,
    SeriesValue,
    TruncationPolicy,
    gamma,
    gauss_2f1,
    is_nonpos_int,
    recip_gamma,
    terminating_index,
)

__all__ = [
    "Domain",
    "Argument",
    "ParameterPoint",
    "ferrers_p",
    "legendre_p",
    "legendre_q",
    "ferrers_p_large_x_form",
]


class Domain(Enum):
    FERRERS = "ferrers"
    LEGENDRE = "legendre"


@dataclass(frozen=True)
class Argument:
    """Evaluation point with its interval tag and hyperbolic coordinate."""

    x: float
    domain: Domain = field(init=False)
    alpha: float = field(init=False)

    def __post_init__(self) -> None:
        x = float(self.x)
        if not math.isfinite(x) or x <= -1.0 or x == 1.0:
            raise DomainError(f"argument x = {x} outside (-1,1) union (1,inf)")
        if x < 1.0:
            dom = Domain.FERRERS
            alpha = math.atanh(x) if x > 0.0 else math.nan
        else:
            dom = Domain.LEGENDRE
            alpha = math.atanh(1.0 / x)
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "domain", dom)
        object.__setattr__(self, "alpha", alpha)


@dataclass(frozen=True)
class ParameterPoint:
    nu: complex
    mu: complex

    def __post_init__(self) -> None:
        object.__setattr__(self, "nu", complex(self.nu))
        object.__setattr__(self, "mu", complex(self.mu))


def _as_argument(x: "Argument | float") -> Argument:
    return x if isinstance(x, Argument) else Argument(float(x))


def _f_over_gamma_c(
    a: complex,
    b: complex,
    c: complex,
    t: float,
    policy: TruncationPolicy,
) -> SeriesValue:
    """2F1(a,b;c;t)/Gamma(c), entire in c.

    At nonpositive-integer c the value is the terminating-series limit; it
    exists only when a or b terminates the series.
    """
    if not is_nonpos_int(c):
        sv = gauss_2f1(a, b, c, t, policy)
        rg = recip_gamma(c)
        scale = abs(rg)
        return SeriesValue(sv.value * rg, sv.terms_used, sv.last_term_mag * scale,
                           sv.error_estimate * scale, sv.converged)
    na = terminating_index(a)
    nb = terminating_index(b)
    n_stop = min(k for k in (na, nb) if k is not None) if (na is not None or nb is not None) else None
    if n_stop is None:
        raise EntireLimitUnsupported(
            f"1/Gamma({c}) vanishes and the series does not terminate"
        )
    m = int(round(-c.real))
    # terms below index m+1 are killed by the reciprocal gamma
    total = 0j
    if n_stop >= m + 1:
        # term_n = (a)_n (b)_n t^n / (n! (n-m-1)!) starting at n = m+1
        term = complex(1.0)
        for l in range(m + 1):
            term *= (a + l) * (b + l)
        term *= t ** (m + 1) / math.factorial(m + 1)
        total = term
        for n in range(m + 1, n_stop):
            term *= (a + n) * (b + n) * t / ((n + 1) * (n - m))
            total += term
    return SeriesValue(total, max(n_stop - m, 0), 0.0, 0.0, True)


def _scaled(prefactor: complex, sv: SeriesValue) -> SeriesValue:
    s = abs(prefactor)
    return SeriesValue(prefactor * sv.value, sv.terms_used, sv.last_term_mag * s,
                       sv.error_estimate * s, sv.converged)


def ferrers_p(p: ParameterPoint, x: "Argument | float",
              policy: TruncationPolicy = DEFAULT_POLICY) -> SeriesValue:
    """Ferrers function of the first kind, order -mu, degree nu, on (-1,1)."""
    arg = _as_argument(x)
    if arg.domain is not Domain.FERRERS:
        raise DomainError(f"ferrers_p requires -1 < x < 1, got {arg.x}")
    nu, mu = p.nu, p.mu
    t = (1.0 - arg.x) / 2.0
    if arg.x <= 0.0:
        terminates = (terminating_index(-nu) is not None
                      or terminating_index(nu + 1) is not None)
        if not terminates:
            raise DomainError(
                "x <= 0 is supported only when the hypergeometric series terminates"
            )
    sv = _f_over_gamma_c(-nu, nu + 1.0, 1.0 + mu, t, policy)
    base = (1.0 - arg.x) / (1.0 + arg.x)
    prefactor = cmath.exp(0.5 * mu * math.log(base))
    return _scaled(prefactor, sv)


def legendre_p(p: ParameterPoint, x: "Argument | float",
               policy: TruncationPolicy = DEFAULT_POLICY) -> SeriesValue:
    """Associated Legendre function of the first kind, order -mu, on (1,inf)."""
    arg = _as_argument(x)
    if arg.domain is not Domain.LEGENDRE:
        raise DomainError(f"legendre_p requires x > 1, got {arg.x}")
    nu, mu = p.nu, p.mu
    t = (arg.x - 1.0) / (arg.x + 1.0)
    sv = _f_over_gamma_c(-nu, mu - nu, 1.0 + mu, t, policy)
    prefactor = cmath.exp(
        -nu * math.log(2.0)
        + 0.5 * mu * math.log(arg.x - 1.0)
        + (nu - 0.5 * mu) * math.log(arg.x + 1.0)
    )
    return _scaled(prefactor, sv)


def legendre_q(p: ParameterPoint, x: "Argument | float",
               policy: TruncationPolicy = DEFAULT_POLICY) -> SeriesValue:
    """Second-kind associated Legendre function on (1,inf), via the
    first-kind function at the reciprocal-like argument x/sqrt(x^2-1)."""
    arg = _as_argument(x)
    if arg.domain is not Domain.LEGENDRE:
        raise DomainError(f"legendre_q requires x > 1, got {arg.x}")
    nu, mu = p.nu, p.mu
    if is_nonpos_int(nu - mu + 1.0):
        raise PoleError(f"gamma prefactor pole at nu - mu + 1 = {nu - mu + 1.0}")
    x2m1 = arg.x * arg.x - 1.0
    inner = Argument(arg.x / math.sqrt(x2m1))
    sv = legendre_p(ParameterPoint(mu - 0.5, nu + 0.5), inner, policy)
    prefactor = (math.sqrt(math.pi / 2.0) * cmath.exp(-1j * math.pi * mu)
                 * gamma(nu - mu + 1.0) * x2m1 ** -0.25)
    return _scaled(prefactor, sv)


def ferrers_p_large_x_form(p: ParameterPoint, x: "Argument | float",
                           policy: TruncationPolicy = DEFAULT_POLICY) -> SeriesValue:
    """Alternative quadratic-argument evaluation path, valid for x > 1/sqrt(2)."""
    arg = _as_argument(x)
    if not (arg.x > 1.0 / math.sqrt(2.0)):
        raise DomainError(
            f"quadratic-argument form requires x > 1/sqrt(2), got {arg.x}"
        )
    nu, mu = p.nu, p.mu
    t = 1.0 - 1.0 / (arg.x * arg.x)
    sv = _f_over_gamma_c(0.5 * (mu - nu), 0.5 * (mu - nu + 1.0), 1.0 + mu, t, policy)
    prefactor = cmath.exp(
        -mu * math.log(2.0)
        + 0.5 * mu * math.log(abs(1.0 - arg.x * arg.x))
        + (nu - mu) * math.log(arg.x)
    )
    return _scaled(prefactor, sv)
