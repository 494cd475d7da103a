"""Complex-parameter scalar kernel.

Gamma and reciprocal gamma, Pochhammer products, the convergent Gauss 2F1
series, and terminating generalized hypergeometric sums.  Everything here is
a pure function of its inputs.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import (
    DivergenceError,
    MaxTermsError,
    NotTerminatingError,
    PoleError,
)

__all__ = [
    "TruncationPolicy",
    "SeriesValue",
    "DEFAULT_POLICY",
    "pochhammer",
    "gamma",
    "recip_gamma",
    "gauss_2f1",
    "pfq_terminating",
    "KahanSum",
    "nonpos_int_distance",
    "is_nonpos_int",
    "terminating_index",
]

POLE_TOL = 1e-14
INT_TOL = 1e-12


@dataclass(frozen=True)
class TruncationPolicy:
    rel_tol: float = 1e-13
    abs_floor: float = 1e-300
    consecutive_small: int = 3
    max_terms: int = 100000


DEFAULT_POLICY = TruncationPolicy()


@dataclass(frozen=True)
class SeriesValue:
    value: complex
    terms_used: int
    last_term_mag: float
    error_estimate: float
    converged: bool


class KahanSum:
    """Compensated (Kahan) accumulator for complex values."""

    __slots__ = ("total", "carry")

    def __init__(self) -> None:
        self.total = 0j
        self.carry = 0j

    def add(self, value: complex) -> None:
        y = value - self.carry
        t = self.total + y
        self.carry = (t - self.total) - y
        self.total = t

    def value(self) -> complex:
        return self.total


def nonpos_int_distance(z: complex) -> float:
    """Distance from z to the nearest nonpositive integer."""
    z = complex(z)
    k = round(z.real)
    if k > 0:
        k = 0
    return abs(z - k)


def is_nonpos_int(z: complex, tol: float = POLE_TOL) -> bool:
    return nonpos_int_distance(z) <= tol


def terminating_index(a: complex, tol: float = INT_TOL) -> int | None:
    """If -a is a nonnegative integer within tol, return it, else None."""
    a = complex(a)
    k = round(-a.real)
    if k >= 0 and abs(a + k) <= tol:
        return k
    return None


def pochhammer(a: complex, n: int) -> complex:
    """Rising factorial: product of (a+l) for l = 0..n-1.

    Exact product, never formed from gamma ratios, so nonpositive-integer a
    gives an exact zero instead of a pole.
    """
    if n < 0:
        raise ValueError("pochhammer index must be nonnegative")
    result = complex(1.0)
    a = complex(a)
    for l in range(n):
        result *= a + l
    return result


# Lanczos coefficients, Godfrey's set for g = 607/128 (15 terms).
_LANCZOS_G = 607.0 / 128.0
_LANCZOS_C = [
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
]

_HALF_LOG_2PI = 0.5 * math.log(2.0 * math.pi)


def _loggamma_right(z: complex) -> complex:
    # valid for Re z >= 0.5
    zm1 = z - 1.0
    acc = _LANCZOS_C[0]
    for k in range(1, len(_LANCZOS_C)):
        acc += _LANCZOS_C[k] / (zm1 + k)
    t = zm1 + _LANCZOS_G + 0.5
    return _HALF_LOG_2PI + (zm1 + 0.5) * cmath.log(t) - t + cmath.log(acc)


def gamma(z: complex) -> complex:
    """Complex gamma, Lanczos approximation with reflection for Re z < 0.5."""
    z = complex(z)
    if is_nonpos_int(z):
        raise PoleError(f"gamma pole at z = {z}")
    if z.real < 0.5:
        # reflection keeps the Lanczos sum on its accurate half-plane
        return math.pi / (cmath.sin(math.pi * z) * gamma(1.0 - z))
    return cmath.exp(_loggamma_right(z))


def recip_gamma(z: complex) -> complex:
    """Entire reciprocal gamma: exact 0 at nonpositive integers."""
    z = complex(z)
    if is_nonpos_int(z):
        return 0j
    return 1.0 / gamma(z)


def gauss_2f1(
    a: complex,
    b: complex,
    c: complex,
    t: float,
    policy: TruncationPolicy = DEFAULT_POLICY,
) -> SeriesValue:
    """Gauss hypergeometric series by the term-ratio recurrence.

    Nonterminating use requires |t| < 1; a terminating numerator (within
    1e-12 of a nonpositive integer) is summed exactly regardless of t.
    """
    a, b, c = complex(a), complex(b), complex(c)
    t = float(t)
    na = terminating_index(a)
    nb = terminating_index(b)
    n_stop: int | None = None
    if na is not None and nb is not None:
        n_stop = min(na, nb)
    elif na is not None:
        n_stop = na
    elif nb is not None:
        n_stop = nb

    nc = terminating_index(c)
    if nc is not None and (n_stop is None or nc < n_stop):
        raise PoleError(f"2F1 denominator parameter c = {c} hits a pole before termination")
    if n_stop is None and abs(t) >= 1.0:
        raise DivergenceError(f"nonterminating 2F1 at |t| = {abs(t)} >= 1")

    total = complex(1.0)
    term = complex(1.0)
    small_run = 0
    n = 0
    while True:
        if n_stop is not None and n >= n_stop:
            return SeriesValue(total, n + 1, abs(term), 0.0, True)
        if n >= policy.max_terms:
            raise MaxTermsError(f"2F1 did not converge within {policy.max_terms} terms")
        term = term * (a + n) * (b + n) / ((c + n) * (n + 1)) * t
        total += term
        n += 1
        if n_stop is None:
            if abs(term) <= policy.rel_tol * max(abs(total), policy.abs_floor):
                small_run += 1
                if small_run >= policy.consecutive_small:
                    err = abs(term) / max(1.0 - abs(t), 1e-16)
                    return SeriesValue(total, n + 1, abs(term), err, True)
            else:
                small_run = 0


def pfq_terminating(
    numer: list[complex],
    denom: list[complex],
    t: complex,
    n_top: int,
) -> complex:
    """Terminating pFq: exact sum of n_top+1 terms via the term recurrence."""
    if n_top < 0:
        raise ValueError("n_top must be nonnegative")
    numer = [complex(p) for p in numer]
    denom = [complex(q) for q in denom]
    if not any(abs(p + n_top) <= INT_TOL for p in numer):
        raise NotTerminatingError(
            f"no numerator parameter equals -{n_top} within {INT_TOL}"
        )
    for q in denom:
        k = terminating_index(q)
        if k is not None and k < n_top:
            raise PoleError(
                f"denominator parameter {q} vanishes at index {k + 1} <= {n_top}"
            )
    t = complex(t)
    total = complex(1.0)
    term = complex(1.0)
    for k in range(n_top):
        ratio = t / (k + 1)
        for p in numer:
            ratio *= p + k
        for q in denom:
            ratio /= q + k
        term = term * ratio
        total += term
    return total
