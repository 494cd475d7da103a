"""Catalog of argument-inversion identities.

Each entry pairs a closed-form left-hand side with an indexed right-hand-side
term generator.  Infinite series are summed directly under the truncation
policy; series with slow algebraic tails are finished with Wynn epsilon
extrapolation on the partial sums.  All identities are stated for x in a
subinterval of (0,1); reciprocal arguments are formed inside the term
generators.
"""

from __future__ import annotations

import cmath
import math
import random
from dataclasses import dataclass
from enum import Enum

from .coeffs import (
    FactorList,
    frak_N,
    frak_p,
    lauricella_G,
    script_G,
    script_G_hat,
)
from .errors import ConvergenceError, DomainError, PoleError, UnknownIdentityError
from .hypergeom import (
    DEFAULT_POLICY,
    KahanSum,
    TruncationPolicy,
    gamma,
    pochhammer,
    recip_gamma,
    terminating_index,
)
from .legendre import Argument, Domain, ParameterPoint, ferrers_p, legendre_p
from .polys import bateman_g, gegenbauer, mittag_leffler_g

__all__ = [
    "Kind",
    "IdentityDescriptor",
    "IdentityReport",
    "list_identities",
    "get_descriptor",
    "evaluate_identity",
    "sweep_identity",
    "TOL_FINITE",
    "TOL_SERIES",
    "TOL_BOUNDARY",
]

INV_SQRT2 = 2.0**-0.5
SQRT_PI = math.sqrt(math.pi)

TOL_FINITE = 1e-11
TOL_SERIES = 1e-9
TOL_BOUNDARY = 1e-6

_DIRECT_CAP = 48
_TINY = 1e-300


class Kind(Enum):
    INFINITE_SERIES = "infinite_series"
    FINITE_SUM = "finite_sum"
    VANISHING_SUM = "vanishing_sum"


@dataclass(frozen=True)
class IdentityDescriptor:
    id: str
    kind: Kind
    param_domain: str
    x_domain: str
    lhs: object
    rhs_term: object
    termination_rule: "str | None"


@dataclass(frozen=True)
class IdentityReport:
    id: str
    params: dict
    x: float
    lhs: complex
    rhs: complex
    abs_err: float
    rel_err: float
    terms_used: int
    passed: bool
    tolerance_used: float
    error: "str | None" = None

    def to_dict(self) -> dict:
        out = {
            "id": self.id,
            "params": {
                k: ([v.real, v.imag] if isinstance(v, complex) else v)
                for k, v in self.params.items()
            },
            "x": self.x,
            "lhs": [self.lhs.real, self.lhs.imag],
            "rhs": [self.rhs.real, self.rhs.imag],
            "abs_err": self.abs_err,
            "rel_err": self.rel_err,
            "terms_used": self.terms_used,
            "passed": self.passed,
            "tolerance": self.tolerance_used,
        }
        if self.error is not None:
            out["error"] = self.error
        return out


def _cpow(base: float, expo: complex) -> complex:
    """Principal power of a positive real base."""
    base = float(base)
    if base <= 0.0:
        raise DomainError(f"power base {base} must be positive")
    return cmath.exp(complex(expo) * math.log(base))


def _P_int(k: int, m: int, x: float) -> float:
    """P of integer degree k >= 0 and signed integer order m, both argument
    ranges, via the degree recurrence.

    The recurrence is forward-stable where the terminating hypergeometric
    series cancels catastrophically (large degree, moderate x)."""
    if m < 0:
        mm = -m
        if mm > k:
            return 0.0
        ratio = math.factorial(k - mm) / math.factorial(k + mm)
        if x < 1.0 and mm % 2:
            ratio = -ratio
        return ratio * _P_int(k, mm, x)
    if m > k:
        return 0.0
    # seed P_m^m, then raise the degree
    if x < 1.0:
        base = math.sqrt(1.0 - x * x)
        pmm = (-base) ** m
    else:
        base = math.sqrt(x * x - 1.0)
        pmm = base ** m
    for i in range(1, 2 * m, 2):
        pmm *= i
    if k == m:
        return pmm
    prev, cur = pmm, (2.0 * m + 1.0) * x * pmm
    for deg in range(m + 1, k):
        prev, cur = cur, ((2.0 * deg + 1.0) * x * cur - (deg + m) * prev) / (deg - m + 1.0)
    return cur


def _as_int(z: complex) -> "int | None":
    z = complex(z)
    n = round(z.real)
    if abs(z.imag) <= 1e-14 and abs(z.real - n) <= 1e-14:
        return int(n)
    return None


def _P(nu: complex, mu: complex, x: float,
       policy: TruncationPolicy = DEFAULT_POLICY) -> complex:
    """First-kind function of degree nu and order -mu at x, dispatching on
    the argument interval."""
    k = _as_int(nu)
    m = _as_int(mu)
    if k is not None and m is not None and k >= 0:
        return complex(_P_int(k, -m, x))
    arg = Argument(x)
    pt = ParameterPoint(nu, mu)
    if arg.domain is Domain.FERRERS:
        return ferrers_p(pt, arg, policy).value
    return legendre_p(pt, arg, policy).value


def _bateman(n: int, tau: complex, r: complex) -> complex:
    """Coefficient of z^n in (1+z)^(tau+r) (1-z)^(-tau); falls back to the
    two-factor product form when the polynomial form hits a removable pole."""
    try:
        return bateman_g(n, tau, r)
    except PoleError:
        f = FactorList((-(complex(tau) + complex(r)), complex(tau)), (-1.0, 1.0))
        return lauricella_G(n, f)


def _poch_signed(a: complex, n: int) -> complex:
    """Rising factorial extended to negative index: (a)_{-j} = 1/(a-j)_j."""
    if n >= 0:
        return pochhammer(a, n)
    return 1.0 / pochhammer(complex(a) + n, -n)


def _away_from_ints(z: complex, margin: float = 0.15) -> bool:
    z = complex(z)
    return abs(z.imag) >= margin or abs(z.real - round(z.real)) >= margin


def _wynn_accelerate(partials: list) -> tuple:
    """Wynn epsilon extrapolation; returns (value, error estimate)."""
    if len(partials) < 4:
        return partials[-1], float("inf")
    e_prev = [0j] * (len(partials) + 1)
    e_cur = list(partials)
    best = partials[-1]
    best_err = abs(partials[-1] - partials[-2])
    col = 0
    try:
        while len(e_cur) > 2:
            e_next = []
            for i in range(len(e_cur) - 1):
                d = e_cur[i + 1] - e_cur[i]
                if d == 0:
                    return e_cur[i + 1], 0.0
                e_next.append(e_prev[i + 1] + 1.0 / d)
            e_prev, e_cur = e_cur, e_next
            col += 1
            if col % 2 == 0 and len(e_cur) >= 2:
                err = abs(e_cur[-1] - e_cur[-2])
                if err < best_err:
                    best, best_err = e_cur[-1], err
    except (OverflowError, ZeroDivisionError):
        pass
    return best, best_err


class _Impl:
    def __init__(self, ident, kind, lhs, term, n_top=None, sampler=None,
                 x_grid=(0.35, 0.6, 0.8), x_window=None, boundary_ok=None,
                 param_check=None, param_domain="", x_domain="(0,1)",
                 termination_rule=None, direct_cap=None):
        self.id = ident
        self.kind = kind
        self.lhs = lhs
        self.term = term
        self._n_top = n_top
        self.sampler = sampler
        self.x_grid = tuple(x_grid)
        self._x_window = x_window
        self._boundary_ok = boundary_ok
        self._param_check = param_check
        self.param_domain = param_domain
        self.x_domain = x_domain
        self.termination_rule = termination_rule
        self.direct_cap = _DIRECT_CAP if direct_cap is None else direct_cap

    def n_top(self, p) -> "int | None":
        if self._n_top is None:
            return None
        return self._n_top(p)

    def check_domain(self, p, x: float) -> None:
        if self._param_check is not None:
            self._param_check(p)
        lo, hi = (0.0, 1.0) if self._x_window is None else self._x_window(p)
        if lo < x < hi:
            return
        if abs(x - lo) <= 1e-12 and lo > 0.0:
            if self._boundary_ok is not None and self._boundary_ok(p):
                return
            raise DomainError(
                f"{self.id}: boundary x = {x} requires the stated parameter condition"
            )
        raise DomainError(f"{self.id}: x = {x} outside ({lo}, {hi})")

    def at_boundary(self, p, x: float) -> bool:
        if self._x_window is None:
            return False
        lo, _ = self._x_window(p)
        return lo > 0.0 and abs(x - lo) <= 1e-12

    def descriptor(self) -> IdentityDescriptor:
        return IdentityDescriptor(
            id=self.id,
            kind=self.kind,
            param_domain=self.param_domain,
            x_domain=self.x_domain,
            lhs=self.lhs,
            rhs_term=self.term,
            termination_rule=self.termination_rule,
        )


_REGISTRY: "dict[str, _Impl]" = {}


def _register(impl: _Impl) -> None:
    if impl.id in _REGISTRY:
        raise ValueError(f"duplicate identity id {impl.id}")
    _REGISTRY[impl.id] = impl


def _get_impl(identity_id: str) -> _Impl:
    try:
        return _REGISTRY[identity_id]
    except KeyError:
        raise UnknownIdentityError(f"unknown identity id '{identity_id}'") from None


def _sum_terms(impl: _Impl, p, x: float, policy: TruncationPolicy):
    """Sum the right-hand side; returns (value, terms_used, max |term|)."""
    n_top = impl.n_top(p)
    acc = KahanSum()
    partials = []
    mags = []
    small = 0
    max_mag = 0.0
    cap = min(impl.direct_cap, policy.max_terms)
    n = 0
    while True:
        if n_top is not None and n > n_top:
            return acc.value(), n, max_mag
        t = impl.term(p, x, n, policy)
        acc.add(t)
        m = abs(t)
        max_mag = max(max_mag, m)
        mags.append(m)
        partials.append(acc.value())
        n += 1
        if n_top is not None:
            continue
        if m <= policy.rel_tol * max(abs(acc.value()), policy.abs_floor):
            small += 1
            if small >= policy.consecutive_small:
                return acc.value(), n, max_mag
        else:
            small = 0
        if n >= cap:
            break
    # tail did not pass the direct test: growing tails are an error,
    # slowly decaying ones are extrapolated
    if sum(mags[-6:]) > 1.5 * sum(mags[-12:-6]):
        grows = True
        try:
            from .asympt import tail_order_predict

            lo = tail_order_predict(impl.id, n - 8, dict(p), x)
            hi = tail_order_predict(impl.id, n, dict(p), x)
            grows = hi >= lo
        except UnknownIdentityError:
            pass
        if grows:
            raise ConvergenceError(
                f"{impl.id}: series terms do not decay at x = {x}"
            )
    value, _ = _wynn_accelerate(partials)
    return value, n, max_mag


def evaluate_identity(identity_id: str, params: dict, x: float,
                      policy: TruncationPolicy = DEFAULT_POLICY) -> IdentityReport:
    impl = _get_impl(identity_id)
    p = dict(params)
    x = float(x)
    impl.check_domain(p, x)
    lhs = complex(impl.lhs(p, x, policy))
    rhs, terms_used, max_mag = _sum_terms(impl, p, x, policy)
    abs_err = abs(lhs - rhs)
    if impl.kind is Kind.VANISHING_SUM:
        tol = TOL_FINITE
        scale = max(max_mag, _TINY)
        rel_err = abs_err / scale
        passed = abs_err <= tol * scale
    else:
        if impl.kind is Kind.FINITE_SUM:
            tol = TOL_FINITE
        elif impl.at_boundary(p, x):
            tol = TOL_BOUNDARY
        else:
            tol = TOL_SERIES
        scale = max(abs(lhs), abs(rhs), _TINY)
        rel_err = abs_err / scale
        passed = rel_err <= tol
        if not passed and impl.kind is Kind.FINITE_SUM:
            # alternating sums whose terms dwarf their value cannot beat
            # the tolerance relative to the value in double precision;
            # the max-term scale measures the identity itself
            passed = abs_err <= tol * max(max_mag, _TINY)
    return IdentityReport(
        id=identity_id, params=p, x=x, lhs=lhs, rhs=rhs,
        abs_err=abs_err, rel_err=rel_err, terms_used=terms_used,
        passed=passed, tolerance_used=tol,
    )


def sweep_identity(identity_id: str, param_sampler=None, x_grid=None,
                   policy: TruncationPolicy = DEFAULT_POLICY,
                   n_samples: int = 30, seed: int = 0) -> list:
    """Evaluate an identity over sampled parameters and an x grid.

    `param_sampler` may be an explicit list of parameter dicts or a callable
    taking a random.Random; by default the identity's own sampler is used.
    Per-point errors are collected into failed reports, never raised.
    """
    impl = _get_impl(identity_id)
    rng = random.Random(seed)
    if param_sampler is None:
        param_sampler = impl.sampler
    if callable(param_sampler):
        samples = [param_sampler(rng) for _ in range(n_samples)]
    else:
        samples = [dict(s) for s in param_sampler]
    grid = tuple(x_grid) if x_grid is not None else impl.x_grid
    reports = []
    for p in samples:
        for x in grid:
            try:
                reports.append(evaluate_identity(identity_id, p, x, policy))
            except Exception as exc:  # collected, not thrown
                reports.append(IdentityReport(
                    id=identity_id, params=dict(p), x=float(x),
                    lhs=0j, rhs=0j, abs_err=float("nan"),
                    rel_err=float("nan"), terms_used=0, passed=False,
                    tolerance_used=0.0,
                    error=f"{type(exc).__name__}: {exc}",
                ))
    return reports


def list_identities() -> list:
    return [impl.descriptor() for impl in _REGISTRY.values()]


def get_descriptor(identity_id: str) -> IdentityDescriptor:
    return _get_impl(identity_id).descriptor()


# --------------------------------------------------------------------------
# samplers

def _draw_box(rng: random.Random) -> complex:
    return complex(rng.uniform(-1.5, 2.5), rng.uniform(-1.0, 1.0))


def _guarded_pair(*, guards, re_nu=None, extra=None):
    """Sampler for (nu, mu) in the default box, redrawing near pole sets."""

    def sample(rng: random.Random) -> dict:
        while True:
            nu = _draw_box(rng)
            if re_nu is not None:
                nu = complex(rng.uniform(*re_nu), nu.imag)
            mu = _draw_box(rng)
            p = {"nu": nu, "mu": mu}
            if all(_away_from_ints(g(nu, mu)) for g in guards):
                if extra is None or extra(nu, mu):
                    return p

    return sample


def _offaxis(rng: random.Random) -> complex:
    """Complex parameter bounded away from the real axis, so shifted gamma
    and Pochhammer factors in corollary coefficients cannot degenerate."""
    im = rng.uniform(0.2, 1.0) * (1.0 if rng.random() < 0.5 else -1.0)
    return complex(rng.uniform(-1.2, 1.8), im)


def _int_sampler(**spec):
    """spec values: ('int', lo, hi) possibly depending on earlier keys, or
    'complex' for an off-axis continuous parameter."""

    def sample(rng: random.Random) -> dict:
        p = {}
        for key, rule in spec.items():
            if rule == "complex":
                p[key] = _offaxis(rng)
            else:
                lo, hi = rule
                lo = lo(p) if callable(lo) else lo
                hi = hi(p) if callable(hi) else hi
                p[key] = rng.randint(lo, hi)
        return p

    return sample


# --------------------------------------------------------------------------
# catalog construction


def _u(x: float) -> float:
    return (1.0 - x) / (1.0 + x)


def _fact(n: int) -> float:
    if n > 170:
        return math.inf
    return float(math.factorial(n))


def _min_term(*indices):
    vals = [i for i in indices if i is not None]
    return min(vals) if vals else None


def _build_catalog() -> None:
    # ---- direct argument-transform relations (single-term) ------------
    _register(_Impl(
        "intro.1", Kind.FINITE_SUM,
        lhs=lambda p, x, pol: _P(p["nu"], 2.0 * p["nu"] + 1.0, (1.0 + x) / (1.0 - x), pol),
        term=lambda p, x, n, pol: math.sqrt(1.0 - x) * _P(p["nu"], 2.0 * p["nu"] + 1.0, 1.0 - 2.0 * x, pol),
        n_top=lambda p: 0,
        sampler=lambda rng: {"nu": _offaxis(rng)},
        x_grid=(0.15, 0.3, 0.45),
        x_window=lambda p: (0.0, 0.5),
        param_domain="nu complex", x_domain="(0, 1/2)",
        termination_rule="single term",
    ))
    # degree and normalization follow from the stated substitutions; the
    # typeset displays disagree with them numerically
    _register(_Impl(
        "intro.2", Kind.FINITE_SUM,
        lhs=lambda p, x, pol: _P(2.0 * p["mu"] - 0.5, p["mu"], (1.0 + x) / (2.0 * math.sqrt(x)), pol),
        term=lambda p, x, n, pol: (
            gamma(p["mu"] + 0.5) / SQRT_PI * x ** 0.25
            * _P(p["mu"] - 0.5, 2.0 * p["mu"], 2.0 * x - 1.0, pol)
        ),
        n_top=lambda p: 0,
        sampler=lambda rng: {"mu": _offaxis(rng)},
        x_grid=(0.55, 0.7, 0.9),
        x_window=lambda p: (0.5, 1.0),
        param_domain="mu complex", x_domain="(1/2, 1)",
        termination_rule="single term",
    ))
    _register(_Impl(
        "intro.3", Kind.FINITE_SUM,
        lhs=lambda p, x, pol: _P(p["mu"] - 0.5, p["mu"], 1.0 / math.sqrt(1.0 - x), pol),
        term=lambda p, x, n, pol: (
            _cpow(2.0, -p["mu"]) * (1.0 - x) ** 0.25
            * _P(-0.25, p["mu"], 1.0 - 2.0 * x, pol)
        ),
        n_top=lambda p: 0,
        sampler=lambda rng: {"mu": _offaxis(rng)},
        x_grid=(0.15, 0.3, 0.45),
        x_window=lambda p: (0.0, 0.5),
        param_domain="mu complex", x_domain="(0, 1/2)",
        termination_rule="single term",
    ))

    # ---- first inversion family ---------------------------------------
    def t4_ntop(p):
        return _min_term(
            terminating_index(p["nu"] + 1.0),
            terminating_index(0.5 * (p["mu"] + p["nu"] + 1.0)),
        )

    def t4_coeff(p, x, n):
        return (
            pochhammer(0.5 * (p["mu"] + p["nu"] + 1.0), n)
            * pochhammer(p["nu"] + 1.0, n)
            * (-2.0) ** n
            * (1.0 - x * x) ** (0.5 * n) / _fact(n)
        )

    _register(_Impl(
        "thm4.fwd", Kind.INFINITE_SERIES,
        lhs=lambda p, x, pol: _P(p["nu"], p["mu"], x, pol),
        term=lambda p, x, n, pol: (
            t4_coeff(p, x, n) / _cpow(x, p["nu"] + n + 1.0)
            * _P(p["nu"] + n, p["mu"] + n, 1.0 / x, pol)
        ),
        n_top=t4_ntop,
        sampler=_guarded_pair(guards=[lambda nu, mu: nu, lambda nu, mu: mu]),
        x_grid=(0.75, 0.8, 0.9),
        x_window=lambda p: ((0.0 if t4_ntop(p) is not None else INV_SQRT2), 1.0),
        boundary_ok=lambda p: (3.0 * p["nu"] - p["mu"]).real < -1.0 or t4_ntop(p) is not None,
        param_domain="nu, mu complex",
        x_domain="(2^-1/2, 1); boundary when Re(3nu-mu) < -1; (0,1) when terminating",
    ))
    _register(_Impl(
        "thm4.inv", Kind.INFINITE_SERIES,
        lhs=lambda p, x, pol: _P(p["nu"], p["mu"], 1.0 / x, pol) / _cpow(x, p["nu"] + 1.0),
        term=lambda p, x, n, pol: (
            pochhammer(0.5 * (p["mu"] + p["nu"] + 1.0), n)
            * pochhammer(p["nu"] + 1.0, n) * 2.0 ** n
            * (1.0 - x * x) ** (0.5 * n) / _fact(n)
            * _P(p["nu"] + n, p["mu"] + n, x, pol)
        ),
        n_top=t4_ntop,
        sampler=_guarded_pair(guards=[lambda nu, mu: nu, lambda nu, mu: mu]),
        # below x ~ 0.6 the tail outlives the accurate-term window in doubles
        x_grid=(0.6, 0.7, 0.8),
        param_domain="nu, mu complex",
    ))

    def cor2_term(p, x, r, at_recip):
        k, mu = p["k"], p["mu"]
        y = 1.0 / x if at_recip else x
        base = (1.0 / (x * x) - 1.0) if at_recip else (x * x - 1.0)
        return (
            pochhammer(-2.0 * k - mu, k - r) * pochhammer(mu + 0.5, k - r) / _fact(k - r)
            * _fact(2 * r) * gegenbauer(2 * r, mu + k - r + 0.5, y)
            / (2.0 ** (2 * r) * _fact(r) * base ** r)
        )

    _register(_Impl(
        "cor2.a", Kind.FINITE_SUM,
        lhs=lambda p, x, pol: (
            _fact(2 * p["k"]) * gegenbauer(2 * p["k"], p["mu"] + 0.5, x)
            / (2.0 ** (2 * p["k"]) * _fact(p["k"]) * (1.0 - x * x) ** p["k"])
        ),
        term=lambda p, x, r, pol: cor2_term(p, x, r, True),
        n_top=lambda p: p["k"],
        sampler=_int_sampler(k=(0, 8), mu="complex"),
        param_domain="k in N0, mu complex", termination_rule="r <= k",
    ))
    _register(_Impl(
        "cor2.b", Kind.FINITE_SUM,
        lhs=lambda p, x, pol: (
            _fact(2 * p["k"]) * gegenbauer(2 * p["k"], p["mu"] + 0.5, 1.0 / x)
            / (2.0 ** (2 * p["k"]) * _fact(p["k"]) * (1.0 - 1.0 / (x * x)) ** p["k"])
        ),
        term=lambda p, x, r, pol: cor2_term(p, x, r, False),
        n_top=lambda p: p["k"],
        sampler=_int_sampler(k=(0, 8), mu="complex"),
        param_domain="k in N0, mu complex", termination_rule="r <= k",
    ))

    def cor3_coeff(p, n):
        k, m = p["k"], p["m"]
        return _fact(m) * _fact(k) / (_fact(m - n) * _fact(k - n) * _fact(n))

    _register(_Impl(
        "cor3.a", Kind.FINITE_SUM,
        lhs=lambda p, x, pol: _P(p["k"], p["k"] - 2 * p["m"], x, pol),
        term=lambda p, x, n, pol: (
            cor3_coeff(p, n) * (-2.0) ** n * (1.0 - x * x) ** (0.5 * n)
            * x ** (p["k"] - n) * _P(p["k"] - n, p["k"] + n - 2 * p["m"], 1.0 / x, pol)
        ),
        n_top=lambda p: p["m"],
        sampler=_int_sampler(k=(0, 8), m=(0, lambda p: p["k"])),
        param_domain="0 <= m <= k integers", termination_rule="n <= m",
    ))
    _register(_Impl(
        "cor3.b", Kind.FINITE_SUM,
        lhs=lambda p, x, pol: x ** p["k"] * _P(p["k"], p["k"] - 2 * p["m"], 1.0 / x, pol),
        term=lambda p, x, n, pol: (
            cor3_coeff(p, n) * 2.0 ** n * (1.0 - x * x) ** (0.5 * n)
            * _P(p["k"] - n, p["k"] + n - 2 * p["m"], x, pol)
        ),
        n_top=lambda p: p["m"],
        sampler=_int_sampler(k=(0, 8), m=(0, lambda p: p["k"])),
        param_domain="0 <= m <= k integers", termination_rule="n <= m",
    ))

    # ---- Mittag-Leffler family ----------------------------------------
    t5_ntop = lambda p: terminating_index(p["mu"] - p["nu"])
    t5_sampler = _guarded_pair(guards=[lambda nu, mu: mu])
    _register(_Impl(
        "thm5.fwd", Kind.INFINITE_SERIES,
        lhs=lambda p, x, pol: _P(p["nu"], p["mu"], x, pol) / _cpow(x, p["nu"]),
        term=lambda p, x, n, pol: (
            pochhammer(p["mu"] - p["nu"], n) * mittag_leffler_g(n, p["nu"])
            * _u(x) ** (0.5 * n) * _P(p["nu"], n + p["mu"], 1.0 / x, pol)
        ),
        n_top=t5_ntop, sampler=t5_sampler,
        param_domain="nu, mu complex",
    ))
    _register(_Impl(
        "thm5.inv", Kind.INFINITE_SERIES,
        lhs=lambda p, x, pol: _P(p["nu"], p["mu"], 1.0 / x, pol),
        term=lambda p, x, n, pol: (
            pochhammer(p["mu"] - p["nu"], n) * mittag_leffler_g(n, -p["nu"])
            * _u(x) ** (0.5 * n) * _P(p["nu"], n + p["mu"], x, pol) / _cpow(x, p["nu"])
        ),
        n_top=t5_ntop, sampler=t5_sampler,
        param_domain="nu, mu complex",
    ))

    def cor4_term(p, x, m, at_recip):
        k, lam = p["k"], p["lam"]
        y = 1.0 / x if at_recip else x
        base = (1.0 - 1.0 / x) if at_recip else (x - 1.0)
        sig = k + lam - 0.5 if at_recip else 0.5 - k - lam
        return (
            mittag_leffler_g(k - m, sig) * pochhammer(lam, k - m)
            / pochhammer(k + 2.0 * lam, k - m)
            * gegenbauer(m, k - m + lam, y) / (2.0 ** m * base ** m)
        )

    _register(_Impl(
        "cor4.a", Kind.FINITE_SUM,
        lhs=lambda p, x, pol: gegenbauer(p["k"], p["lam"], x) / (2.0 ** p["k"] * (x - 1.0) ** p["k"]),
        term=lambda p, x, m, pol: cor4_term(p, x, m, True),
        n_top=lambda p: p["k"],
        sampler=_int_sampler(k=(0, 8), lam="complex"),
        param_domain="k in N0, lambda complex", termination_rule="m <= k",
    ))
    _register(_Impl(
        "cor4.b", Kind.FINITE_SUM,
        lhs=lambda p, x, pol: (
            gegenbauer(p["k"], p["lam"], 1.0 / x)
            / (2.0 ** p["k"] * (1.0 - 1.0 / x) ** p["k"])
        ),
        term=lambda p, x, m, pol: cor4_term(p, x, m, False),
        n_top=lambda p: p["k"],
        sampler=_int_sampler(k=(0, 8), lam="complex"),
        param_domain="k in N0, lambda complex", termination_rule="m <= k",
    ))

    # ---- square-root generating-function family -----------------------
    t6_ntop = lambda p: terminating_index(p["mu"] - p["nu"])
    t6_sampler = _guarded_pair(guards=[lambda nu, mu: nu, lambda nu, mu: mu,
                                       lambda nu, mu: nu - mu])

    _register(_Impl(
        "thm6.p1a", Kind.INFINITE_SERIES,
        lhs=lambda p, x, pol: _P(p["nu"], p["mu"], x, pol) / _cpow(1.0 + x, p["mu"]),
        term=lambda p, x, n, pol: (
            (-1.0) ** n * pochhammer(p["mu"] - p["nu"], n)
            * frak_p(n, -0.5 * p["nu"], 2.0 * p["mu"], 1.0, form="second")
            * _cpow(2.0, n - p["mu"]) * (1.0 - x * x) ** (0.5 * n)
            / _cpow(x, n + p["mu"] - p["nu"])
            * _P(p["nu"] - p["mu"] - n, p["mu"] + n, 1.0 / x, pol)
        ),
        n_top=t6_ntop,
        sampler=_guarded_pair(guards=[lambda nu, mu: nu, lambda nu, mu: mu,
                                      lambda nu, mu: nu - mu],
                              re_nu=(-0.55, 2.5)),
        x_grid=(0.75, 0.8, 0.9),
        x_window=lambda p: ((0.0 if terminating_index(p["nu"] - p["mu"]) is not None
                             else INV_SQRT2), 1.0),
        boundary_ok=lambda p: p["nu"].real > -2.0 / 3.0
        or terminating_index(p["nu"] - p["mu"]) is not None,
        param_domain="nu, mu complex",
        x_domain="(2^-1/2, 1); boundary when Re nu > -2/3; (0,1) when nu-mu in N0",
    ))
    _register(_Impl(
        "thm6.p1b", Kind.INFINITE_SERIES,
        lhs=lambda p, x, pol: (
            _P(p["nu"] - p["mu"], p["mu"], 1.0 / x, pol)
            / (_cpow(2.0, p["mu"]) * _cpow(x, p["mu"] - p["nu"]))
        ),
        term=lambda p, x, n, pol: (
            (-1.0) ** n * pochhammer(p["mu"] - p["nu"], n)
            * _bateman(n, p["nu"], -2.0 * p["mu"])
            * (1.0 - x) ** (0.5 * n) * _P(p["nu"], p["mu"] + n, x, pol)
            / _cpow(1.0 + x, 0.5 * n + p["mu"])
        ),
        n_top=t6_ntop, sampler=t6_sampler,
        param_domain="nu, mu complex",
    ))
    _register(_Impl(
        "thm6.p2a", Kind.INFINITE_SERIES,
        lhs=lambda p, x, pol: (
            _cpow(x, p["nu"]) * _P(p["nu"], p["mu"], 1.0 / x, pol)
            / _cpow(1.0 + x, p["mu"])
        ),
        term=lambda p, x, n, pol: (
            pochhammer(p["mu"] - p["nu"], n)
            * frak_p(n, -0.5 * p["nu"], 2.0 * p["mu"], 1.0, form="second")
            * _cpow(2.0, n - p["mu"]) * (1.0 - x * x) ** (0.5 * n)
            * _P(p["nu"] - p["mu"] - n, n + p["mu"], x, pol)
        ),
        n_top=t6_ntop, sampler=t6_sampler,
        x_grid=(0.5, 0.65, 0.8),
        param_domain="nu, mu complex",
    ))
    _register(_Impl(
        "thm6.p2b", Kind.INFINITE_SERIES,
        lhs=lambda p, x, pol: (
            _P(p["nu"] - p["mu"], p["mu"], x, pol)
            / (_cpow(2.0, p["mu"]) * _cpow(x, p["nu"]))
        ),
        term=lambda p, x, n, pol: (
            pochhammer(p["mu"] - p["nu"], n) * _bateman(n, p["nu"], -2.0 * p["mu"])
            * (1.0 - x) ** (0.5 * n) * _P(p["nu"], n + p["mu"], 1.0 / x, pol)
            / _cpow(1.0 + x, 0.5 * n + p["mu"])
        ),
        n_top=t6_ntop, sampler=t6_sampler,
        param_domain="nu, mu complex",
    ))

    def cor5_term(p, x, n, signed, upper, at_recip):
        k, m = p["k"], p["m"]
        tau = k + m if upper else k - m
        r = -2.0 * m if upper else 2.0 * m
        morder = (n + m) if upper else (n - m)
        deg = (k + m) if upper else (k - m)
        sgn = (-1.0) ** n if signed else 1.0
        y = 1.0 / x if at_recip else x
        return (
            sgn * _bateman(n, tau, r) / _fact(k - n)
            * (1.0 - x) ** (0.5 * n) * _P(deg, morder, y)
            / _cpow(1.0 + x, 0.5 * n + (m if upper else -m))
        )

    _register(_Impl(
        "cor5.a", Kind.FINITE_SUM,
        lhs=lambda p, x, pol: (
            _P(p["k"], p["m"], x, pol) / (2.0 ** p["m"] * _fact(p["k"]) * x ** (p["k"] + p["m"]))
        ),
        term=lambda p, x, n, pol: cor5_term(p, x, n, True, True, True),
        n_top=lambda p: p["k"],
        sampler=_int_sampler(k=(0, 8), m=(0, lambda p: p["k"])),
        param_domain="0 <= m <= k integers", termination_rule="n <= k",
    ))
    _register(_Impl(
        "cor5.b", Kind.FINITE_SUM,
        lhs=lambda p, x, pol: (
            _P(p["k"], p["m"], 1.0 / x, pol) * x ** p["k"] / (2.0 ** p["m"] * _fact(p["k"]))
        ),
        term=lambda p, x, n, pol: cor5_term(p, x, n, False, True, False),
        n_top=lambda p: p["k"],
        sampler=_int_sampler(k=(0, 8), m=(0, lambda p: p["k"])),
        param_domain="0 <= m <= k integers", termination_rule="n <= k",
    ))
    _register(_Impl(
        "cor5.c", Kind.FINITE_SUM,
        lhs=lambda p, x, pol: (
            _P(p["k"], -p["m"], x, pol) * 2.0 ** p["m"]
            / (_fact(p["k"]) * x ** (p["k"] - p["m"]))
        ),
        term=lambda p, x, n, pol: cor5_term(p, x, n, True, False, True),
        n_top=lambda p: p["k"],
        sampler=_int_sampler(k=(0, 8), m=(0, lambda p: p["k"])),
        param_domain="0 <= m <= k integers", termination_rule="n <= k",
    ))
    _register(_Impl(
        "cor5.d", Kind.FINITE_SUM,
        lhs=lambda p, x, pol: (
            _P(p["k"], -p["m"], 1.0 / x, pol) * 2.0 ** p["m"] * x ** p["k"] / _fact(p["k"])
        ),
        term=lambda p, x, n, pol: cor5_term(p, x, n, False, False, False),
        n_top=lambda p: p["k"],
        sampler=_int_sampler(k=(0, 8), m=(0, lambda p: p["k"])),
        param_domain="0 <= m <= k integers", termination_rule="n <= k",
    ))

    _register(_Impl(
        "cor6", Kind.VANISHING_SUM,
        lhs=lambda p, x, pol: 0j,
        term=lambda p, x, n, pol: (
            2.0 ** n * frak_p(n, 0.5 * (p["m"] - p["k"]), -2.0 * p["m"], 1.0, form="second")
            / _fact(p["k"] - n) * (x - 1.0) ** n
            * abs((1.0 + x) / (1.0 - x)) ** (0.5 * n)
            * _P(p["k"] - n, n - p["m"], x, pol)
        ),
        n_top=lambda p: p["k"],
        sampler=_int_sampler(k=(1, 8), m=(lambda p: p["k"] // 2 + 1, lambda p: p["k"])),
        param_domain="k/2 < m <= k integers", termination_rule="n <= k",
    ))

    # ---- half-order family --------------------------------------------
    t7_ntop = lambda p: terminating_index(p["mu"] - p["nu"])
    t7_guards = [lambda nu, mu: nu, lambda nu, mu: mu,
                 lambda nu, mu: 0.5 * (mu + nu), lambda nu, mu: 0.5 * (mu - nu + 1.0)]
    t7_sampler = _guarded_pair(guards=t7_guards)
    t7_sampler_cond = _guarded_pair(guards=t7_guards, re_nu=(-0.85, 2.5))

    def q_cond_check(p):
        if p["nu"].real > -1.0:
            return
        if terminating_index(p["nu"] - p["mu"]) is not None:
            return
        raise DomainError("requires Re nu > -1 or nu - mu a nonnegative integer")

    _register(_Impl(
        "thm7.q1", Kind.INFINITE_SERIES,
        lhs=lambda p, x, pol: (
            _P(p["nu"], p["mu"], 1.0 / x, pol) * _cpow(x, p["nu"])
            / (SQRT_PI * _cpow(2.0, p["nu"] - p["mu"]))
        ),
        term=lambda p, x, n, pol: (
            pochhammer(p["mu"] - p["nu"], n)
            * script_G(n, p["nu"], p["nu"], math.sqrt(_u(x)))
            * 2.0 ** -n * recip_gamma(0.5 * (n + p["mu"] - p["nu"] + 1.0))
            * _cpow(_u(x), 0.25 * (n + p["mu"] - p["nu"]))
            * _P(p["nu"], 0.5 * (p["mu"] + p["nu"] + n), x, pol)
        ),
        n_top=t7_ntop, sampler=t7_sampler,
        param_domain="nu, mu complex",
    ))
    _register(_Impl(
        "thm7.q2", Kind.INFINITE_SERIES,
        lhs=lambda p, x, pol: (
            _cpow(_u(x), 0.25 * (p["mu"] - p["nu"]))
            * _P(p["nu"], 0.5 * (p["mu"] + p["nu"]), x, pol)
            * recip_gamma(0.5 * (p["mu"] - p["nu"] + 1.0))
        ),
        term=lambda p, x, n, pol: (
            pochhammer(p["mu"] - p["nu"], n)
            * script_G(n, -p["nu"], -p["nu"], math.sqrt(_u(x)))
            * _cpow(x, p["nu"]) / (SQRT_PI * _cpow(2.0, p["nu"] - p["mu"]))
            * _P(p["nu"], p["mu"] + n, 1.0 / x, pol)
        ),
        n_top=t7_ntop, sampler=t7_sampler_cond, param_check=q_cond_check,
        param_domain="Re nu > -1 or nu - mu in N0",
    ))
    _register(_Impl(
        "thm7.q3", Kind.INFINITE_SERIES,
        lhs=lambda p, x, pol: (
            _P(p["nu"], p["mu"], x, pol)
            / (SQRT_PI * _cpow(2.0, p["nu"] - p["mu"]) * _cpow(x, p["nu"]))
        ),
        term=lambda p, x, n, pol: (
            pochhammer(p["mu"] - p["nu"], n)
            * script_G_hat(n, p["nu"], p["nu"], math.sqrt(_u(x)))
            * 2.0 ** -n * recip_gamma(0.5 * (n + p["mu"] - p["nu"] + 1.0))
            * _cpow(_u(x), 0.25 * (n + p["mu"] - p["nu"]))
            * _P(p["nu"], 0.5 * (p["mu"] + p["nu"] + n), 1.0 / x, pol)
        ),
        n_top=t7_ntop, sampler=t7_sampler,
        param_domain="nu, mu complex",
    ))
    _register(_Impl(
        "thm7.q4", Kind.INFINITE_SERIES,
        lhs=lambda p, x, pol: (
            _cpow(_u(x), 0.25 * (p["mu"] - p["nu"]))
            * _P(p["nu"], 0.5 * (p["mu"] + p["nu"]), 1.0 / x, pol)
            * recip_gamma(0.5 * (p["mu"] - p["nu"] + 1.0))
        ),
        term=lambda p, x, n, pol: (
            pochhammer(p["mu"] - p["nu"], n)
            * script_G_hat(n, -p["nu"], -p["nu"], math.sqrt(_u(x)))
            / (SQRT_PI * _cpow(2.0, p["nu"] - p["mu"]) * _cpow(x, p["nu"]))
            * _P(p["nu"], p["mu"] + n, x, pol)
        ),
        n_top=t7_ntop, sampler=t7_sampler_cond, param_check=q_cond_check,
        param_domain="Re nu > -1 or nu - mu in N0",
    ))

    def cor7_Y(lam, k, r):
        return (
            gamma(lam + k) * gamma(2.0 * lam + 4 * k - r)
            / (gamma(lam + 2 * k - r) * gamma(2.0 * lam + 3 * k))
        )

    def cor7_narrow(p, x, r, hatted):
        k, lam = p["k"], p["lam"]
        w = math.sqrt(_u(x))
        fam = script_G_hat if hatted else script_G
        g = fam(k - 2 * r, k + lam - 0.5, k + lam - 0.5, w)
        val = (
            pochhammer(lam, k - r) * g
            / ((-2.0) ** (r - k) * pochhammer(2.0 * lam + k, k - r) * (1.0 - x) ** r)
        )
        if hatted:
            val *= x ** r
            return val * gegenbauer(r, k - r + lam, 1.0 / x)
        return val * gegenbauer(r, k - r + lam, x)

    def cor7_wide(p, x, r, hatted):
        k, lam = p["k"], p["lam"]
        w = math.sqrt(_u(x))
        fam = script_G_hat if hatted else script_G
        g = fam(2 * k - r, 0.5 - 2 * k - lam, 0.5 - 2 * k - lam, w)
        val = g / ((-2.0) ** (r - k) * cor7_Y(lam, k, r) * (1.0 - x * x) ** (0.5 * r))
        if hatted:
            return val * gegenbauer(r, 2 * k - r + lam, x)
        return val * x ** r * gegenbauer(r, 2 * k - r + lam, 1.0 / x)

    _register(_Impl(
        "cor7.a", Kind.FINITE_SUM,
        lhs=lambda p, x, pol: (
            gegenbauer(p["k"], p["lam"], 1.0 / x) * x ** p["k"]
            / (1.0 - x * x) ** (0.5 * p["k"])
        ),
        term=lambda p, x, r, pol: cor7_narrow(p, x, r, False),
        n_top=lambda p: p["k"] // 2,
        sampler=_int_sampler(k=(0, 8), lam="complex"),
        param_domain="k in N0, lambda complex", termination_rule="r <= floor(k/2)",
    ))
    _register(_Impl(
        "cor7.b", Kind.FINITE_SUM,
        lhs=lambda p, x, pol: (
            gegenbauer(p["k"], p["k"] + p["lam"], x) / (1.0 - x) ** p["k"]
        ),
        term=lambda p, x, r, pol: cor7_wide(p, x, r, False),
        n_top=lambda p: 2 * p["k"],
        sampler=_int_sampler(k=(0, 8), lam="complex"),
        param_domain="k in N0, lambda complex", termination_rule="r <= 2k",
    ))
    _register(_Impl(
        "cor7.c", Kind.FINITE_SUM,
        lhs=lambda p, x, pol: (
            gegenbauer(p["k"], p["lam"], x) / (1.0 - x * x) ** (0.5 * p["k"])
        ),
        term=lambda p, x, r, pol: cor7_narrow(p, x, r, True),
        n_top=lambda p: p["k"] // 2,
        sampler=_int_sampler(k=(0, 8), lam="complex"),
        param_domain="k in N0, lambda complex", termination_rule="r <= floor(k/2)",
    ))
    _register(_Impl(
        "cor7.d", Kind.FINITE_SUM,
        lhs=lambda p, x, pol: (
            gegenbauer(p["k"], p["k"] + p["lam"], 1.0 / x) * x ** p["k"]
            / (1.0 - x) ** p["k"]
        ),
        term=lambda p, x, r, pol: cor7_wide(p, x, r, True),
        n_top=lambda p: 2 * p["k"],
        sampler=_int_sampler(k=(0, 8), lam="complex"),
        param_domain="k in N0, lambda complex", termination_rule="r <= 2k",
    ))

    def cor89_term(p, x, n, hatted, inner_tau2):
        k, lam = p["k"], p["lam"]
        w = math.sqrt(_u(x))
        fam = script_G_hat if hatted else script_G
        g = fam(n, -2 * k - lam - 0.5, inner_tau2(k, lam), w)
        den = pochhammer(2.0 * lam + 2 * k + 1.0, n)
        val = pochhammer(lam, n) * g * (-2.0) ** n * (1.0 - x * x) ** (0.5 * n) / den
        if hatted:
            return val * gegenbauer(2 * k - n + 1, lam + n, x)
        return val * x ** -n * gegenbauer(2 * k - n + 1, lam + n, 1.0 / x)

    _register(_Impl(
        "cor8.a", Kind.VANISHING_SUM,
        lhs=lambda p, x, pol: 0j,
        term=lambda p, x, n, pol: cor89_term(
            p, x, n, False, lambda k, lam: -2 * k - lam - 0.5),
        n_top=lambda p: 2 * p["k"] + 1,
        sampler=_int_sampler(k=(0, 8), lam="complex"),
        param_domain="k in N0, lambda complex", termination_rule="n <= 2k+1",
    ))
    _register(_Impl(
        "cor8.b", Kind.VANISHING_SUM,
        lhs=lambda p, x, pol: 0j,
        term=lambda p, x, n, pol: cor89_term(
            p, x, n, True, lambda k, lam: -2 * k - lam - 0.5),
        n_top=lambda p: 2 * p["k"] + 1,
        sampler=_int_sampler(k=(0, 8), lam="complex"),
        param_domain="k in N0, lambda complex", termination_rule="n <= 2k+1",
    ))
    _register(_Impl(
        "cor9.a", Kind.VANISHING_SUM,
        lhs=lambda p, x, pol: 0j,
        term=lambda p, x, n, pol: cor89_term(
            p, x, n, False, lambda k, lam: lam - 0.5),
        n_top=lambda p: 2 * p["k"] + 1,
        sampler=_int_sampler(k=(0, 8), lam="complex"),
        param_domain="k in N0, lambda complex", termination_rule="n <= 2k+1",
    ))
    _register(_Impl(
        "cor9.b", Kind.VANISHING_SUM,
        lhs=lambda p, x, pol: 0j,
        term=lambda p, x, n, pol: cor89_term(
            p, x, n, True, lambda k, lam: lam - 0.5),
        n_top=lambda p: 2 * p["k"] + 1,
        sampler=_int_sampler(k=(0, 8), lam="complex"),
        param_domain="k in N0, lambda complex", termination_rule="n <= 2k+1",
    ))

    # ---- mixed half-order family --------------------------------------
    t8_ntop = lambda p: terminating_index(p["mu"] - p["nu"])
    t8_sampler = _guarded_pair(guards=t7_guards)
    t8_sampler_cond = _guarded_pair(guards=t7_guards, re_nu=(-0.85, 2.5))

    def g_cond_check(p):
        if p["nu"].real > -1.0:
            return
        raise DomainError("requires Re nu > -1")

    _register(_Impl(
        "thm8.g1", Kind.INFINITE_SERIES,
        lhs=lambda p, x, pol: (
            _cpow(1.0 - x * x, 0.25 * (p["mu"] + p["nu"]))
            * _P(0.5 * (p["mu"] - p["nu"] - 2.0), 0.5 * (p["mu"] + p["nu"]), x, pol)
            * recip_gamma(0.5 * (p["mu"] - p["nu"] + 1.0))
            / (_cpow(2.0, 0.5 * (3.0 * p["mu"] - p["nu"])) * _cpow(x, p["nu"]))
        ),
        term=lambda p, x, n, pol: (
            pochhammer(p["mu"] - p["nu"], n)
            * script_G(n, -p["nu"], p["mu"], math.sqrt(_u(x))) / SQRT_PI
            * _cpow(_u(x), 0.5 * p["nu"]) * _P(p["nu"], p["mu"] + n, 1.0 / x, pol)
        ),
        n_top=t8_ntop, sampler=t8_sampler_cond, param_check=q_cond_check,
        param_domain="Re nu > -1 or nu - mu in N0",
    ))
    _register(_Impl(
        "thm8.r1", Kind.INFINITE_SERIES,
        lhs=lambda p, x, pol: _P(p["nu"], p["mu"], 1.0 / x, pol) / SQRT_PI,
        term=lambda p, x, n, pol: (
            pochhammer(p["mu"] - p["nu"], n) * frak_N(n, p["nu"], p["mu"], x, -1)
            * _cpow(1.0 - x * x, 0.25 * (p["mu"] - p["nu"] + n))
            * _P(0.5 * (p["mu"] - p["nu"] - 2.0 + n), 0.5 * (p["mu"] + p["nu"] + n), x, pol)
            * recip_gamma(0.5 * (p["mu"] - p["nu"] + n + 1.0))
            / _cpow(2.0, 0.5 * (3.0 * p["mu"] - p["nu"] + n))
        ),
        n_top=t8_ntop, sampler=t8_sampler,
        # algebraic tail: extrapolation needs a long run of partial sums
        direct_cap=144,
        x_grid=(0.55, 0.7, 0.85),
        param_domain="nu, mu complex",
    ))
    _register(_Impl(
        "thm8.r2", Kind.INFINITE_SERIES,
        lhs=lambda p, x, pol: _P(p["nu"], p["mu"], x, pol) / SQRT_PI,
        term=lambda p, x, n, pol: (
            pochhammer(p["mu"] - p["nu"], n) * frak_N(n, p["nu"], p["mu"], x, 1)
            * _cpow(1.0 - x * x, 0.25 * (p["mu"] - p["nu"] + n))
            * _P(0.5 * (p["mu"] - p["nu"] + n - 2.0), 0.5 * (p["mu"] + p["nu"] + n), 1.0 / x, pol)
            * recip_gamma(0.5 * (p["mu"] - p["nu"] + n + 1.0))
            / (_cpow(2.0, 0.5 * (3.0 * p["mu"] - p["nu"] + n))
               * _cpow(x, 0.5 * (p["mu"] - p["nu"] + n)))
        ),
        n_top=t8_ntop, sampler=t8_sampler,
        x_grid=(0.75, 0.8, 0.9),
        x_window=lambda p: ((0.0 if terminating_index(p["nu"] - p["mu"]) is not None
                             else INV_SQRT2), 1.0),
        boundary_ok=lambda p: p["nu"].real < 2.0
        or terminating_index(p["nu"] - p["mu"]) is not None,
        param_domain="nu, mu complex",
        x_domain="(2^-1/2, 1); boundary when Re nu < 2; (0,1) when nu-mu in N0",
    ))
    _register(_Impl(
        "thm8.g2", Kind.INFINITE_SERIES,
        lhs=lambda p, x, pol: (
            _cpow(1.0 - x * x, 0.25 * (p["mu"] + p["nu"]))
            * _P(0.5 * (p["mu"] - p["nu"] - 2.0), 0.5 * (p["mu"] + p["nu"]), 1.0 / x, pol)
            * recip_gamma(0.5 * (p["mu"] - p["nu"] + 1.0))
            / (_cpow(2.0, 0.5 * (3.0 * p["mu"] - p["nu"]))
               * _cpow(x, 0.5 * (p["mu"] - p["nu"])))
        ),
        term=lambda p, x, n, pol: (
            pochhammer(p["mu"] - p["nu"], n)
            * script_G_hat(n, -p["nu"], p["mu"], math.sqrt(_u(x))) / SQRT_PI
            * _cpow(_u(x), 0.5 * p["nu"]) * _P(p["nu"], p["mu"] + n, x, pol)
        ),
        n_top=t8_ntop, sampler=t8_sampler_cond, param_check=g_cond_check,
        param_domain="Re nu > -1",
    ))

    def cor10_term(p, x, n, hatted, upper):
        k, m = p["k"], p["m"]
        w = math.sqrt(_u(x))
        fam = script_G_hat if hatted else script_G
        tau1 = (-k - m) if upper else (-k + m)
        tau2 = (-k + m) if upper else (-k - m)
        g = fam(n, tau1, tau2, w)
        pre = _fact(k) * (1.0 - x) ** (0.5 * k) \
            / _cpow(1.0 + x, 0.5 * k + (m if upper else -m))
        deg = (k + m) if upper else (k - m)
        morder = (n + m - k) if upper else (n - k - m)
        val = pre * g / ((-1.0) ** (n + k) * _fact(2 * k - n))
        if hatted:
            return val * _P(deg, morder, x)
        return val * x ** deg * _P(deg, morder, 1.0 / x)

    _register(_Impl(
        "cor10.a", Kind.FINITE_SUM,
        lhs=lambda p, x, pol: _P(p["k"], p["m"], x, pol) / 2.0 ** p["m"],
        term=lambda p, x, n, pol: cor10_term(p, x, n, False, True),
        n_top=lambda p: 2 * p["k"],
        sampler=_int_sampler(k=(0, 8), m=(0, lambda p: p["k"])),
        param_domain="0 <= m <= k integers", termination_rule="n <= 2k",
    ))
    _register(_Impl(
        "cor10.b", Kind.FINITE_SUM,
        lhs=lambda p, x, pol: _P(p["k"], p["m"], 1.0 / x, pol) * x ** p["k"] / 2.0 ** p["m"],
        term=lambda p, x, n, pol: cor10_term(p, x, n, True, True),
        n_top=lambda p: 2 * p["k"],
        sampler=_int_sampler(k=(0, 8), m=(0, lambda p: p["k"])),
        param_domain="0 <= m <= k integers", termination_rule="n <= 2k",
    ))
    _register(_Impl(
        "cor10.c", Kind.FINITE_SUM,
        lhs=lambda p, x, pol: _P(p["k"], -p["m"], x, pol) * 2.0 ** p["m"],
        term=lambda p, x, n, pol: cor10_term(p, x, n, False, False),
        n_top=lambda p: 2 * p["k"],
        sampler=_int_sampler(k=(0, 8), m=(0, lambda p: p["k"])),
        param_domain="0 <= m <= k integers", termination_rule="n <= 2k",
    ))
    _register(_Impl(
        "cor10.d", Kind.FINITE_SUM,
        lhs=lambda p, x, pol: _P(p["k"], -p["m"], 1.0 / x, pol) * 2.0 ** p["m"] * x ** p["k"],
        term=lambda p, x, n, pol: cor10_term(p, x, n, True, False),
        n_top=lambda p: 2 * p["k"],
        sampler=_int_sampler(k=(0, 8), m=(0, lambda p: p["k"])),
        param_domain="0 <= m <= k integers", termination_rule="n <= 2k",
    ))

    # ---- quadratic argument family ------------------------------------
    t9_ntop = lambda p: _min_term(
        terminating_index(2.0 * p["nu"]), terminating_index(p["mu"] - p["nu"]))
    t9_guards = [lambda nu, mu: nu, lambda nu, mu: mu, lambda nu, mu: nu + 0.5,
                 lambda nu, mu: 0.5 * (mu + nu), lambda nu, mu: 0.5 * (mu - nu + 1.0)]
    t9_sampler = _guarded_pair(guards=t9_guards)

    def x2arg(x: float) -> float:
        return (1.0 + x * x) / (2.0 * x)

    _register(_Impl(
        "thm9.fwd", Kind.INFINITE_SERIES,
        lhs=lambda p, x, pol: _P(p["nu"], p["mu"], x, pol),
        term=lambda p, x, n, pol: (
            SQRT_PI * _cpow(2.0, 2.0 * p["nu"] - p["mu"])
            * pochhammer(2.0 * p["nu"], n) * pochhammer(p["mu"] - p["nu"], n)
            * gegenbauer(n, 0.5 - p["nu"] - n, x)
            * _P(p["nu"], 0.5 * (n + p["mu"] + p["nu"]), x2arg(x), pol)
            * recip_gamma(0.5 * (p["mu"] - p["nu"] + n + 1.0)) * _cpow(x, p["nu"])
            / (2.0 ** (2 * n) * pochhammer(p["nu"] + 0.5, n)
               * _cpow(1.0 - x * x, 0.5 * (n + p["nu"])))
        ),
        n_top=t9_ntop, sampler=t9_sampler,
        param_domain="nu, mu complex",
    ))
    _register(_Impl(
        "thm9.inv", Kind.INFINITE_SERIES,
        lhs=lambda p, x, pol: (
            SQRT_PI * _P(p["nu"], 0.5 * (p["mu"] + p["nu"]), x2arg(x), pol)
            * _cpow(x, p["nu"]) * recip_gamma(0.5 * (p["mu"] - p["nu"] + 1.0))
            / _cpow(2.0, p["mu"] - 2.0 * p["nu"])
        ),
        term=lambda p, x, n, pol: (
            pochhammer(-2.0 * p["nu"], n) * pochhammer(p["mu"] - p["nu"], n)
            / (2.0 ** n * pochhammer(0.5 - p["nu"], n))
            * gegenbauer(n, 0.5 + p["nu"] - n, x)
            / _cpow(1.0 - x * x, 0.5 * (n - p["nu"]))
            * _P(p["nu"], p["mu"] + n, x, pol)
        ),
        n_top=lambda p: _min_term(
            terminating_index(-2.0 * p["nu"]), terminating_index(p["mu"] - p["nu"])),
        sampler=t9_sampler,
        param_domain="nu, mu complex",
    ))

    def lam1(k, m, mu):
        return (
            (-1.0) ** (k + m) * 2.0 ** (2 * m)
            * pochhammer(2 * k + 2.0 * mu, k - 2 * m) * pochhammer(mu + 0.5, k - m)
            / (pochhammer(0.5 + mu + k, k - 2 * m) * pochhammer(2.0 * mu + k + 1.0, k - m))
        )

    # both coefficient displays are reproduced from the terminating series
    # they specialize; see the notes ledger for the numerically confirmed
    # index corrections
    def lam2(l, n, mu):
        return (
            (-1.0) ** (n + l) * pochhammer(-4 * l - 2.0 * mu, n)
            * _poch_signed(mu + l + 0.5, n - l)
            * pochhammer(2.0 * mu + 2 * l + 1.0, l)
            / (2.0 ** (2 * l) * pochhammer(0.5 - 2 * l - mu, n)
               * pochhammer(2.0 * mu + 2 * l + 1.0, n))
        )

    def lam3(l, n, mu):
        return (
            (-1.0) ** n * gamma(n - 4 * l - 2.0 * mu - 2.0) * gamma(n + mu + 0.5)
            / (gamma(n - 0.5 - 2 * l - mu) * gamma(n + 2.0 * mu + 2 * l + 2.0))
        )

    _register(_Impl(
        "cor11.a", Kind.FINITE_SUM,
        lhs=lambda p, x, pol: gegenbauer(p["k"], p["mu"] + 0.5, x),
        term=lambda p, x, m, pol: (
            lam1(p["k"], m, p["mu"]) * x ** m
            * gegenbauer(p["k"] - 2 * m, 0.5 - 2 * p["k"] + 2 * m - p["mu"], x)
            * gegenbauer(m, p["k"] - m + p["mu"] + 0.5, x2arg(x))
        ),
        n_top=lambda p: p["k"] // 2,
        sampler=_int_sampler(k=(0, 8), mu="complex"),
        param_domain="k in N0, mu complex", termination_rule="m <= floor(k/2)",
    ))
    _register(_Impl(
        "cor11.b", Kind.FINITE_SUM,
        lhs=lambda p, x, pol: x ** p["l"] * gegenbauer(p["l"], p["mu"] + p["l"] + 0.5, x2arg(x)),
        term=lambda p, x, n, pol: (
            lam2(p["l"], n, p["mu"])
            * gegenbauer(n, 0.5 + 2 * p["l"] + p["mu"] - n, x)
            * gegenbauer(2 * p["l"] - n, p["mu"] + n + 0.5, x)
        ),
        n_top=lambda p: 2 * p["l"],
        sampler=_int_sampler(l=(0, 8), mu="complex"),
        param_domain="l in N0, mu complex", termination_rule="n <= 2l",
    ))
    _register(_Impl(
        "lambda3", Kind.VANISHING_SUM,
        lhs=lambda p, x, pol: 0j,
        term=lambda p, x, n, pol: (
            lam3(p["l"], n, p["mu"])
            * gegenbauer(n, 1.5 + 2 * p["l"] + p["mu"] - n, x)
            * gegenbauer(2 * p["l"] - n + 1, p["mu"] + n + 0.5, x)
        ),
        n_top=lambda p: 2 * p["l"] + 1,
        sampler=_int_sampler(l=(0, 8), mu="complex"),
        param_domain="l in N0, mu complex", termination_rule="n <= 2l+1",
    ))


_build_catalog()
