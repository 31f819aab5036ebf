"""The weighted integral I = int_0^x exp(-beta u) u**power t~(mu, nu, u) du.

``power`` defaults to ``nu``; the companion integrals that carry
t~(mu+1, nu+1) against u**nu use an explicit power.

Three independent routes are provided:

* adaptive Gauss-Kronrod quadrature (the reference evaluator),
* term-by-term integration of the Lommel series, which turns every term into a
  lower incomplete gamma function (or a plain power when beta = 0),
* the exact formula available at beta = 1.

Term-by-term integration gives, with s_k = mu + power + 2k + 2,

    I = x**(power+1) exp(-beta x) sum_k tau_k(x) g(s_k, beta x)

where tau_k are the terms of t~(mu, nu, x) and g(s, z) = exp(z) z**-s gamma(s, z).
The normalised integral exp(beta x) x**-power I is therefore x sum_k tau_k g_k
and never needs the exponential factors explicitly.
"""

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .gamma import (
    lower_incomplete_gamma,
    log_scaled_lower_gamma_ladder,
    reciprocal_gamma,
    scaled_lower_gamma_ladder,
)
from .lommel import (
    EvalResult,
    _signed_logsumexp,
    log_series_terms,
    lommel_series,
    reduced_series_vec,
    t_tilde,
)
from .quadrature import adaptive_gk15

_EPS = np.finfo(float).eps
SERIES_TOL = 1e-12
SERIES_MAX_TERMS = 500
# above this x the double-precision forms overflow and the log path takes over
LOG_SWITCH_X = 650.0


class SlowConvergenceWarning(RuntimeWarning):
    pass


@dataclass(frozen=True)
class IntegralSpec:
    mu: float
    nu: float
    beta: float
    x: float
    power: float = None

    def __post_init__(self):
        if self.power is None:
            object.__setattr__(self, "power", self.nu)
        if not self.mu + self.power > -2:
            raise ValueError(
                f"integral diverges at 0: needs mu + power > -2, got mu={self.mu}, power={self.power}"
            )
        if not 0.0 <= self.beta <= 1.0:
            raise ValueError(f"beta must lie in [0, 1], got {self.beta}")
        if not (self.x > 0 and math.isfinite(self.x)):
            raise ValueError(f"x must be positive and finite, got {self.x}")

    @property
    def exponent(self):
        """Small-u behaviour of the integrand is u**(exponent - 1)."""
        return self.mu + self.power + 2


def _shifted_integrand(spec, n_terms, shift):
    mu, nu, beta, lam = spec.mu, spec.nu, spec.beta, spec.power

    def reduced(u):
        k0, r = reduced_series_vec(mu, nu, u, n_terms)
        return k0, r

    k0, _ = reduced(np.array([0.0]))
    p = spec.exponent + 2 * k0
    log_c = -(mu + 1 + 2 * k0) * math.log(2.0) - shift

    def direct(u):
        _, r = reduced(u)
        return np.exp(log_c - beta * u + (p - 1) * np.log(u)) * r

    def substituted(t):
        # u = t**(1/p) absorbs the u**(p-1) factor: du u**(p-1) = dt / p
        u = t ** (1.0 / p)
        _, r = reduced(u)
        return np.exp(log_c - beta * u) * r / p

    return p, direct, substituted


def _quadrature_shifted(spec, tol, shift):
    ser = lommel_series(spec.mu, spec.nu, spec.x)
    n_terms = len(ser.rel) + 2
    p, direct, substituted = _shifted_integrand(spec, n_terms, shift)
    head = min(spec.x, 1.0)
    v1, e1, n1, ok1 = adaptive_gk15(substituted, 0.0, head**p, rel_tol=tol)
    v2, e2, n2, ok2 = adaptive_gk15(direct, head, spec.x, rel_tol=tol)
    value = v1 + v2
    err = e1 + e2
    return value, err, n1 + n2, ok1 and ok2


def _default_shift(spec):
    # keeps the scaled integrand O(1) at the right end for large x
    return max(0.0, (1.0 - spec.beta) * spec.x - 0.5 * math.log(2 * math.pi * spec.x)) + spec.power * math.log(spec.x)


def integral_quadrature(spec, tol=1e-13):
    """Reference evaluation of I by adaptive Gauss-Kronrod quadrature.

    The head interval [0, min(x, 1)] is mapped by u = t**(1/(mu+power+2)), which
    removes the algebraic behaviour at the origin (including the integrable
    singularity when mu + power + 1 < 0).
    """
    if tol < 1e-13:
        raise ValueError("quadrature tolerance below 1e-13 is not attainable")
    shift = _default_shift(spec)
    value, err, n, ok = _quadrature_shifted(spec, tol, shift)
    scale = math.exp(shift)
    result = EvalResult(value * scale, err * scale, n, ok)
    if not ok:
        warnings.warn(
            f"quadrature did not reach tol={tol} for {spec}; best estimate returned",
            SlowConvergenceWarning,
            stacklevel=2,
        )
    return result


def normalized_quadrature(spec, tol=1e-13):
    """exp(beta x) x**-power I by quadrature, without forming I itself."""
    shift = spec.beta * spec.x - spec.power * math.log(spec.x)
    # integrand times exp(beta x) x**-power, shifted down by the growth of t~
    growth = max(0.0, spec.x - 0.5 * math.log(2 * math.pi * spec.x))
    value, err, n, ok = _quadrature_shifted(spec, tol, growth - shift)
    scale = math.exp(growth)
    return EvalResult(value * scale, err * scale, n, ok)


def integral_closed_form_beta1(mu, nu, x):
    """Exact value of int_0^x exp(-u) u**nu t~(mu, nu, u) du for mu > -3/2, -1/2 < nu < mu + 1."""
    if not (mu > -1.5 and -0.5 < nu < mu + 1):
        raise ValueError(f"closed form needs mu > -3/2 and -1/2 < nu < mu + 1, got ({mu}, {nu})")
    if x <= 0:
        raise ValueError("closed form needs x > 0")
    first = math.exp(-x) * x ** (nu + 1) / (2 * nu + 1) * (t_tilde(mu, nu, x) + t_tilde(mu + 1, nu + 1, x))
    coef = reciprocal_gamma((mu - nu + 1) / 2) * reciprocal_gamma((mu + nu + 3) / 2)
    second = lower_incomplete_gamma(mu + nu + 2, x) * coef / (2.0**mu * (2 * nu + 1))
    return first - second


def closed_form_derivative_check(mu, nu, x, h=1e-4):
    """|central difference of the closed form - exp(-x) x**nu t~(mu, nu, x)|."""
    slope = (integral_closed_form_beta1(mu, nu, x + h) - integral_closed_form_beta1(mu, nu, x - h)) / (2 * h)
    return abs(slope - math.exp(-x) * x**nu * t_tilde(mu, nu, x))


def _weighted_sum(spec, kmax):
    """x * sum_k tau_k g_k in double precision, with a bound on what was dropped."""
    ser = lommel_series(spec.mu, spec.nu, spec.x)
    n_all = len(ser.rel)
    n = min(n_all, kmax)
    s0 = spec.exponent + 2 * ser.start
    z = spec.beta * spec.x
    g = scaled_lower_gamma_ladder(s0, z, n + 1)
    rel = ser.rel
    weighted = [rel[k] * g[k] for k in range(n)]
    total = math.fsum(weighted)
    # g_k decreases in k, so every dropped term is at most |tau_k| g_n
    dropped = math.fsum(abs(t) for t in rel[n:]) + ser.tail_rel
    tail = dropped * g[n]
    rounding = 4 * _EPS * (n + 4) * math.fsum(abs(w) for w in weighted)
    lead = ser.lead() * spec.x
    value = lead * total
    err = abs(lead) * (tail + rounding)
    return value, err, abs(lead) * tail, n


def _log_normalized_series(spec):
    k0, log_tau, signs = log_series_terms(spec.mu, spec.nu, spec.x)
    s0 = spec.exponent + 2 * k0
    log_g = np.array(log_scaled_lower_gamma_ladder(s0, spec.beta * spec.x, len(log_tau)))
    return math.log(spec.x) + _signed_logsumexp(log_tau + log_g, signs)


def integral_gamma_series(spec, kmax=SERIES_MAX_TERMS, tol=SERIES_TOL):
    """I by term-by-term integration; each term is an incomplete gamma function.

    Valid for 0 < beta < 1 (beta = 0 is :func:`integral_power_series`).
    Warns with :class:`SlowConvergenceWarning` when the tail bound after
    ``kmax`` terms exceeds ``tol`` relative to the sum.
    """
    if not 0.0 < spec.beta < 1.0:
        raise ValueError(f"gamma series route needs 0 < beta < 1, got {spec.beta}")
    return _series_integral(spec, kmax, tol)


def integral_power_series(spec, kmax=SERIES_MAX_TERMS, tol=SERIES_TOL):
    """I at beta = 0, where each term integrates to a plain power of x."""
    if spec.beta != 0.0:
        raise ValueError(f"power series route needs beta = 0, got {spec.beta}")
    return _series_integral(spec, kmax, tol)


def _series_integral(spec, kmax, tol):
    if kmax < 1:
        raise ValueError("kmax must be at least 1")
    value, err, tail, n = _weighted_sum(spec, kmax)
    factor = math.exp(-spec.beta * spec.x) * spec.x**spec.power
    converged = tail <= tol * abs(value)
    if not converged:
        warnings.warn(
            f"series tail {tail / abs(value):.3g} exceeds tol={tol} after {n} terms for {spec}",
            SlowConvergenceWarning,
            stacklevel=3,
        )
    return EvalResult(value * factor, err * factor, n, converged)


def normalized_series(spec, kmax=SERIES_MAX_TERMS):
    """exp(beta x) x**-power I from the series, as an :class:`EvalResult`."""
    value, err, tail, n = _weighted_sum(spec, kmax)
    return EvalResult(value, err, n, tail <= SERIES_TOL * abs(value))


def evaluate_normalized(spec, route="auto", tol=1e-13):
    """Normalised integral with the route that was used, as ``(EvalResult, route)``.

    ``auto`` prefers the series when its tail bound meets 1e-12 within 500
    terms and falls back to quadrature otherwise.
    """
    if route == "auto":
        res = normalized_series(spec)
        if res.converged:
            return res, "series"
        return normalized_quadrature(spec, tol), "quadrature"
    if route == "series":
        return normalized_series(spec), "series"
    if route == "quadrature":
        return normalized_quadrature(spec, tol), "quadrature"
    if route == "closed":
        if spec.beta != 1.0 or spec.power != spec.nu:
            raise ValueError("closed form applies only at beta = 1 with power = nu")
        value = integral_closed_form_beta1(spec.mu, spec.nu, spec.x) * math.exp(spec.x) * spec.x**-spec.nu
        return EvalResult(value, abs(value) * 1e-13, 1), "closed"
    raise ValueError(f"unknown route {route!r}")


def normalized_F(spec, route="auto", log=False):
    """F = exp(beta x) x**-power int_0^x exp(-beta u) u**power t~(mu, nu, u) du.

    With ``log=True`` the logarithm is returned; past x ~ 650 only that form is
    representable and is computed entirely in log space.
    """
    if log and spec.x > LOG_SWITCH_X:
        return _log_normalized_series(spec)
    if spec.x > LOG_SWITCH_X:
        raise OverflowError(f"F overflows double precision at x={spec.x}; pass log=True")
    res, _ = evaluate_normalized(spec, route)
    return math.log(res.value) if log else res.value


def integral(spec, route="auto", tol=1e-13):
    """I itself, by the requested route (``auto``, ``series``, ``quadrature``, ``closed``)."""
    if route == "quadrature":
        return integral_quadrature(spec, tol)
    if route == "closed":
        value = integral_closed_form_beta1(spec.mu, spec.nu, spec.x)
        return EvalResult(value, abs(value) * 1e-13, 1)
    res, _ = evaluate_normalized(spec, route, tol)
    factor = math.exp(-spec.beta * spec.x) * spec.x**spec.power
    return EvalResult(res.value * factor, res.abs_error_estimate * factor, res.terms_or_evals, res.converged)
