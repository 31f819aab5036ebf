"""Modified Lommel function of the first kind and its Struve specialisation.

The normalised function is

    t~(mu, nu, x) = sum_k (x/2)**(mu+2k+1) / (Gamma(k + (mu-nu+3)/2) Gamma(k + (mu+nu+3)/2))

and the unnormalised ``t`` differs from it by 2**(mu-1) Gamma((mu-nu+1)/2) Gamma((mu+nu+1)/2).
Terms are generated from the first non-vanishing one by the exact ratio
``(x/2)**2 / ((k+a)(k+b))``, so only one pair of gamma evaluations is needed.
"""

import math
from dataclasses import dataclass

import numpy as np
from scipy import special

from .gamma import is_gamma_pole, log_abs_gamma, reciprocal_gamma

MAX_TERMS = 20_000
_STOP_REL = 1e-17
_EPS = np.finfo(float).eps
_LOG_HUGE = 700.0


@dataclass(frozen=True)
class LommelParams:
    """An order pair (mu, nu) with the parameter regions used throughout."""

    mu: float
    nu: float

    @property
    def integrable(self):
        """The weighted integral from 0 exists."""
        return self.mu + self.nu > -2

    @property
    def positive_integrand(self):
        return self.mu + self.nu > -2 and self.mu - self.nu >= -3

    @property
    def monotone_regime(self):
        """t~(mu, nu) < t~(mu-1, nu-1) holds for every x > 0."""
        return self.mu > -0.5 and 0.5 <= self.nu < self.mu + 1


@dataclass(frozen=True)
class EvalResult:
    value: float
    abs_error_estimate: float
    terms_or_evals: int
    converged: bool = True

    def __float__(self):
        return float(self.value)


@dataclass(frozen=True)
class LommelSeries:
    """Truncated series for t~(mu, nu, x), stored relative to its leading term.

    ``rel[k]`` is term ``start + k`` divided by the leading term, whose
    logarithm (of the absolute value) and sign are kept separately so that
    huge arguments can still be handled in log space.
    """

    mu: float
    nu: float
    x: float
    start: int
    log_lead: float
    sign_lead: float
    rel: tuple
    tail_rel: float
    converged: bool

    @property
    def a(self):
        return (self.mu - self.nu + 3) / 2 + self.start

    @property
    def b(self):
        return (self.mu + self.nu + 3) / 2 + self.start

    def lead(self):
        if self.log_lead > _LOG_HUGE:
            raise OverflowError(
                f"t~({self.mu}, {self.nu}, {self.x}) overflows double precision; use the log form"
            )
        power = self.mu + 1 + 2 * self.start
        try:
            direct = (self.x / 2) ** power * reciprocal_gamma(self.a) * reciprocal_gamma(self.b)
        except OverflowError:
            direct = math.inf
        # the direct product avoids amplifying rounding in log_lead
        if direct != 0.0 and math.isfinite(direct) and abs(direct) > 1e-290:
            return direct
        return self.sign_lead * math.exp(self.log_lead)

    def rel_sum(self):
        return math.fsum(self.rel)

    def rel_abs_sum(self):
        return math.fsum(abs(t) for t in self.rel)

    def log_abs_value(self):
        return self.log_lead + math.log(abs(self.rel_sum()))


def _first_live_index(a, b):
    # 1/Gamma(k + c) vanishes for k + c in {0, -1, ...}
    k0 = 0
    for c in (a, b):
        if is_gamma_pole(c):
            k0 = max(k0, int(1 - c))
    return k0


def _check_x(x):
    if not math.isfinite(x):
        raise ValueError(f"x must be finite, got {x!r}")
    if x < 0:
        raise ValueError(f"negative arguments are not supported, got x={x!r}")


def lommel_series(mu, nu, x, max_terms=MAX_TERMS):
    """Build the truncated series for t~(mu, nu, x)."""
    _check_x(x)
    a = (mu - nu + 3) / 2
    b = (mu + nu + 3) / 2
    k0 = _first_live_index(a, b)
    a0, b0 = a + k0, b + k0
    power = mu + 1 + 2 * k0
    if x == 0:
        if power > 0:
            return LommelSeries(mu, nu, x, k0, -math.inf, 1.0, (1.0,), 0.0, True)
        if power < 0:
            raise ValueError(f"t~({mu}, {nu}, x) is unbounded at x = 0")
    lg_a, sg_a = log_abs_gamma(a0)
    lg_b, sg_b = log_abs_gamma(b0)
    log_half_x = math.log(x / 2) if x > 0 else 0.0
    log_lead = power * log_half_x - lg_a - lg_b
    sign_lead = sg_a * sg_b

    q = (x / 2) ** 2
    rel = [1.0]
    t = 1.0
    s = 1.0
    tail = 0.0
    converged = False
    for k in range(max_terms):
        r = q / ((k + a0) * (k + b0))
        t_next = t * r
        settled = k + a0 > 0 and k + b0 > 0 and r < 1.0
        if settled and abs(t_next) <= _STOP_REL * abs(s):
            r_next = q / ((k + 1 + a0) * (k + 1 + b0))
            tail = abs(t_next) / (1.0 - r_next)
            converged = True
            break
        if not math.isfinite(t_next):
            raise OverflowError(f"t~({mu}, {nu}, {x}) series terms overflow")
        rel.append(t_next)
        s += t_next
        t = t_next
    return LommelSeries(mu, nu, x, k0, log_lead, sign_lead, tuple(rel), tail, converged)


def _result_from_series(ser, factor=1.0):
    if ser.log_lead == -math.inf:
        return EvalResult(0.0, 0.0, 1, True)
    lead = ser.lead() * factor
    total = ser.rel_sum()
    value = lead * total
    if not math.isfinite(value):
        raise OverflowError(f"t~({ser.mu}, {ser.nu}, {ser.x}) overflows double precision")
    # truncation tail plus accumulated rounding in the ratio recurrence
    rounding = _EPS * len(ser.rel) * ser.rel_abs_sum()
    err = abs(lead) * (ser.tail_rel + rounding)
    return EvalResult(value, err, len(ser.rel), ser.converged)


def lommel_t_tilde(mu, nu, x):
    """Normalised modified Lommel function t~(mu, nu, x) as an :class:`EvalResult`."""
    return _result_from_series(lommel_series(mu, nu, x))


def t_tilde(mu, nu, x):
    """Float shorthand for :func:`lommel_t_tilde`."""
    return lommel_t_tilde(mu, nu, x).value


def log_t_tilde(mu, nu, x):
    """log t~(mu, nu, x) for x > 0 where t~ is positive; works past double overflow."""
    if x <= 0:
        raise ValueError("log_t_tilde needs x > 0")
    if x > 600:
        return _log_t_tilde_large(mu, nu, x)
    ser = lommel_series(mu, nu, x)
    total = ser.rel_sum()
    if ser.sign_lead * total <= 0:
        raise ValueError(f"t~({mu}, {nu}, {x}) is not positive")
    return ser.log_lead + math.log(abs(total))


def log_series_terms(mu, nu, x, n_extra=0):
    """Logarithms and signs of the series terms of t~ for very large x.

    Returns ``(start, log_terms, signs)``, with enough terms that the omitted tail
    is below 1e-17 of the largest term (plus ``n_extra`` more).
    """
    a = (mu - nu + 3) / 2
    b = (mu + nu + 3) / 2
    k0 = _first_live_index(a, b)
    a0, b0 = a + k0, b + k0
    power = mu + 1 + 2 * k0
    lg_a, sg_a = log_abs_gamma(a0)
    lg_b, sg_b = log_abs_gamma(b0)
    log_q = 2 * math.log(x / 2)
    # terms peak near k = x/2; past k ~ x/2 + 20 sqrt(x) the decay is ample
    n = int(x / 2 + 25 * math.sqrt(x) + abs(a0) + abs(b0) + 50) + n_extra
    k = np.arange(n - 1, dtype=float)
    den = (k + a0) * (k + b0)
    steps = log_q - np.log(np.abs(den))
    log_terms = np.concatenate(([0.0], np.cumsum(steps))) + power * math.log(x / 2) - lg_a - lg_b
    signs = np.concatenate(([1.0], np.cumprod(np.sign(den)))) * sg_a * sg_b
    return k0, log_terms, signs


def _signed_logsumexp(log_terms, signs):
    m = float(np.max(log_terms))
    total = math.fsum((signs * np.exp(log_terms - m)).tolist())
    if total <= 0:
        raise ValueError("series is not positive")
    return m + math.log(total)


def _log_t_tilde_large(mu, nu, x):
    _, log_terms, signs = log_series_terms(mu, nu, x)
    return _signed_logsumexp(log_terms, signs)


def lommel_prefactor(mu, nu):
    """2**(mu-1) Gamma((mu-nu+1)/2) Gamma((mu+nu+1)/2), the t / t~ ratio."""
    p, q = (mu - nu + 1) / 2, (mu + nu + 1) / 2
    if is_gamma_pole(p) or is_gamma_pole(q):
        raise ValueError(f"t({mu}, {nu}, .) is undefined: Gamma pole in its prefactor")
    return 2.0 ** (mu - 1) * special.gamma(p) * special.gamma(q)


def lommel_t(mu, nu, x):
    """Unnormalised modified Lommel function of the first kind."""
    factor = lommel_prefactor(mu, nu)
    return _result_from_series(lommel_series(mu, nu, x), factor)


def struve_L(nu, x):
    """Modified Struve function L_nu(x) from its own power series.

    sum_k (x/2)**(nu+2k+1) / (Gamma(k+3/2) Gamma(k+nu+3/2)); kept separate from
    the general Lommel path so the two can be checked against each other.
    """
    _check_x(x)
    b = nu + 1.5
    k0 = int(1 - b) if is_gamma_pole(b) else 0
    power = nu + 1 + 2 * k0
    if x == 0:
        if power > 0:
            return EvalResult(0.0, 0.0, 1)
        raise ValueError(f"L_{nu}(x) is unbounded at x = 0")
    half = x / 2
    coef = reciprocal_gamma(k0 + 1.5) * reciprocal_gamma(k0 + b)
    term = half**power * coef
    terms = [term]
    running = term
    k = k0
    tail = 0.0
    converged = False
    while len(terms) < MAX_TERMS:
        term = term * half * half / ((k + 1.5) * (k + b))
        k += 1
        r = half * half / ((k + 1.5) * (k + b))
        if k + b > 0 and r < 1 and abs(term) <= _STOP_REL * abs(running):
            tail = abs(term) / (1 - r)
            converged = True
            break
        terms.append(term)
        running += term
    value = math.fsum(terms)
    if not math.isfinite(value):
        raise OverflowError(f"L_{nu}({x}) overflows double precision")
    err = tail + _EPS * len(terms) * math.fsum(abs(t) for t in terms)
    return EvalResult(value, err, len(terms), converged)


def a_term(mu, nu, x):
    """Inhomogeneous term of the three-term recurrence.

    (x/2)**mu / (Gamma((mu-nu+1)/2) Gamma((mu+nu+3)/2)), zero at gamma poles.
    """
    if x <= 0:
        raise ValueError(f"a_term needs x > 0, got {x!r}")
    c = reciprocal_gamma((mu - nu + 1) / 2) * reciprocal_gamma((mu + nu + 3) / 2)
    if c == 0.0:
        return 0.0
    return (x / 2) ** mu * c


def recurrence_residual(mu, nu, x):
    """t~(mu-1,nu-1) - t~(mu+1,nu+1) - (2 nu / x) t~(mu,nu) - a(mu,nu); zero in exact arithmetic."""
    if x <= 0:
        raise ValueError(f"recurrence_residual needs x > 0, got {x!r}")
    return (
        t_tilde(mu - 1, nu - 1, x)
        - t_tilde(mu + 1, nu + 1, x)
        - 2 * nu / x * t_tilde(mu, nu, x)
        - a_term(mu, nu, x)
    )


def recurrence_scale(mu, nu, x):
    """Largest magnitude among the recurrence terms, for relative comparisons."""
    return max(
        abs(t_tilde(mu - 1, nu - 1, x)),
        abs(t_tilde(mu + 1, nu + 1, x)),
        abs(2 * nu / x * t_tilde(mu, nu, x)),
        abs(a_term(mu, nu, x)),
    )


def small_x_asymptotic(mu, nu, x):
    """Two-term behaviour of t~ as x -> 0 (valid for mu > -3, |nu| < mu + 3)."""
    if not (mu > -3 and abs(nu) < mu + 3):
        raise ValueError(f"small-x form needs mu > -3 and |nu| < mu + 3, got ({mu}, {nu})")
    if x <= 0:
        raise ValueError("small-x form needs x > 0")
    lead = (x / 2) ** (mu + 1) * reciprocal_gamma((mu - nu + 3) / 2) * reciprocal_gamma((mu + nu + 3) / 2)
    return lead * (1 + x * x / ((mu + 3) ** 2 - nu * nu))


def large_x_asymptotic(x):
    """exp(x) / sqrt(2 pi x), the common large-x behaviour of every t~(mu, nu)."""
    if x <= 0:
        raise ValueError("large-x form needs x > 0")
    if x > 709:
        raise OverflowError(f"exp({x}) overflows double precision")
    return math.exp(x) / math.sqrt(2 * math.pi * x)


def ratio_lower_bound(mu, nu, x, sharp=False):
    """Lower bound for t~(mu, nu, x) / t~(mu-1, nu-1, x) when mu > -1, 0 <= nu < mu + 1.

    The sharp form is x / (mu + 1/2 + sqrt((nu+1/2)**2 + x**2)); the plain form
    replaces the square root by its triangle-inequality majorant.
    """
    if not (mu > -1 and 0 <= nu < mu + 1):
        raise ValueError(f"ratio bound needs mu > -1 and 0 <= nu < mu + 1, got ({mu}, {nu})")
    if x <= 0:
        raise ValueError("ratio bound needs x > 0")
    if sharp:
        return x / (mu + 0.5 + math.hypot(nu + 0.5, x))
    return x / (mu + nu + 1 + x)


def reduced_series_vec(mu, nu, u, n_terms):
    """t~(mu, nu, u) / (u/2)**(mu+1+2*start) for an array of u, using ``n_terms`` terms.

    Returns ``(start, values)``. The reduced function is entire in u**2, which
    is what the quadrature needs near the origin.
    """
    a = (mu - nu + 3) / 2
    b = (mu + nu + 3) / 2
    k0 = _first_live_index(a, b)
    a0, b0 = a + k0, b + k0
    coef = reciprocal_gamma(a0) * reciprocal_gamma(b0)
    u = np.asarray(u, dtype=float)
    q = (u / 2) ** 2
    if n_terms <= 1:
        return k0, np.full_like(u, coef)
    k = np.arange(n_terms - 1, dtype=float)
    ratios = q[None, :] / ((k + a0) * (k + b0))[:, None]
    terms = np.cumprod(ratios, axis=0)
    return k0, coef * (1.0 + terms.sum(axis=0))
