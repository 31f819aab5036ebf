"""Gamma-function family used by the Lommel series and the weighted integrals.

The lower incomplete gamma function is evaluated through the scaled quantity

    g(a, x) = exp(x) * x**(-a) * gamma_lower(a, x)

which stays moderate when ``gamma_lower`` itself would over- or underflow and
obeys the stable backward recurrence ``g(a) = (1 + x*g(a+1)) / a``.
"""

import math

from scipy import special

_EPS = 1e-15
_MAX_ITER = 100_000
_TINY = 1e-300


def reciprocal_gamma(a):
    """1/Gamma(a), exactly zero at the poles a = 0, -1, -2, ..."""
    if not math.isfinite(a):
        raise ValueError(f"reciprocal_gamma needs a finite argument, got {a!r}")
    if a <= 0 and a == math.floor(a):
        return 0.0
    return float(special.rgamma(a))


def is_gamma_pole(a):
    return a <= 0 and a == math.floor(a)


def log_abs_gamma(a):
    """log|Gamma(a)| and the sign of Gamma(a); poles raise."""
    if is_gamma_pole(a):
        raise ValueError(f"Gamma has a pole at {a!r}")
    return math.lgamma(a), float(special.gammasgn(a))


def _scaled_series(a, x):
    # sum_{n>=0} x**n / (a (a+1) ... (a+n))
    term = 1.0 / a
    total = term
    for n in range(1, _MAX_ITER):
        term *= x / (a + n)
        total += term
        if abs(term) < abs(total) * _EPS * 0.1:
            return total
    raise ArithmeticError(f"incomplete gamma series did not converge (a={a}, x={x})")


def _log_upper_cf(a, x):
    """log Gamma(a, x) by the modified Lentz continued fraction (x >= a+1)."""
    b = x + 1.0 - a
    c = 1.0 / _TINY
    d = 1.0 / b
    h = d
    for i in range(1, _MAX_ITER):
        an = -i * (i - a)
        b += 2.0
        d = an * d + b
        if abs(d) < _TINY:
            d = _TINY
        c = b + an / c
        if abs(c) < _TINY:
            c = _TINY
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < _EPS * 0.1:
            return -x + a * math.log(x) + math.log(h)
    raise ArithmeticError(f"incomplete gamma continued fraction did not converge (a={a}, x={x})")


def log_scaled_lower_gamma(a, x):
    """log g(a, x) = x - a*log(x) + log gamma_lower(a, x), for a > 0, x > 0."""
    if x < a + 1.0:
        return math.log(_scaled_series(a, x))
    log_upper = _log_upper_cf(a, x)
    log_q = log_upper - math.lgamma(a)
    return math.lgamma(a) + math.log1p(-math.exp(log_q)) + x - a * math.log(x)


def scaled_lower_gamma(a, x):
    """g(a, x) = exp(x) x**-a gamma_lower(a, x); equals 1/a at x = 0."""
    if a <= 0:
        raise ValueError(f"scaled lower gamma needs a > 0, got a={a!r}")
    if x < 0:
        raise ValueError(f"scaled lower gamma needs x >= 0, got x={x!r}")
    if x == 0:
        return 1.0 / a
    if x < a + 1.0:
        return _scaled_series(a, x)
    return math.exp(log_scaled_lower_gamma(a, x))


def log_lower_incomplete_gamma(a, x):
    if a <= 0:
        raise ValueError(f"lower incomplete gamma needs a > 0, got a={a!r}")
    if x <= 0:
        if x == 0:
            return -math.inf
        raise ValueError(f"lower incomplete gamma needs x >= 0, got x={x!r}")
    return log_scaled_lower_gamma(a, x) - x + a * math.log(x)


def lower_incomplete_gamma(a, x):
    """gamma(a, x) = integral_0^x exp(-u) u**(a-1) du.

    Series expansion below x = a+1, continued fraction for the complement above.
    """
    return math.exp(log_lower_incomplete_gamma(a, x))


def scaled_lower_gamma_ladder(s0, z, n):
    """g(s0 + 2k, z) for k = 0..n-1, by backward recurrence from the top.

    Each backward step ``g(s) = (1 + z g(s+1)) / s`` only adds positive
    quantities, so the recurrence damps any error in the starting value.
    """
    out = [0.0] * n
    s_top = s0 + 2 * (n - 1)
    g = scaled_lower_gamma(s_top, z)
    out[-1] = g
    for k in range(n - 2, -1, -1):
        s = s0 + 2 * k
        g = (1.0 + z * g) / (s + 1.0)
        g = (1.0 + z * g) / s
        out[k] = g
    return out


def log_scaled_lower_gamma_ladder(s0, z, n):
    """Logarithmic counterpart of :func:`scaled_lower_gamma_ladder` for huge z."""
    out = [0.0] * n
    s_top = s0 + 2 * (n - 1)
    lg = log_scaled_lower_gamma(s_top, z) if z > 0 else -math.log(s_top)
    out[-1] = lg
    log_z = math.log(z) if z > 0 else -math.inf
    for k in range(n - 2, -1, -1):
        s = s0 + 2 * k
        lg = _log1p_exp(log_z + lg) - math.log(s + 1.0)
        lg = _log1p_exp(log_z + lg) - math.log(s)
        out[k] = lg
    return out


def _log1p_exp(t):
    # log(1 + exp(t)) without overflow
    if t > 35.0:
        return t + math.log1p(math.exp(-t))
    return math.log1p(math.exp(t))
