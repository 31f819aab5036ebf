"""Upper and lower bounds for the weighted Lommel integral, with hypothesis gating.

Every bound has the shape ``exp(-beta x) x**nu * m`` for an explicit
multiplier ``m`` built from t~ values; :class:`BoundResult` carries both the
multiplier (``normalized``) and the raw right-hand side (``value``).
Hypotheses are checked with the strict or non-strict comparison exactly as
stated for each inequality, and a bound outside its region is reported with
``in_domain=False`` instead of raising.
"""

import enum
import math
from dataclasses import dataclass

from .gamma import lower_incomplete_gamma, reciprocal_gamma, scaled_lower_gamma
from .integral import IntegralSpec
from .lommel import struve_L, t_tilde

SQRT17 = math.sqrt(17.0)
A_THRESHOLD = 0.5 * (3 + SQRT17)
DEFAULT_K = 4


class Side(str, enum.Enum):
    UPPER = "upper"
    LOWER = "lower"


class BoundKind(enum.Enum):
    """All bounds, tagged with their display label, side and target integrand.

    ``shifted`` marks the bounds whose target integral carries
    t~(mu+1, nu+1) against u**nu rather than t~(mu, nu).
    """

    UB_LEMMA_SMALLX = ("2.1", Side.UPPER, False)
    UB_LEMMA_LARGEX = ("2.2", Side.UPPER, False)
    UB_THM2_A = ("2.4", Side.UPPER, False)
    UB_THM2_SQRT17 = ("2.5", Side.UPPER, False)
    LB_BASIC = ("2.6", Side.LOWER, False)
    LB_REFINED = ("2.7", Side.LOWER, False)
    LB_SQRT17 = ("2.8", Side.LOWER, False)
    LB_SERIES = ("2.9", Side.LOWER, False)
    LB_PROP_BASIC = ("2.10", Side.LOWER, True)
    LB_PROP_REFINED = ("2.11", Side.LOWER, True)
    LB_PROP_SQRT17 = ("2.12", Side.LOWER, True)
    STRUVE_UB_A = ("2.13", Side.UPPER, False)
    STRUVE_UB_SQRT8 = ("2.14", Side.UPPER, False)
    STRUVE_LB = ("2.15", Side.LOWER, False)
    PRIOR_UB_GAU1 = ("2.16", Side.UPPER, False)
    PRIOR_UB_GAU2 = ("2.17", Side.UPPER, False)
    COMBINED_CNU = ("C_nu", Side.UPPER, False)

    def __init__(self, label, side, shifted):
        self.label = label
        self.side = side
        self.shifted = shifted

    @classmethod
    def parse(cls, text):
        """Accept an enum name (any case) or a display label such as ``2.9``."""
        key = text.strip()
        for kind in cls:
            if key.upper() == kind.name or key == kind.label:
                return kind
        raise ValueError(f"unknown bound kind {text!r}")


@dataclass(frozen=True)
class BoundResult:
    kind: BoundKind
    value: float
    in_domain: bool
    side: Side
    normalized: float = math.nan

    def holds_for(self, integral_value, rel_tol=1e-12):
        """True when the bound is on the right side of ``integral_value`` up to rel_tol."""
        slack = rel_tol * abs(integral_value)
        if self.side is Side.UPPER:
            return self.value - integral_value >= -slack
        return integral_value - self.value >= -slack


def const_A(mu, nu):
    disc = (mu - nu) ** 2 + 8 * (mu + nu + 3)
    if disc < 0:
        raise ValueError(f"A(mu, nu) needs a nonnegative discriminant, got {disc} at ({mu}, {nu})")
    return 0.5 * (mu - nu) + 0.5 * math.sqrt(disc)


def _normalized_B(mu, nu, beta, x):
    # B exp(beta x) x**-nu = x**(mu+1) g(mu+nu+1, beta x) / (2**mu Gamma(.) Gamma(.))
    coef = reciprocal_gamma((mu - nu + 1) / 2) * reciprocal_gamma((mu + nu + 3) / 2)
    if coef == 0.0:
        return 0.0
    return x ** (mu + 1) * scaled_lower_gamma(mu + nu + 1, beta * x) * coef / 2.0**mu


def const_B(mu, nu, beta, x):
    """beta**-(mu+nu+1) gamma(mu+nu+1, beta x) / (2**mu Gamma((mu-nu+1)/2) Gamma((mu+nu+3)/2))."""
    if not mu + nu > -1:
        raise ValueError(f"B needs mu + nu > -1, got ({mu}, {nu})")
    if not 0 < beta < 1:
        raise ValueError(f"B needs 0 < beta < 1, got {beta}")
    if x <= 0:
        raise ValueError("B needs x > 0")
    coef = reciprocal_gamma((mu - nu + 1) / 2) * reciprocal_gamma((mu + nu + 3) / 2)
    s = mu + nu + 1
    return beta**-s * lower_incomplete_gamma(s, beta * x) * coef / 2.0**mu


def const_M(mu, nu, beta, xstar):
    if not xstar > 1 / (1 - beta):
        raise ValueError(f"M needs xstar > 1/(1-beta) = {1 / (1 - beta)}, got {xstar}")
    return max((mu + nu + 3 + 2 * xstar) / (2 * nu + 1), xstar / ((1 - beta) * xstar - 1))


def sharper_A_predicate(mu, nu):
    """True when the A-constant upper bound beats the sqrt(17) one at (mu, nu)."""
    if not (mu > -1.5 and -0.5 < nu < mu + 1):
        raise ValueError(f"comparison is defined for mu > -3/2, -1/2 < nu < mu + 1, got ({mu}, {nu})")
    return const_A(mu, nu) < A_THRESHOLD


def struve_constant(nu):
    """C_nu of the combined Struve upper bound (None below nu = -1/2)."""
    if nu >= 0.5:
        return 2 * (nu + 1)
    if abs(nu) < 0.5:
        return 2 * nu + 3 + math.sqrt(2 * (2 * nu + 3))
    return None


# hypotheses on (mu, nu); beta in (0, 1) is checked separately
def _thm2_region(mu, nu):
    return mu > -1.5 and -0.5 < nu < mu + 1


def _basic_region(mu, nu):
    return mu > -1 and -mu - 1 < nu <= 0


def _refined_region(mu, nu):
    return mu > 0.5 and 1.5 <= nu < mu + 1


def _sqrt17_region(mu, nu):
    return mu > -0.5 and 0.5 < nu < mu + 1


def _series_region(mu, nu):
    return mu > -2.5 and -mu - 2 < nu <= mu + 3


def _prior_region(mu, nu):
    return mu > -0.5 and 0.5 <= nu < mu + 1


_REGIONS = {
    BoundKind.UB_LEMMA_SMALLX: _thm2_region,
    BoundKind.UB_LEMMA_LARGEX: _thm2_region,
    BoundKind.UB_THM2_A: _thm2_region,
    BoundKind.UB_THM2_SQRT17: _thm2_region,
    BoundKind.LB_BASIC: _basic_region,
    BoundKind.LB_REFINED: _refined_region,
    BoundKind.LB_SQRT17: _sqrt17_region,
    BoundKind.LB_SERIES: _series_region,
    BoundKind.LB_PROP_BASIC: _basic_region,
    BoundKind.LB_PROP_REFINED: _refined_region,
    BoundKind.LB_PROP_SQRT17: _sqrt17_region,
    BoundKind.STRUVE_UB_A: lambda mu, nu: mu == nu and nu > -0.5,
    BoundKind.STRUVE_UB_SQRT8: lambda mu, nu: mu == nu and nu > -0.5,
    BoundKind.STRUVE_LB: lambda mu, nu: mu == nu and nu > 0.5,
    BoundKind.PRIOR_UB_GAU1: _prior_region,
    BoundKind.PRIOR_UB_GAU2: _prior_region,
    BoundKind.COMBINED_CNU: lambda mu, nu: mu == nu and nu > -0.5,
}


def default_xstar(kind, beta, x):
    if kind is BoundKind.UB_LEMMA_SMALLX:
        return x
    if kind is BoundKind.UB_LEMMA_LARGEX:
        return 2.0 / (1.0 - beta)
    return None


def in_domain(kind, spec, xstar=None):
    """Whether ``kind``'s hypotheses hold at ``spec`` (and at ``xstar`` for the lemma bounds)."""
    if not 0 < spec.beta < 1 or spec.power != spec.nu:
        return False
    if not _REGIONS[kind](spec.mu, spec.nu):
        return False
    if xstar is None:
        xstar = default_xstar(kind, spec.beta, spec.x)
    if kind is BoundKind.UB_LEMMA_SMALLX:
        return xstar > 0 and 0 < spec.x <= xstar
    if kind is BoundKind.UB_LEMMA_LARGEX:
        return xstar > 1 / (1 - spec.beta) and spec.x >= xstar
    return True


def target_spec(kind, spec):
    """The integral that ``kind`` bounds: I itself, or u**nu against t~(mu+1, nu+1)."""
    if kind.shifted:
        return IntegralSpec(spec.mu + 1, spec.nu + 1, spec.beta, spec.x, power=spec.nu)
    return spec


def _lower_template(mu, nu, beta, x, t_self, bn, upper_const=None, refined=False):
    # (1/(1-beta)) { (1 - c/x) t~(mu,nu) - B e^{beta x} x^-nu }
    if refined:
        c = 4 * nu * nu / ((2 * nu - 1) * (1 - beta))
    elif upper_const is not None:
        c = 2 * nu * (upper_const - 2) / ((2 * nu - 1) * (1 - beta))
    else:
        c = 0.0
    return ((1 - c / x) * t_self - bn) / (1 - beta)


def sqrt17_upper_constant(mu, nu):
    """Numerator constant of the sqrt(17) upper bound, mu + nu + (9 + sqrt 17)/2."""
    return mu + nu + 0.5 * (9 + SQRT17)


def struve_sqrt8_constant(nu):
    return 2 * nu + 3 + 2 * math.sqrt(2)


def series_lower_multiplier(mu, nu, beta, x, K=DEFAULT_K):
    """sum_{k=0}^{K} beta**k t~(mu+k+1, nu+k+1, x); K=None sums until the terms are negligible."""
    if K is not None:
        if K < 0:
            raise ValueError("truncation K must be nonnegative")
        return math.fsum(beta**k * t_tilde(mu + k + 1, nu + k + 1, x) for k in range(K + 1))
    terms = []
    k = 0
    while True:
        term = beta**k * t_tilde(mu + k + 1, nu + k + 1, x)
        terms.append(term)
        if k > 2 and abs(term) < 1e-17 * abs(math.fsum(terms)):
            return math.fsum(terms)
        k += 1
        if k > 100_000:
            raise ArithmeticError("infinite series lower bound did not converge")


def gau1_three_term(spec):
    """Intermediate three-term upper bound that precedes the 2(nu+1) bound (normalised form)."""
    mu, nu, beta, x = spec.mu, spec.nu, spec.beta, spec.x
    coef = reciprocal_gamma((mu - nu + 1) / 2) * reciprocal_gamma((mu + nu + 5) / 2)
    correction = (x / 2) ** (mu + 2) * coef / (mu + nu + 2)
    inner = 2 * (nu + 1) * t_tilde(mu + 1, nu + 1, x) - t_tilde(mu + 3, nu + 3, x) - correction
    return inner / ((2 * nu + 1) * (1 - beta))


def _multiplier(kind, spec, xstar, K):
    mu, nu, beta, x = spec.mu, spec.nu, spec.beta, spec.x
    if kind is BoundKind.UB_LEMMA_SMALLX:
        return (mu + nu + 3 + 2 * xstar) / (2 * nu + 1) * t_tilde(mu + 1, nu + 1, x)
    if kind is BoundKind.UB_LEMMA_LARGEX:
        return const_M(mu, nu, beta, xstar) * t_tilde(mu + 1, nu + 1, x)
    if kind is BoundKind.UB_THM2_A:
        return (mu + nu + 3 + const_A(mu, nu)) / ((2 * nu + 1) * (1 - beta)) * t_tilde(mu + 1, nu + 1, x)
    if kind is BoundKind.UB_THM2_SQRT17:
        return sqrt17_upper_constant(mu, nu) / ((2 * nu + 1) * (1 - beta)) * t_tilde(mu + 1, nu + 1, x)
    if kind in (BoundKind.LB_BASIC, BoundKind.LB_PROP_BASIC):
        return _lower_template(mu, nu, beta, x, t_tilde(mu, nu, x), _normalized_B(mu, nu, beta, x))
    if kind in (BoundKind.LB_REFINED, BoundKind.LB_PROP_REFINED):
        return _lower_template(
            mu, nu, beta, x, t_tilde(mu, nu, x), _normalized_B(mu, nu, beta, x), refined=True
        )
    if kind in (BoundKind.LB_SQRT17, BoundKind.LB_PROP_SQRT17):
        return _lower_template(
            mu, nu, beta, x, t_tilde(mu, nu, x), _normalized_B(mu, nu, beta, x),
            upper_const=sqrt17_upper_constant(mu, nu),
        )
    if kind is BoundKind.LB_SERIES:
        return series_lower_multiplier(mu, nu, beta, x, K)
    if kind is BoundKind.STRUVE_UB_A:
        c = 2 * nu + 3 + math.sqrt(2 * (2 * nu + 3))
        return c / ((2 * nu + 1) * (1 - beta)) * struve_L(nu + 1, x).value
    if kind is BoundKind.STRUVE_UB_SQRT8:
        return struve_sqrt8_constant(nu) / ((2 * nu + 1) * (1 - beta)) * struve_L(nu + 1, x).value
    if kind is BoundKind.STRUVE_LB:
        return _lower_template(
            nu, nu, beta, x, struve_L(nu, x).value, struve_normalized_B(nu, beta, x),
            upper_const=struve_sqrt8_constant(nu),
        )
    if kind is BoundKind.PRIOR_UB_GAU1:
        return 2 * (nu + 1) / ((2 * nu + 1) * (1 - beta)) * t_tilde(mu + 1, nu + 1, x)
    if kind is BoundKind.PRIOR_UB_GAU2:
        return t_tilde(mu, nu, x) / (1 - beta)
    if kind is BoundKind.COMBINED_CNU:
        return struve_constant(nu) / ((2 * nu + 1) * (1 - beta)) * struve_L(nu, x).value
    raise ValueError(f"unhandled bound kind {kind}")


def struve_normalized_B(nu, beta, x):
    """gamma(2nu+1, beta x) / (sqrt(pi) 2**nu beta**(2nu+1) Gamma(nu+3/2)), times exp(beta x) x**-nu."""
    return x ** (nu + 1) * scaled_lower_gamma(2 * nu + 1, beta * x) * reciprocal_gamma(nu + 1.5) / (
        math.sqrt(math.pi) * 2.0**nu
    )


def evaluate_bound(kind, spec, xstar=None, K=None):
    """Evaluate one bound at ``spec``.

    ``xstar`` applies to the two lemma bounds (defaults: x itself for the
    small-x form, 2/(1-beta) for the large-x form); ``K`` is the truncation of
    the series lower bound (default 4; ``None`` there means the default, pass
    ``K=-1`` for the untruncated sum).
    """
    if isinstance(kind, str):
        kind = BoundKind.parse(kind)
    if xstar is None:
        xstar = default_xstar(kind, spec.beta, spec.x)
    if kind is BoundKind.LB_SERIES:
        K = DEFAULT_K if K is None else (None if K == -1 else K)
    if not in_domain(kind, spec, xstar):
        return BoundResult(kind, math.nan, False, kind.side)
    m = _multiplier(kind, spec, xstar, K)
    raw = math.exp(-spec.beta * spec.x) * spec.x**spec.nu * m
    return BoundResult(kind, raw, True, kind.side, m)


def evaluate_all(spec, xstar=None, K=None):
    return [evaluate_bound(kind, spec, xstar=xstar, K=K) for kind in BoundKind]


def best_upper(spec, **opts):
    """Smallest in-domain upper bound on I itself; ties go to the earlier kind."""
    return _best(spec, Side.UPPER, min, **opts)


def best_lower(spec, **opts):
    """Largest in-domain lower bound on I itself; ties go to the earlier kind."""
    return _best(spec, Side.LOWER, max, **opts)


def _best(spec, side, pick, **opts):
    found = [
        r for r in (evaluate_bound(k, spec, **opts) for k in BoundKind if k.side is side and not k.shifted)
        if r.in_domain
    ]
    if not found:
        return None
    best_value = pick(r.value for r in found)
    return next(r for r in found if r.value == best_value)


def two_sided_envelope(spec, K=DEFAULT_K):
    """(lower, upper) multipliers that sandwich exp(beta x) x**-nu I.

    lower = sum_{k<=K} beta**k t~(mu+k+1, nu+k+1, x), upper = t~(mu, nu, x)/(1-beta).
    """
    mu, nu, beta, x = spec.mu, spec.nu, spec.beta, spec.x
    if not (_prior_region(mu, nu) and 0 < beta < 1):
        raise ValueError(f"envelope needs mu > -1/2, 1/2 <= nu < mu + 1, 0 < beta < 1; got {spec}")
    return series_lower_multiplier(mu, nu, beta, x, K), t_tilde(mu, nu, x) / (1 - beta)
