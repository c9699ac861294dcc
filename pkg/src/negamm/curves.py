"""Invariant curves for negative-price-capable market makers.

Four families are implemented:

* ``cpmm``     constant product x*y = L^2 (positive prices only, the
  classic two-sided pool; also exposes its negative-liquidity branch
  x = -L/sqrt(p) for illustration).
* ``ccmm``     circular invariant (x-k)^2 + (y-k)^2 = k^2, tangent to both
  axes.  Its lower arc prices every real number: the marginal price runs
  from +inf at x=0 through 0 at x=k to -inf at x=2k.
* ``csemm``    super-elliptical invariant |x/alpha-1|^u(alpha) +
  |y/beta-1|^u(beta) = 1 with u(c) = ln2 / ln(c/(c-1)).  The exponent map
  pins (1,1) onto every member of the family, recovers the circle at
  alpha = beta = 2+sqrt(2) and degenerates to the diamond x+y=2 as
  alpha = beta -> 2.
* ``parabola`` y = (1-sqrt(x))^m with even m >= 2; prices fold through
  zero at x = 1 and approach -1 asymptotically as x grows.

All curve functions are pure and operate on immutable values, so they are
safe to call concurrently.  Marginal prices are quoted as p = -dy/dx, i.e.
the price of token X in units of token Y.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .errors import ConvergenceError, DomainError, ParameterError

_TWO_PI = 2.0 * math.pi
_THREE_HALF_PI = 1.5 * math.pi

# Residual tolerance factor for deciding whether a state sits on its curve.
_RESIDUAL_TOL = 1e-9


class Family(str, Enum):
    """Supported invariant families."""

    CPMM = "cpmm"
    CCMM = "ccmm"
    CSEMM = "csemm"
    PARABOLA = "parabola"


@dataclass(frozen=True)
class CurveSpec:
    """Immutable description of one pool's invariant.

    Only the fields relevant to ``family`` are set; the rest stay None.
    Use the classmethod constructors rather than filling fields by hand.
    """

    family: Family
    k: float | None = None
    alpha: float | None = None
    beta: float | None = None
    m: int | None = None
    L: float | None = None

    def __post_init__(self):
        fam = Family(self.family)
        object.__setattr__(self, "family", fam)
        if fam is Family.CCMM:
            if self.k is None or not math.isfinite(self.k) or self.k <= 0:
                raise ParameterError(f"ccmm requires k > 0, got k={self.k}")
        elif fam is Family.CSEMM:
            for name, val in (("alpha", self.alpha), ("beta", self.beta)):
                if val is None or not math.isfinite(val) or val < 2.0:
                    raise ParameterError(
                        f"csemm requires {name} >= 2, got {name}={val}"
                    )
        elif fam is Family.PARABOLA:
            if (
                self.m is None
                or not isinstance(self.m, int)
                or self.m < 2
                or self.m % 2 != 0
            ):
                raise ParameterError(
                    f"parabola requires even integer m >= 2, got m={self.m}"
                )
        elif fam is Family.CPMM:
            if self.L is None or not math.isfinite(self.L) or self.L <= 0:
                raise ParameterError(f"cpmm requires L > 0, got L={self.L}")

    @classmethod
    def ccmm(cls, k: float) -> "CurveSpec":
        return cls(family=Family.CCMM, k=float(k))

    @classmethod
    def csemm(cls, alpha: float, beta: float) -> "CurveSpec":
        return cls(family=Family.CSEMM, alpha=float(alpha), beta=float(beta))

    @classmethod
    def parabola(cls, m: int = 2) -> "CurveSpec":
        return cls(family=Family.PARABOLA, m=int(m))

    @classmethod
    def cpmm(cls, L: float) -> "CurveSpec":
        return cls(family=Family.CPMM, L=float(L))


@dataclass(frozen=True)
class PoolState:
    """Reserves of one pool.  ``theta`` is the arc angle, ccmm only.

    On the ccmm trading arc theta runs through [pi, 2*pi]:
    x = k*(1+cos(theta)), y = k*(1+sin(theta)), price p = cot(theta).
    """

    x: float
    y: float
    theta: float | None = None


def csemm_exponent(c: float) -> float:
    """Exponent u(c) = ln2 / ln(c/(c-1)) of the super-elliptical family.

    u(2) = 1 (diamond), u(2+sqrt(2)) = 2 (circle), and u grows without
    bound as c -> inf.  Requires c >= 2.
    """
    if not math.isfinite(c) or c < 2.0:
        raise ParameterError(f"exponent map requires c >= 2, got c={c}")
    return math.log(2.0) / math.log(c / (c - 1.0))


def _log_abs_dev(z: float, c: float) -> float:
    """ln|z/c - 1| computed without cancellation near z=0 and z=2c."""
    if z < c:
        return math.log1p(-z / c)
    return math.log1p((z - 2.0 * c) / c)


def _csemm_inner(z: float, c: float, u: float) -> float:
    """1 - |z/c - 1|**u for z in [0, 2c], accurate at both endpoints."""
    if z == c:
        return 1.0
    if z <= 0.0 or z >= 2.0 * c:
        return 0.0
    return -math.expm1(u * _log_abs_dev(z, c))


def ccmm_y_from_x(x: float, k: float, branch: str = "lower") -> float:
    """Solve the circle (x-k)^2 + (y-k)^2 = k^2 for y.

    The lower branch y = k - sqrt(x*(2k-x)) is the trading arc; the upper
    branch is exposed for plotting only.  Domain: x in [0, 2k].
    """
    if not math.isfinite(k) or k <= 0.0:
        raise ParameterError(f"ccmm requires k > 0, got k={k}")
    if not math.isfinite(x) or x < 0.0 or x > 2.0 * k:
        raise DomainError(f"ccmm x must lie in [0, {2.0 * k}], got x={x}")
    root = math.sqrt(x * (2.0 * k - x))
    if branch == "lower":
        return k - root
    if branch == "upper":
        return k + root
    raise ParameterError(f"branch must be 'lower' or 'upper', got {branch!r}")


def csemm_y_from_x(x: float, alpha: float, beta: float, branch: str = "lower") -> float:
    """Solve |x/alpha-1|^u(alpha) + |y/beta-1|^u(beta) = 1 for y.

    Lower branch: y = beta * (1 - (1 - |x/alpha-1|^u(alpha))^(1/u(beta))),
    spanning y in [0, beta] for x in [0, 2*alpha].  Powers are evaluated in
    log space so the endpoints x=0, x=alpha and x=2*alpha come out exact.
    """
    u_a = csemm_exponent(alpha)
    u_b = csemm_exponent(beta)
    if not math.isfinite(x) or x < 0.0 or x > 2.0 * alpha:
        raise DomainError(f"csemm x must lie in [0, {2.0 * alpha}], got x={x}")
    inner = _csemm_inner(x, alpha, u_a)
    if branch == "lower":
        if inner == 0.0:
            return float(beta)
        if inner == 1.0:
            return 0.0
        return -beta * math.expm1(math.log(inner) / u_b)
    if branch == "upper":
        if inner == 0.0:
            return float(beta)
        return beta * (1.0 + math.exp(math.log(inner) / u_b))
    raise ParameterError(f"branch must be 'lower' or 'upper', got {branch!r}")


def parabola_y_from_x(x: float, m: int = 2) -> float:
    """y = (1 - sqrt(x))^m for x >= 0 and even m >= 2."""
    CurveSpec.parabola(m)  # parameter validation
    if not math.isfinite(x) or x < 0.0:
        raise DomainError(f"parabola requires x >= 0, got x={x}")
    return (1.0 - math.sqrt(x)) ** m


def cpmm_y_from_x(x: float, L: float) -> float:
    """y = L^2 / x on the positive branch of x*y = L^2."""
    if not math.isfinite(x) or x <= 0.0:
        raise DomainError(f"cpmm requires x > 0, got x={x}")
    return L * L / x


def cpmm_x_from_price(p: float, L: float, sign: str = "+") -> float:
    """Reserve from price on x*y = L^2: x = +/- L / sqrt(p).

    The '-' branch is the negative-liquidity mirror (both reserves
    negative at the same positive price); it exists to show that the
    constant-product family owns such a branch even though no pool state
    can reach it.  Prices must be strictly positive either way.
    """
    if sign not in ("+", "-"):
        raise ParameterError(f"sign must be '+' or '-', got {sign!r}")
    if not math.isfinite(p) or p <= 0.0:
        raise DomainError(f"cpmm price must be > 0, got p={p}")
    mag = L / math.sqrt(p)
    return mag if sign == "+" else -mag


def invariant_residual(spec: CurveSpec, x: float, y: float) -> float:
    """Signed residual of (x, y) against the curve equation.

    Zero means exactly on-curve.  Scales: the residual is in natural curve
    units, compare against residual_scale(spec) when testing closeness.
    """
    fam = spec.family
    if fam is Family.CCMM:
        k = spec.k
        return (x - k) ** 2 + (y - k) ** 2 - k * k
    if fam is Family.CSEMM:
        a, b = spec.alpha, spec.beta
        term_x = 1.0 - _csemm_inner(x, a, csemm_exponent(a))
        term_y = 1.0 - _csemm_inner(y, b, csemm_exponent(b))
        return term_x + term_y - 1.0
    if fam is Family.PARABOLA:
        return y - (1.0 - math.sqrt(max(x, 0.0))) ** spec.m
    if fam is Family.CPMM:
        return x * y - spec.L * spec.L
    raise ParameterError(f"unknown family {fam!r}")


def residual_scale(spec: CurveSpec) -> float:
    """Natural size of the invariant, used to normalise residuals."""
    if spec.family is Family.CCMM:
        return spec.k
    if spec.family is Family.CPMM:
        return spec.L * spec.L
    return 1.0


def fold_x(spec: CurveSpec) -> float | None:
    """x-coordinate where the marginal price crosses zero (None for cpmm)."""
    if spec.family is Family.CCMM:
        return spec.k
    if spec.family is Family.CSEMM:
        return spec.alpha
    if spec.family is Family.PARABOLA:
        return 1.0
    return None


def y_from_x(spec: CurveSpec, x: float, branch: str = "lower") -> float:
    """Trading-branch y for a given x, any family.

    ``branch='upper'`` is accepted for ccmm and csemm only, and is meant
    for plotting the closed curve, not for trading.
    """
    fam = spec.family
    if fam is Family.CCMM:
        return ccmm_y_from_x(x, spec.k, branch)
    if fam is Family.CSEMM:
        return csemm_y_from_x(x, spec.alpha, spec.beta, branch)
    if branch != "lower":
        raise ParameterError(f"{fam.value} has a single branch")
    if fam is Family.PARABOLA:
        return parabola_y_from_x(x, spec.m)
    return cpmm_y_from_x(x, spec.L)


def x_from_y_on_side(spec: CurveSpec, y: float, side: str = "left") -> float:
    """Invert the trading branch in the y direction.

    For ccmm, csemm and the parabola the trading branch is two-valued in
    y (the price folds through zero), so the caller states which side of
    the fold it is on: 'left' is the positive-price side (x below the
    fold), 'right' the negative-price side.  cpmm ignores ``side``.
    """
    if side not in ("left", "right"):
        raise ParameterError(f"side must be 'left' or 'right', got {side!r}")
    fam = spec.family
    if fam is Family.CPMM:
        if not math.isfinite(y) or y <= 0.0:
            raise DomainError(f"cpmm requires y > 0, got y={y}")
        return spec.L * spec.L / y
    if fam is Family.CCMM:
        k = spec.k
        if not math.isfinite(y) or y < 0.0 or y > k:
            raise DomainError(f"ccmm trading arc has y in [0, {k}], got y={y}")
        root = math.sqrt(y * (2.0 * k - y))
        return k - root if side == "left" else k + root
    if fam is Family.CSEMM:
        a, b = spec.alpha, spec.beta
        if not math.isfinite(y) or y < 0.0 or y > b:
            raise DomainError(f"csemm trading branch has y in [0, {b}], got y={y}")
        inner = _csemm_inner(y, b, csemm_exponent(b))
        if inner == 0.0:
            return float(a)
        u_a = csemm_exponent(a)
        if side == "left":
            return -a * math.expm1(math.log(inner) / u_a)
        return a * (2.0 + math.expm1(math.log(inner) / u_a))
    # parabola
    if not math.isfinite(y) or y < 0.0:
        raise DomainError(f"parabola requires y >= 0, got y={y}")
    root = y ** (1.0 / spec.m)
    if side == "left":
        if root > 1.0:
            raise DomainError(
                f"parabola positive-price side has y in [0, 1], got y={y}"
            )
        return (1.0 - root) ** 2
    return (1.0 + root) ** 2


def _price_from_x(spec: CurveSpec, x: float) -> float:
    """Marginal price p = -dy/dx at reserve x on the trading branch.

    Returns +inf / -inf at the branch endpoints where the tangent turns
    vertical.  Exactly zero at the fold.
    """
    fam = spec.family
    if fam is Family.CPMM:
        if x <= 0.0:
            raise DomainError(f"cpmm requires x > 0, got x={x}")
        # p = y/x = L^2 / x^2
        return (spec.L / x) * (spec.L / x)
    if fam is Family.CCMM:
        k = spec.k
        if x < 0.0 or x > 2.0 * k:
            raise DomainError(f"ccmm x must lie in [0, {2.0 * k}], got x={x}")
        if x == 0.0:
            return math.inf
        if x == 2.0 * k:
            return -math.inf
        return (k - x) / math.sqrt(x * (2.0 * k - x))
    if fam is Family.PARABOLA:
        if x < 0.0:
            raise DomainError(f"parabola requires x >= 0, got x={x}")
        if x == 0.0:
            return math.inf
        root = math.sqrt(x)
        return spec.m * (1.0 - root) ** (spec.m - 1) / (2.0 * root)
    # csemm
    a, b = spec.alpha, spec.beta
    if x < 0.0 or x > 2.0 * a:
        raise DomainError(f"csemm x must lie in [0, {2.0 * a}], got x={x}")
    if x == 0.0:
        return math.inf
    if x == 2.0 * a:
        return -math.inf
    u_a = csemm_exponent(a)
    u_b = csemm_exponent(b)
    if x == a:
        return 0.0
    lgx = _log_abs_dev(x, a)
    sgn_x = -1.0 if x < a else 1.0
    inner = -math.expm1(u_a * lgx)  # 1 - |x/a-1|^u_a, in (0, 1)
    lg_abs_y_dev = math.log(inner) / u_b  # ln|y/b - 1| on the lower branch
    num = u_a * b * math.exp((u_a - 1.0) * lgx) * sgn_x
    den = u_b * a * math.exp((u_b - 1.0) * lg_abs_y_dev) * (-1.0)
    return num / den


def price_of(spec: CurveSpec, state: PoolState) -> float:
    """Marginal price of token X in Y units at the given on-curve state.

    Positive left of the fold, exactly zero at it, negative beyond it;
    +/-inf at the arc endpoints.  Raises DomainError when the state's
    residual exceeds 1e-9 times the curve scale.
    """
    res = invariant_residual(spec, state.x, state.y)
    if abs(res) > _RESIDUAL_TOL * residual_scale(spec):
        raise DomainError(
            f"state ({state.x}, {state.y}) is off-curve: residual {res:.3e}"
        )
    if spec.family is Family.CPMM:
        return state.y / state.x
    return _price_from_x(spec, state.x)


def ccmm_angle_from_price(p: float) -> float:
    """Invert p = cot(theta) on the trading arc theta in [pi, 2*pi].

    theta = 3*pi/2 - atan(p); monotone decreasing in p, with p=+inf at
    theta=pi and p=-inf at theta=2*pi.
    """
    if math.isnan(p):
        raise ParameterError("price must not be NaN")
    return _THREE_HALF_PI - math.atan(p)


def csemm_x_from_price(
    p: float,
    alpha: float,
    beta: float,
    tol: float = 1e-12,
    max_iter: int = 200,
) -> float:
    """Invert the super-elliptical price curve by bisection.

    The marginal price is strictly decreasing in x across (0, 2*alpha), so
    bisection on x is guaranteed to converge; Newton steps are avoided on
    purpose because dp/dx is unbounded near the fold when u(alpha) < 2.
    Stops once the bracket is below ``tol`` and the quoted price is within
    1e-10 * max(1, |p|) of the target, running the bracket down to float
    resolution if needed.
    """
    u_check = csemm_exponent(alpha), csemm_exponent(beta)  # validates params
    del u_check
    if not math.isfinite(p):
        raise ParameterError(f"target price must be finite, got p={p}")
    if p == 0.0:
        return float(alpha)
    spec = CurveSpec.csemm(alpha, beta)
    lo, hi = 0.0, 2.0 * alpha  # price(lo) = +inf, price(hi) = -inf
    price_tol = 1e-10 * max(1.0, abs(p))
    x = 0.5 * (lo + hi)
    for _ in range(max_iter):
        px = _price_from_x(spec, x)
        if abs(px - p) <= price_tol and hi - lo <= max(tol, 4.0 * math.ulp(x)):
            return x
        if px > p:
            lo = x
        else:
            hi = x
        nxt = 0.5 * (lo + hi)
        if nxt == lo or nxt == hi:
            # Bracket exhausted at float resolution.
            if abs(_price_from_x(spec, nxt) - p) <= price_tol:
                return nxt
            break
        x = nxt
    raise ConvergenceError(
        f"csemm price inversion did not converge for p={p}, "
        f"alpha={alpha}, beta={beta}"
    )


def parabola_x_from_price(p: float, m: int = 2) -> float:
    """Invert p = (1-sqrt(x))/sqrt(x) for the m=2 parabola: x = (1+p)^-2.

    The price domain is p > -1; the curve flattens toward p = -1 as
    x -> inf.  Only m=2 admits this closed inversion; other m values are
    plot-only.
    """
    CurveSpec.parabola(m)
    if m != 2:
        raise ParameterError(
            f"price inversion is only available for m=2, got m={m}"
        )
    if not math.isfinite(p) or p <= -1.0:
        raise DomainError(f"parabola prices lie in (-1, inf), got p={p}")
    return 1.0 / ((1.0 + p) * (1.0 + p))


def state_from_x(spec: CurveSpec, x: float) -> PoolState:
    """Build the on-curve trading-branch state at reserve x."""
    y = y_from_x(spec, x)
    theta = None
    if spec.family is Family.CCMM:
        ang = math.atan2(y - spec.k, x - spec.k)  # in [-pi, 0] on the arc
        theta = ang + _TWO_PI
    return PoolState(x=float(x), y=y, theta=theta)


def state_from_price(spec: CurveSpec, p: float) -> PoolState:
    """Build the trading-branch state quoting marginal price p.

    ccmm/csemm accept any finite p; cpmm needs p > 0; the parabola (m=2)
    needs p > -1.
    """
    fam = spec.family
    if fam is Family.CCMM:
        theta = ccmm_angle_from_price(p)
        k = spec.k
        return PoolState(
            x=k * (1.0 + math.cos(theta)),
            y=k * (1.0 + math.sin(theta)),
            theta=theta,
        )
    if fam is Family.CSEMM:
        x = csemm_x_from_price(p, spec.alpha, spec.beta)
        return state_from_x(spec, x)
    if fam is Family.CPMM:
        x = cpmm_x_from_price(p, spec.L, "+")
        return PoolState(x=x, y=spec.L * math.sqrt(p))
    x = parabola_x_from_price(p, spec.m)
    return state_from_x(spec, x)
