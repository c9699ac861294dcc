"""Liquidity fingerprints: how a curve spreads depth across price space.

The fingerprint of a curve is the derivative of its numeraire reserve
with respect to the square-root price coordinate,

    L(s) = d y / d s,   s = sqrt(p),

the same quantity concentrated-liquidity pools are parameterised by.  In
tick space the fingerprint is read at t = ln(p), i.e. L(e^{t/2}).

Negative price region: prices are mirrored onto the coordinate magnitude
s = sqrt(|p|) (tick t = ln|p|), and the density carries a minus sign; it
is the derivative taken along the signed axis -s, which is what makes the
region read as negative liquidity.  Samples are tagged with their domain
so plots can keep the two regions apart.

Closed forms are provided for the circular and parabolic (m=2) curves;
``numeric_fingerprint`` differentiates any family's reserve function
directly and acts as the reference oracle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from . import curves
from .curves import CurveSpec, Family
from .errors import DomainError, InsufficientDataError, ParameterError

POSITIVE = "positive_price"
NEGATIVE = "negative_price"

SQRTPRICE = "sqrtprice"
TICK = "tick"


@dataclass(frozen=True)
class FingerprintSample:
    """One point of a liquidity fingerprint.

    ``coord`` is sqrt(|p|) in sqrtprice space or ln|p| in tick space;
    ``domain_sign`` records which half of the price line it came from.
    """

    coord: float
    density: float
    domain_sign: str = POSITIVE


def _check_sign(sign: str) -> float:
    if sign == "+":
        return 1.0
    if sign == "-":
        return -1.0
    raise ParameterError(f"sign must be '+' or '-', got {sign!r}")


def ccmm_liquidity_sqrtprice(s: float, k: float, sign: str = "+") -> float:
    """Circular-curve fingerprint L(s) = +/- 2k s^3 / (1+s^4)^(3/2).

    The '+' branch is the positive-price domain, '-' the mirrored negative
    domain.  Peaks at s=1 (price 1) with value k/sqrt(2); both tails decay
    like a Pareto density with tail index 3.
    """
    sgn = _check_sign(sign)
    if not math.isfinite(k) or k <= 0.0:
        raise ParameterError(f"ccmm requires k > 0, got k={k}")
    if not math.isfinite(s) or s <= 0.0:
        raise DomainError(f"sqrt-price coordinate must be > 0, got s={s}")
    s2 = s * s
    s4 = s2 * s2
    if not math.isfinite(s4):
        return sgn * 0.0
    denom = (1.0 + s4) * math.sqrt(1.0 + s4)
    return sgn * 2.0 * k * s2 * s / denom


def ccmm_liquidity_tick(t: float, k: float, sign: str = "+") -> float:
    """Circular fingerprint in tick space: L(t) = +/- 2k e^{3t/2} / (1+e^{2t})^(3/2).

    Identical to the sqrt-price form read at s = e^{t/2}.
    """
    sgn = _check_sign(sign)
    if not math.isfinite(k) or k <= 0.0:
        raise ParameterError(f"ccmm requires k > 0, got k={k}")
    if not math.isfinite(t):
        raise DomainError(f"tick must be finite, got t={t}")
    try:
        s = math.exp(0.5 * t)
    except OverflowError:
        return sgn * 0.0
    if s == 0.0:
        return sgn * 0.0
    return ccmm_liquidity_sqrtprice(s, k, sign)


def parabola_liquidity_sqrtprice(s: float, domain: str = POSITIVE) -> float:
    """Fingerprint of the m=2 parabola.

    Positive domain (s = sqrt(p) > 0):   L(s) = 4 s^3 / (1+s^2)^3.
    Negative domain (s = sqrt(-p) in (0,1)): L(s) = -4 s^3 / (1-s^2)^3,
    i.e. the derivative along the mirrored axis; it is negative and its
    magnitude diverges as the price approaches the zero bound (s -> 1
    marks p -> -1, past which the curve quotes no states).
    """
    if not math.isfinite(s) or s <= 0.0:
        raise DomainError(f"sqrt-price coordinate must be > 0, got s={s}")
    s2 = s * s
    if domain == POSITIVE:
        if not math.isfinite(s2 * s2):
            return 0.0
        return 4.0 * s2 * s / (1.0 + s2) ** 3
    if domain == NEGATIVE:
        if s >= 1.0:
            raise DomainError(
                f"parabola negative-domain coordinate must satisfy 0 < s < 1, got s={s}"
            )
        return -4.0 * s2 * s / (1.0 - s2) ** 3
    raise ParameterError(f"domain must be {POSITIVE!r} or {NEGATIVE!r}, got {domain!r}")


def parabola_liquidity_tick(t: float, domain: str = POSITIVE) -> float:
    """m=2 parabola fingerprint in tick space, t = ln|p|.

    Positive domain: 4 e^{3t/2} / (1+e^t)^3 for any finite t.  Negative
    domain: defined for t < 0 only and negative there, blowing up as
    t -> 0- where the pool's negative liquidity concentrates.
    """
    if domain not in (POSITIVE, NEGATIVE):
        raise ParameterError(
            f"domain must be {POSITIVE!r} or {NEGATIVE!r}, got {domain!r}"
        )
    if not math.isfinite(t):
        raise DomainError(f"tick must be finite, got t={t}")
    if domain == NEGATIVE and t >= 0.0:
        raise DomainError(
            f"parabola negative-domain tick must satisfy t < 0, got t={t}"
        )
    try:
        s = math.exp(0.5 * t)
    except OverflowError:
        return 0.0
    if s == 0.0:
        return -0.0 if domain == NEGATIVE else 0.0
    return parabola_liquidity_sqrtprice(s, domain)


def cpmm_liquidity(L: float, sign: str = "+") -> float:
    """Constant-product fingerprint: uniform depth +/- L at every coordinate."""
    sgn = _check_sign(sign)
    if not math.isfinite(L) or L <= 0.0:
        raise ParameterError(f"cpmm requires L > 0, got L={L}")
    return sgn * L


def gaussian_fingerprint(t: float, mu: float, sigma: float, mass: float) -> float:
    """Gaussian comparator in tick space: mass * N(t; mu, sigma^2)."""
    if not math.isfinite(sigma) or sigma <= 0.0:
        raise ParameterError(f"sigma must be > 0, got sigma={sigma}")
    if not math.isfinite(mass) or mass <= 0.0:
        raise ParameterError(f"mass must be > 0, got mass={mass}")
    z = (t - mu) / sigma
    return mass * math.exp(-0.5 * z * z) / (sigma * math.sqrt(2.0 * math.pi))


def numeraire_reserve(spec: CurveSpec, s: float, domain: str = POSITIVE) -> float:
    """Numeraire (token Y) reserve at sqrt-price magnitude s.

    The price is s^2 in the positive domain and -s^2 in the negative one.
    This is the function whose s-derivative is the fingerprint.
    """
    if not math.isfinite(s) or s <= 0.0:
        raise DomainError(f"sqrt-price coordinate must be > 0, got s={s}")
    if domain == POSITIVE:
        p = s * s
    elif domain == NEGATIVE:
        p = -(s * s)
    else:
        raise ParameterError(
            f"domain must be {POSITIVE!r} or {NEGATIVE!r}, got {domain!r}"
        )
    return curves.state_from_price(spec, p).y


def central_difference(f: Callable[[float], float], x: float, step: float) -> float:
    """Symmetric two-point derivative estimate (f(x+h) - f(x-h)) / 2h."""
    if step <= 0.0:
        raise ParameterError(f"step must be > 0, got {step}")
    return (f(x + step) - f(x - step)) / (2.0 * step)


def numeric_fingerprint(
    spec: CurveSpec,
    coord_grid: Sequence[float],
    space: str = SQRTPRICE,
    domain: str = POSITIVE,
) -> list[FingerprintSample]:
    """Reference fingerprint from numerical differentiation of the reserve.

    For each grid coordinate the reserve y(s) is evaluated through the
    curve's own inversion machinery and differentiated centrally with
    step h = 1e-5 * max(1, |s|).  Tick coordinates are read through
    s = e^{t/2}.  Negative-domain densities are negated, matching the
    signed-axis convention of the closed forms.
    """
    if space not in (SQRTPRICE, TICK):
        raise ParameterError(f"space must be {SQRTPRICE!r} or {TICK!r}, got {space!r}")
    if spec.family is Family.PARABOLA and spec.m != 2:
        raise ParameterError("fingerprints are defined for the m=2 parabola only")
    samples = []
    for coord in coord_grid:
        c = float(coord)
        if space == TICK:
            if not math.isfinite(c):
                raise DomainError(f"tick must be finite, got t={c}")
            s = math.exp(0.5 * c)
        else:
            s = c
        if not math.isfinite(s) or s <= 0.0:
            raise DomainError(f"sqrt-price coordinate must be > 0, got s={s}")
        h = 1e-5 * max(1.0, abs(s))
        if h >= s:
            h = 0.5 * s
        d = central_difference(lambda ss: numeraire_reserve(spec, ss, domain), s, h)
        if domain == NEGATIVE:
            d = -d
        samples.append(FingerprintSample(coord=c, density=d, domain_sign=domain))
    return samples


def tail_index(samples: Sequence[FingerprintSample]) -> float:
    """Power-law tail index from a log-log fit of density against coordinate.

    Fits ln(density) = a + b * ln(coord) by least squares over the samples
    with positive coordinate and positive density, and returns -b.  At
    least 10 usable samples are required.
    """
    coords = []
    dens = []
    for smp in samples:
        if (
            smp.coord > 0.0
            and smp.density > 0.0
            and math.isfinite(smp.coord)
            and math.isfinite(smp.density)
        ):
            coords.append(smp.coord)
            dens.append(smp.density)
    if len(coords) < 10:
        raise InsufficientDataError(
            f"tail fit needs at least 10 positive samples, got {len(coords)}"
        )
    slope = np.polyfit(np.log(coords), np.log(dens), 1)[0]
    return -float(slope)


def circle_angle_of_price(p: float) -> float:
    """Wrap the extended price line onto the circle: angle = 2*atan(p).

    Monotone in p, with 0 at p=0 and the two infinities meeting at +/-pi
    (the top of the circle).  Accepts +/-inf.
    """
    if math.isnan(p):
        raise ParameterError("price must not be NaN")
    return 2.0 * math.atan(p)


def circle_map(t: float, domain: str = POSITIVE) -> float:
    """Circle angle for the price with tick t = ln|p| in the given domain."""
    if math.isnan(t):
        raise ParameterError("tick must not be NaN")
    try:
        mag = math.exp(t)
    except OverflowError:
        mag = math.inf
    if domain == POSITIVE:
        return circle_angle_of_price(mag)
    if domain == NEGATIVE:
        return circle_angle_of_price(-mag)
    raise ParameterError(f"domain must be {POSITIVE!r} or {NEGATIVE!r}, got {domain!r}")
