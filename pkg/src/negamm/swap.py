"""Exact-input swap engine over the invariant curves.

Sign conventions:

* ``amount_in``  is what the trader sends; positive amounts add that token
  to the pool.  The fee is charged on the way in, so the pool's post-trade
  reserve is ``reserve + (1 - fee) * amount_in``.
* ``amount_out`` is the change in the counter reserve, old minus new.  It
  can be negative: once the marginal price has crossed into the negative
  region, buying more X requires the trader to hand over both tokens, and
  the "output" is a deposit.

Trades that would step off the trading branch are rejected with
DomainExceeded rather than clamped, so the pool never quotes beyond its
price asymptotes.  All functions are pure; states are never mutated.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import curves
from .curves import CurveSpec, Family, PoolState
from .errors import DomainExceeded, InvalidFee, ParameterError

TOKEN_X = "x"
TOKEN_Y = "y"


@dataclass(frozen=True)
class SwapRequest:
    """One exact-input trade: which token goes in, how much, at what fee."""

    token_in: str
    amount_in: float
    fee: float = 0.0


@dataclass(frozen=True)
class SwapResult:
    amount_out: float
    price_before: float
    price_after: float
    residual_after: float


def _validate_request(req: SwapRequest) -> None:
    if req.token_in not in (TOKEN_X, TOKEN_Y):
        raise ParameterError(f"token_in must be 'x' or 'y', got {req.token_in!r}")
    if not math.isfinite(req.amount_in) or req.amount_in == 0.0:
        raise ParameterError(f"amount_in must be finite and nonzero, got {req.amount_in}")
    if not math.isfinite(req.fee) or req.fee < 0.0 or req.fee >= 1.0:
        raise InvalidFee(f"fee must lie in [0, 1), got {req.fee}")


def _side_of_fold(spec: CurveSpec, state: PoolState) -> str:
    """Which side of the zero-price fold the state is on.

    States exactly at the fold count as 'left' (the positive-price side),
    so a y-input trade from the fold moves toward positive prices.
    """
    fx = curves.fold_x(spec)
    if fx is None:
        return "left"
    return "left" if state.x <= fx else "right"


def _check_x_domain(spec: CurveSpec, x_new: float) -> None:
    fam = spec.family
    if fam is Family.CCMM:
        hi = 2.0 * spec.k
        if x_new < 0.0 or x_new > hi:
            raise DomainExceeded(
                f"trade would move x to {x_new}, outside the arc [0, {hi}]"
            )
    elif fam is Family.CSEMM:
        hi = 2.0 * spec.alpha
        if x_new < 0.0 or x_new > hi:
            raise DomainExceeded(
                f"trade would move x to {x_new}, outside the branch [0, {hi}]"
            )
    elif fam is Family.PARABOLA:
        if x_new < 0.0:
            raise DomainExceeded(f"trade would move x to {x_new}, below 0")
    else:  # cpmm
        if x_new <= 0.0:
            raise DomainExceeded(f"trade would drain the cpmm x reserve (x={x_new})")


def _check_y_domain(spec: CurveSpec, y_new: float, side: str) -> None:
    fam = spec.family
    if fam is Family.CCMM:
        if y_new < 0.0 or y_new > spec.k:
            raise DomainExceeded(
                f"trade would move y to {y_new}, outside the arc [0, {spec.k}]"
            )
    elif fam is Family.CSEMM:
        if y_new < 0.0 or y_new > spec.beta:
            raise DomainExceeded(
                f"trade would move y to {y_new}, outside the branch [0, {spec.beta}]"
            )
    elif fam is Family.PARABOLA:
        if y_new < 0.0 or (side == "left" and y_new > 1.0):
            raise DomainExceeded(
                f"trade would move y to {y_new}, off the current side of the fold"
            )
    else:  # cpmm
        if y_new <= 0.0:
            raise DomainExceeded(f"trade would drain the cpmm y reserve (y={y_new})")


def _traverse(spec: CurveSpec, state: PoolState, req: SwapRequest) -> PoolState:
    """Post-trade state for an exact-input trade; pure."""
    effective = (1.0 - req.fee) * req.amount_in
    if req.token_in == TOKEN_X:
        x_new = state.x + effective
        _check_x_domain(spec, x_new)
        return curves.state_from_x(spec, x_new)
    y_new = state.y + effective
    side = _side_of_fold(spec, state)
    _check_y_domain(spec, y_new, side)
    x_new = curves.x_from_y_on_side(spec, y_new, side)
    new_state = curves.state_from_x(spec, x_new)
    # Re-anchor y to the exact requested reserve; x solved for it.
    return PoolState(x=new_state.x, y=y_new, theta=new_state.theta)


def quote_exact_in(spec: CurveSpec, state: PoolState, req: SwapRequest) -> SwapResult:
    """Quote an exact-input swap without executing it."""
    _validate_request(req)
    price_before = curves.price_of(spec, state)
    new_state = _traverse(spec, state, req)
    price_after = curves.price_of(spec, new_state)
    if req.token_in == TOKEN_X:
        amount_out = state.y - new_state.y
    else:
        amount_out = state.x - new_state.x
    residual = curves.invariant_residual(spec, new_state.x, new_state.y)
    return SwapResult(
        amount_out=amount_out,
        price_before=price_before,
        price_after=price_after,
        residual_after=residual,
    )


def execute_swap(
    spec: CurveSpec, state: PoolState, req: SwapRequest
) -> tuple[PoolState, SwapResult]:
    """Quote and apply an exact-input swap, returning (new_state, result)."""
    result = quote_exact_in(spec, state, req)
    new_state = _traverse(spec, state, req)
    return new_state, result


def price_impact(
    spec: CurveSpec, state: PoolState, req: SwapRequest
) -> tuple[float, float]:
    """(price_before, price_after) for a prospective trade."""
    result = quote_exact_in(spec, state, req)
    return result.price_before, result.price_after
