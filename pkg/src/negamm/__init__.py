"""negamm: invariants, swaps and analytics for negative-price AMMs."""

from .curves import (
    CurveSpec,
    Family,
    PoolState,
    ccmm_angle_from_price,
    ccmm_y_from_x,
    cpmm_x_from_price,
    cpmm_y_from_x,
    csemm_exponent,
    csemm_x_from_price,
    csemm_y_from_x,
    fold_x,
    invariant_residual,
    parabola_x_from_price,
    parabola_y_from_x,
    price_of,
    residual_scale,
    state_from_price,
    state_from_x,
    x_from_y_on_side,
    y_from_x,
)
from .errors import (
    ConvergenceError,
    DomainError,
    DomainExceeded,
    InsufficientDataError,
    InvalidFee,
    MonotonicityError,
    NegammError,
    ParameterError,
    SeriesError,
    SeriesParseError,
)
from .fingerprint import (
    NEGATIVE,
    POSITIVE,
    FingerprintSample,
    ccmm_liquidity_sqrtprice,
    ccmm_liquidity_tick,
    central_difference,
    circle_angle_of_price,
    circle_map,
    cpmm_liquidity,
    gaussian_fingerprint,
    numeraire_reserve,
    numeric_fingerprint,
    parabola_liquidity_sqrtprice,
    parabola_liquidity_tick,
    tail_index,
)
from .payoff import GreeksPoint, delta, gamma, greeks, lp_value, theta
from .series import (
    ARITHMETIC_DIFF,
    PERCENT,
    PriceSeries,
    ReturnSeries,
    YearStats,
    hill_tail_index,
    load_series,
    negative_price_stats,
    returns,
    squared_returns,
)
from .swap import (
    TOKEN_X,
    TOKEN_Y,
    SwapRequest,
    SwapResult,
    execute_swap,
    price_impact,
    quote_exact_in,
)

__version__ = "0.1.0"

__all__ = [
    "ARITHMETIC_DIFF",
    "PERCENT",
    "NEGATIVE",
    "POSITIVE",
    "TOKEN_X",
    "TOKEN_Y",
    "ConvergenceError",
    "CurveSpec",
    "DomainError",
    "DomainExceeded",
    "Family",
    "FingerprintSample",
    "GreeksPoint",
    "InsufficientDataError",
    "InvalidFee",
    "MonotonicityError",
    "NegammError",
    "ParameterError",
    "PoolState",
    "PriceSeries",
    "ReturnSeries",
    "SeriesError",
    "SeriesParseError",
    "SwapRequest",
    "SwapResult",
    "YearStats",
    "ccmm_angle_from_price",
    "ccmm_liquidity_sqrtprice",
    "ccmm_liquidity_tick",
    "ccmm_y_from_x",
    "central_difference",
    "circle_angle_of_price",
    "circle_map",
    "cpmm_liquidity",
    "cpmm_x_from_price",
    "cpmm_y_from_x",
    "csemm_exponent",
    "csemm_x_from_price",
    "csemm_y_from_x",
    "delta",
    "execute_swap",
    "fold_x",
    "gamma",
    "gaussian_fingerprint",
    "greeks",
    "hill_tail_index",
    "invariant_residual",
    "load_series",
    "lp_value",
    "negative_price_stats",
    "numeraire_reserve",
    "numeric_fingerprint",
    "parabola_liquidity_sqrtprice",
    "parabola_liquidity_tick",
    "parabola_x_from_price",
    "parabola_y_from_x",
    "price_impact",
    "price_of",
    "quote_exact_in",
    "residual_scale",
    "returns",
    "squared_returns",
    "state_from_price",
    "state_from_x",
    "tail_index",
    "theta",
    "x_from_y_on_side",
    "y_from_x",
]
