"""Curve geometry: branch evaluation, pricing, and inversion.

Expected values marked "oracle" were generated with mpmath at 50 significant
digits from the defining equations, then frozen here.
"""

import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from negamm import (
    ConvergenceError,
    CurveSpec,
    DomainError,
    Family,
    ParameterError,
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
from conftest import CIRCLE_PARAM


# ---------------------------------------------------------------- circular


def test_ccmm_tangency_points():
    # The circle (x-k)^2 + (y-k)^2 = k^2 touches both axes.
    assert ccmm_y_from_x(1.0, 1.0) == 0.0
    assert ccmm_y_from_x(0.0, 1.0) == 1.0
    assert ccmm_y_from_x(2.0, 1.0) == 1.0
    assert ccmm_y_from_x(3.0, 1.5) == 1.5


def test_ccmm_lower_branch_product_form_accuracy():
    # y = k - sqrt(x*(2k - x)) stays accurate where k - sqrt(k^2 - (x-k)^2)
    # would cancel.  Oracle: mpmath, 50 digits.
    assert ccmm_y_from_x(1e-8, 1.0) == pytest.approx(
        0.99985857864411624389, rel=1e-15
    )
    assert ccmm_y_from_x(0.9999, 1.0) == pytest.approx(
        5.0000000125000000625e-9, rel=1e-12
    )


def test_ccmm_upper_branch():
    assert ccmm_y_from_x(1.0, 1.0, branch="upper") == 2.0


def test_ccmm_arc_closure():
    # Parametric points land on the invariant to 1e-12 * k.
    k = 1.0
    for theta in np.linspace(math.pi, 2.0 * math.pi, 733):
        x = k * (1.0 + math.cos(theta))
        y = k * (1.0 + math.sin(theta))
        assert abs(invariant_residual(CurveSpec.ccmm(k), x, y)) <= 1e-12 * k


def test_ccmm_price_known_angles(ccmm_unit):
    # theta = 5pi/4 is the unit-price point; 3pi/2 the zero-price fold.
    x_unit = 1.0 + math.cos(5.0 * math.pi / 4.0)
    assert price_of(ccmm_unit, state_from_x(ccmm_unit, x_unit)) == pytest.approx(
        1.0, abs=1e-14
    )
    assert price_of(ccmm_unit, state_from_x(ccmm_unit, 1.0)) == 0.0
    x_neg = 1.0 + math.cos(7.0 * math.pi / 4.0)
    assert price_of(ccmm_unit, state_from_x(ccmm_unit, x_neg)) == pytest.approx(
        -1.0, abs=1e-14
    )


def test_ccmm_price_value(ccmm_unit):
    # oracle: 0.5/sqrt(0.75)
    st_ = state_from_x(ccmm_unit, 0.5)
    assert price_of(ccmm_unit, st_) == pytest.approx(0.57735026918962576451, rel=1e-15)


def test_ccmm_angle_from_price_roundtrip(ccmm_unit):
    assert ccmm_angle_from_price(1.0) == pytest.approx(5.0 * math.pi / 4.0, rel=1e-15)
    assert ccmm_angle_from_price(0.0) == pytest.approx(3.0 * math.pi / 2.0, rel=1e-15)
    for p in np.linspace(-25.0, 25.0, 301):
        theta = ccmm_angle_from_price(float(p))
        assert math.pi < theta < 2.0 * math.pi
        st_ = state_from_price(CurveSpec.ccmm(1.0), float(p))
        assert price_of(CurveSpec.ccmm(1.0), st_) == pytest.approx(
            float(p), rel=1e-9, abs=1e-9
        )


def test_ccmm_endpoint_prices(ccmm_unit):
    assert price_of(ccmm_unit, state_from_x(ccmm_unit, 0.0)) == math.inf
    assert price_of(ccmm_unit, state_from_x(ccmm_unit, 2.0)) == -math.inf


def test_ccmm_bad_k():
    with pytest.raises(ParameterError):
        ccmm_y_from_x(0.5, 0.0)
    with pytest.raises(ParameterError):
        ccmm_y_from_x(0.5, -2.0)
    with pytest.raises(ParameterError):
        CurveSpec.ccmm(math.nan)


def test_ccmm_x_out_of_range():
    with pytest.raises(DomainError):
        ccmm_y_from_x(2.5, 1.0)
    with pytest.raises(DomainError):
        ccmm_y_from_x(-0.1, 1.0)


# ---------------------------------------------------------- super-elliptical


def test_exponent_values():
    assert csemm_exponent(2.0) == 1.0
    assert csemm_exponent(CIRCLE_PARAM) == pytest.approx(2.0, rel=1e-15)
    # oracle: ln 2 / ln(10/9), mpmath
    assert csemm_exponent(10.0) == pytest.approx(6.5788134789605837831, rel=1e-15)
    assert csemm_exponent(100.0) > csemm_exponent(10.0)


def test_exponent_rejects_degenerate():
    with pytest.raises(ParameterError):
        csemm_exponent(1.5)


def test_csemm_normalization_point():
    # (1, 1) sits on every member of the family: each |./c - 1|^u(c) term
    # evaluates to exactly 1/2 by construction of the exponent.
    for a, b in [(2.0, 2.0), (2.5, 7.0), (CIRCLE_PARAM, CIRCLE_PARAM), (10.0, 3.0)]:
        spec = CurveSpec.csemm(a, b)
        assert abs(invariant_residual(spec, 1.0, 1.0)) <= 1e-15


def test_csemm_anchor_points():
    assert csemm_y_from_x(3.0, 3.0, 4.0) == 0.0
    assert csemm_y_from_x(0.0, 3.0, 4.0) == pytest.approx(4.0, rel=1e-15)
    assert csemm_y_from_x(6.0, 3.0, 4.0) == pytest.approx(4.0, rel=1e-15)


def test_csemm_lower_branch_oracle_values():
    # mpmath, 50 digits
    assert csemm_y_from_x(0.5, 3.0, 4.0) == pytest.approx(
        1.6849004947110590638, rel=1e-14
    )
    assert csemm_y_from_x(2.9, 3.0, 4.0) == pytest.approx(
        0.0049587404243838775685, rel=1e-13
    )
    assert csemm_y_from_x(3.2, 3.0, 4.0) == pytest.approx(
        0.016249891318762769171, rel=1e-13
    )
    assert csemm_y_from_x(9.0, 10.0, 7.0) == pytest.approx(
        4.1058642735215104526e-7, rel=1e-12
    )


def test_csemm_mirror_symmetry():
    # |x/a - 1| is even about x = a, so y and price mirror across the fold.
    spec = CurveSpec.csemm(3.0, 4.0)
    for dx in (0.3, 1.0, 2.5):
        y_l = csemm_y_from_x(3.0 - dx, 3.0, 4.0)
        y_r = csemm_y_from_x(3.0 + dx, 3.0, 4.0)
        assert y_l == pytest.approx(y_r, rel=1e-14)
        p_l = price_of(spec, state_from_x(spec, 3.0 - dx))
        p_r = price_of(spec, state_from_x(spec, 3.0 + dx))
        assert p_l == pytest.approx(-p_r, rel=1e-13)


def test_csemm_price_oracle_values():
    spec = CurveSpec.csemm(3.0, 4.0)
    assert price_of(spec, state_from_x(spec, 0.5)) == pytest.approx(
        1.7965606327268534759, rel=1e-13
    )
    assert price_of(spec, state_from_x(spec, 3.2)) == pytest.approx(
        -0.13929635083507428663, rel=1e-13
    )
    spec2 = CurveSpec.csemm(10.0, 7.0)
    assert price_of(spec2, state_from_x(spec2, 9.0)) == pytest.approx(
        2.7011717995359013886e-6, rel=1e-11
    )


def test_csemm_fold_price_is_exact_zero():
    spec = CurveSpec.csemm(5.0, 3.0)
    assert price_of(spec, state_from_x(spec, 5.0)) == 0.0


def test_diamond_limit_is_line():
    # alpha = beta = 2 gives exponent 1: the lower branch is x + y = 2.
    for x in np.linspace(0.0, 2.0, 101):
        assert csemm_y_from_x(float(x), 2.0, 2.0) == pytest.approx(
            2.0 - float(x), abs=1e-15
        )


def test_circle_recovery():
    xs = np.linspace(0.0, 2.0 * CIRCLE_PARAM, 1000)
    worst = max(
        abs(csemm_y_from_x(float(x), CIRCLE_PARAM, CIRCLE_PARAM)
            - ccmm_y_from_x(float(x), CIRCLE_PARAM))
        for x in xs
    )
    assert worst <= 1e-9


def test_csemm_parameter_validation():
    for bad in (1.99, 0.0, -3.0, math.nan, math.inf):
        with pytest.raises(ParameterError):
            CurveSpec.csemm(bad, 4.0)
        with pytest.raises(ParameterError):
            CurveSpec.csemm(4.0, bad)


def test_csemm_x_from_price_roundtrip():
    spec = CurveSpec.csemm(3.0, 4.0)
    grid = list(np.linspace(-8.0, 8.0, 97))
    for p in grid:
        x = csemm_x_from_price(float(p), 3.0, 4.0)
        st_ = state_from_x(spec, x)
        assert price_of(spec, st_) == pytest.approx(float(p), rel=1e-9, abs=1e-9)


def test_csemm_x_from_price_zero_is_fold():
    assert csemm_x_from_price(0.0, 3.0, 4.0) == 3.0
    assert csemm_x_from_price(0.0, 7.5, 2.5) == 7.5


def test_csemm_x_from_price_unreachable_raises():
    # For alpha < 2 + sqrt(2) the exponent is below 2 and prices very close
    # to zero fall between representable reserve values; the inversion must
    # refuse rather than return a state with the wrong price.
    with pytest.raises(ConvergenceError):
        csemm_x_from_price(1e-8, 2.5, 2.5)


@given(p=st.floats(min_value=-50.0, max_value=50.0, allow_nan=False))
@settings(max_examples=200, deadline=None)
def test_csemm_inversion_property(p):
    spec = CurveSpec.csemm(CIRCLE_PARAM, CIRCLE_PARAM)
    x = csemm_x_from_price(p, CIRCLE_PARAM, CIRCLE_PARAM)
    got = price_of(spec, state_from_x(spec, x))
    assert got == pytest.approx(p, rel=1e-9, abs=1e-9)


# ------------------------------------------------------------------- others


def test_parabola_values():
    assert parabola_y_from_x(0.25) == 0.25
    assert parabola_y_from_x(1.0) == 0.0
    assert parabola_y_from_x(4.0) == 1.0
    spec = CurveSpec.parabola(2)
    assert price_of(spec, state_from_x(spec, 0.25)) == pytest.approx(1.0, rel=1e-15)


def test_parabola_x_from_price():
    assert parabola_x_from_price(1.0) == 0.25
    assert parabola_x_from_price(0.0) == 1.0
    assert parabola_x_from_price(-0.5) == 4.0
    with pytest.raises(DomainError):
        parabola_x_from_price(-1.0)
    with pytest.raises(DomainError):
        parabola_x_from_price(-1.5)


def test_parabola_only_quadratic_supported():
    with pytest.raises(ParameterError):
        CurveSpec.parabola(3)  # odd exponents never fold through zero
    with pytest.raises(ParameterError):
        CurveSpec.parabola(0)
    spec4 = CurveSpec.parabola(4)  # valid spec, but no closed-form helpers
    assert spec4.m == 4
    with pytest.raises(ParameterError):
        parabola_x_from_price(1.0, m=4)


def test_cpmm_values():
    assert cpmm_y_from_x(1.0, 2.0) == 4.0
    assert cpmm_x_from_price(4.0, 2.0, "+") == 1.0
    assert cpmm_x_from_price(4.0, 2.0, "-") == -1.0
    spec = CurveSpec.cpmm(2.0)
    assert price_of(spec, state_from_x(spec, 1.0)) == 4.0


def test_cpmm_rejects_nonpositive_price():
    with pytest.raises(DomainError):
        cpmm_x_from_price(0.0, 2.0)
    with pytest.raises(DomainError):
        cpmm_x_from_price(-4.0, 2.0)


def test_price_monotone_decreasing_in_x():
    # Marginal price falls strictly as the pool accumulates x, every family.
    cases = [
        (CurveSpec.ccmm(1.0), np.linspace(0.01, 1.99, 313)),
        (CurveSpec.csemm(3.0, 4.0), np.linspace(0.01, 5.99, 313)),
        (CurveSpec.csemm(CIRCLE_PARAM, CIRCLE_PARAM),
         np.linspace(0.01, 2.0 * CIRCLE_PARAM - 0.01, 313)),
        (CurveSpec.parabola(2), np.linspace(0.01, 9.0, 313)),
        (CurveSpec.cpmm(2.0), np.linspace(0.1, 10.0, 313)),
    ]
    for spec, xs in cases:
        prices = [price_of(spec, state_from_x(spec, float(x))) for x in xs]
        assert all(a > b for a, b in zip(prices, prices[1:])), spec.family


def test_state_from_price_all_families():
    targets = [
        (CurveSpec.ccmm(2.0), [-3.0, -0.5, 0.0, 0.5, 3.0]),
        (CurveSpec.csemm(3.0, 4.0), [-2.0, 0.0, 2.0]),
        (CurveSpec.parabola(2), [0.25, 1.0, 4.0]),
        (CurveSpec.cpmm(2.0), [0.25, 1.0, 4.0]),
    ]
    for spec, ps in targets:
        for p in ps:
            st_ = state_from_price(spec, p)
            assert abs(invariant_residual(spec, st_.x, st_.y)) <= 1e-9 * residual_scale(spec)
            assert price_of(spec, st_) == pytest.approx(p, rel=1e-9, abs=1e-9)


def test_state_from_x_sets_ccmm_angle(ccmm_unit):
    st_ = state_from_x(ccmm_unit, 0.5)
    assert st_.theta is not None
    assert math.pi < st_.theta < 2.0 * math.pi
    # angle reproduces the coordinates
    assert 1.0 + math.cos(st_.theta) == pytest.approx(st_.x, rel=1e-15)
    assert 1.0 + math.sin(st_.theta) == pytest.approx(st_.y, abs=1e-15)


def test_fold_x_values():
    assert fold_x(CurveSpec.ccmm(1.5)) == 1.5
    assert fold_x(CurveSpec.csemm(3.0, 4.0)) == 3.0
    assert fold_x(CurveSpec.parabola(2)) == 1.0
    assert fold_x(CurveSpec.cpmm(2.0)) is None


def test_x_from_y_on_side():
    spec = CurveSpec.csemm(3.0, 4.0)
    y = csemm_y_from_x(2.0, 3.0, 4.0)
    assert x_from_y_on_side(spec, y, "left") == pytest.approx(2.0, rel=1e-12)
    y_r = csemm_y_from_x(4.0, 3.0, 4.0)
    assert x_from_y_on_side(spec, y_r, "right") == pytest.approx(4.0, rel=1e-12)
    c = CurveSpec.ccmm(1.0)
    assert x_from_y_on_side(c, 0.0, "left") == pytest.approx(1.0, rel=1e-12)
    assert x_from_y_on_side(c, 1.0, "left") == 0.0
    assert x_from_y_on_side(c, 1.0, "right") == 2.0


def test_price_of_rejects_off_curve_state():
    spec = CurveSpec.ccmm(1.0)
    with pytest.raises(DomainError):
        price_of(spec, PoolState(x=0.5, y=0.9))  # nowhere near the circle


def test_y_from_x_dispatch():
    assert y_from_x(CurveSpec.ccmm(1.0), 1.0) == 0.0
    assert y_from_x(CurveSpec.csemm(3.0, 4.0), 3.0) == 0.0
    assert y_from_x(CurveSpec.parabola(2), 1.0) == 0.0
    assert y_from_x(CurveSpec.cpmm(2.0), 4.0) == 1.0


def test_family_enum_round_trips():
    assert Family("ccmm") is Family.CCMM
    assert CurveSpec.ccmm(1.0).family is Family.CCMM
    assert CurveSpec.cpmm(1.0).family is Family.CPMM
