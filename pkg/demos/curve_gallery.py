#!/usr/bin/env python3
"""A tour of the four invariant families.

Samples each curve's lower branch, shows where the marginal price sits at
each reserve level, and demonstrates the two limiting behaviors of the
super-elliptical family: the circle at alpha = beta = 2 + sqrt(2) and the
diamond x + y = 2 as alpha, beta -> 2.

Run:  python demos/curve_gallery.py
"""

import math

import numpy as np

from negamm import (
    CurveSpec,
    ccmm_y_from_x,
    csemm_y_from_x,
    price_of,
    state_from_x,
    y_from_x,
)

CIRCLE = 2.0 + math.sqrt(2.0)


def table(spec, xs):
    print(f"\n{spec.family.value}  {spec}")
    print(f"{'x':>8} {'y':>10} {'price':>10}")
    for x in xs:
        st = state_from_x(spec, x)
        p = price_of(spec, st)
        print(f"{x:8.3f} {st.y:10.5f} {p:10.4f}")


def main():
    print("=" * 60)
    print("Curve gallery: reserves and marginal prices")
    print("=" * 60)

    # The circular curve folds through price zero at x = k and quotes
    # negative prices on the far side.
    table(CurveSpec.ccmm(1.0), [0.1, 0.5, 1.0, 1.5, 1.9])

    # The super-ellipse does the same but with a tunable flatness.
    table(CurveSpec.csemm(3.0, 4.0), [0.5, 1.5, 3.0, 4.5, 5.5])

    # The parabola reaches price zero at x = 1 and bottoms out at -1.
    table(CurveSpec.parabola(2), [0.25, 1.0, 2.25, 4.0])

    # The constant-product curve never folds: price stays positive.
    table(CurveSpec.cpmm(2.0), [0.5, 1.0, 2.0, 4.0])

    print("\n" + "=" * 60)
    print("Limits of the super-elliptical family")
    print("=" * 60)
    xs = np.linspace(0.0, 2.0 * CIRCLE, 7)
    worst = max(
        abs(csemm_y_from_x(float(x), CIRCLE, CIRCLE) - ccmm_y_from_x(float(x), CIRCLE))
        for x in xs
    )
    print(f"alpha = beta = 2+sqrt(2): max |superellipse - circle| = {worst:.2e}")

    a = 2.0 + 1e-9
    worst = max(
        abs(float(x) + csemm_y_from_x(float(x), a, a) - 2.0)
        for x in np.linspace(0.5, 1.5, 11)
    )
    print(f"alpha = beta = 2+1e-9:    max |x + y - 2|            = {worst:.2e}")
    print("\nOne family sweeps from the diamond (maximal concentration at")
    print("price 1) through the circle out toward flat, heavy-tailed curves.")


if __name__ == "__main__":
    main()
