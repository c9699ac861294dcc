#!/usr/bin/env python3
"""What a liquidity position is worth, and how that worth moves.

V(p) is the pool's mark-to-market value at price p; its greeks follow the
options vocabulary: delta = dV/dp (which equals the base-token reserve),
gamma = d2V/dp2 (always negative: providing liquidity is short convexity),
and theta = -(sigma^2 / 2) * gamma, the expected yield that compensates
for that convexity under an arithmetic price diffusion.

Run:  python demos/lp_payoff_greeks.py
"""

import math

import numpy as np

from negamm import CurveSpec, greeks, lp_value

CIRCLE = 2.0 + math.sqrt(2.0)


def main():
    spec = CurveSpec.ccmm(1.0)
    print("=" * 64)
    print("Greeks of the circular pool's LP position (sigma = 0.8)")
    print("=" * 64)
    print(f"{'p':>7} {'value':>9} {'delta':>8} {'gamma':>8} {'theta':>8}")
    for p in np.linspace(-3.0, 3.0, 13):
        g = greeks(spec, float(p), sigma_iv=0.8)
        print(f"{g.p:7.2f} {g.value:9.4f} {g.delta:8.4f} {g.gamma:8.4f} {g.theta:8.4f}")
    print("\nNote the value keeps falling as prices sink below zero (delta")
    print("stays positive), while theta stays positive everywhere: carry")
    print("income is the flip side of being short gamma.")

    print("\n" + "=" * 64)
    print("Concavity, checked rather than asserted")
    print("=" * 64)
    grid = np.linspace(-10.0, 10.0, 241)
    vals = np.array([lp_value(spec, float(p)) for p in grid])
    second = vals[2:] - 2.0 * vals[1:-1] + vals[:-2]
    print(f"max second difference of V over [-10, 10]: {second.max():.3e}  (<= 0)")

    print("\n" + "=" * 64)
    print("Curvature at the zero-price fold across the super-ellipses")
    print("=" * 64)
    for a, b in ((CIRCLE, CIRCLE), (3.0, 4.0), (5.0, 3.0)):
        g = greeks(CurveSpec.csemm(a, b), 0.0, sigma_iv=1.0)
        print(f"alpha={a:<6.3f} beta={b:<6.3f} gamma(0) = {g.gamma}")
    print("\nBelow the circle exponent the fold is a cusp (gamma -> 0); above")
    print("it the curve flattens and curvature diverges. The circle itself")
    print("sits exactly in between with gamma(0) = -(2+sqrt(2)).")


if __name__ == "__main__":
    main()
