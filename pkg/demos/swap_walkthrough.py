#!/usr/bin/env python3
"""One pool, one afternoon: swaps across the zero-price bound.

Follows a circular pool (k = 1) through a sequence of trades:

  1. an ordinary swap in positive-price territory,
  2. the swap that carries the price through zero,
  3. a trade executed at negative prices, where the counterparty is paid
     in BOTH tokens (amount_out < 0 means the trader deposits y too),
  4. the same trade with a fee, and a failed trade past the curve's edge.

Run:  python demos/swap_walkthrough.py
"""

from negamm import CurveSpec, DomainExceeded, state_from_x
from negamm.swap import SwapRequest, execute_swap, quote_exact_in

SPEC = CurveSpec.ccmm(1.0)


def show(title, state, result=None):
    line = f"  pool = (x={state.x:.5f}, y={state.y:.5f})"
    if result is not None:
        line += (f"   out={result.amount_out:+.5f}"
                 f"   price {result.price_before:+.4f} -> {result.price_after:+.4f}")
    print(f"{title}\n{line}")


def main():
    print("=" * 64)
    print("Swap walkthrough on the circular pool, k = 1")
    print("=" * 64)

    state = state_from_x(SPEC, 0.5)
    show("\nStart: price is positive", state)

    # 1. ordinary swap: sell x into the pool, receive y
    state, res = execute_swap(SPEC, state, SwapRequest("x", 0.3))
    show("\n1. Sell 0.3 x -> receive y", state, res)

    # 2. keep selling x: the price crosses zero mid-trade
    state, res = execute_swap(SPEC, state, SwapRequest("x", 0.5))
    show("\n2. Sell 0.5 more x -> price crosses the zero bound", state, res)
    assert res.price_before > 0.0 > res.price_after

    # 3. now prices are negative: whoever adds x must add y as well
    state, res = execute_swap(SPEC, state, SwapRequest("x", 0.3))
    show("\n3. Sell 0.3 x at negative prices -> amount_out < 0", state, res)
    print("     (the 'seller' pays y on top: that is what a negative price means)")

    # 4. fees shrink the effective input before traversal
    quote_free = quote_exact_in(SPEC, state, SwapRequest("x", -0.2, fee=0.0))
    quote_fee = quote_exact_in(SPEC, state, SwapRequest("x", -0.2, fee=0.01))
    print("\n4. Same withdrawal quoted at fee 0 and fee 1%:")
    print(f"     fee 0.0%: out = {quote_free.amount_out:+.6f}")
    print(f"     fee 1.0%: out = {quote_fee.amount_out:+.6f}")

    # 5. the pool refuses to quote beyond its price asymptotes
    print("\n5. Trades past the curve's edge are rejected, never clamped:")
    try:
        quote_exact_in(SPEC, state, SwapRequest("x", 5.0))
    except DomainExceeded as exc:
        print(f"     DomainExceeded: {exc}")


if __name__ == "__main__":
    main()
