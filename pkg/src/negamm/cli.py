"""Command line front door.

Subcommands mirror the library surface: ``curve`` samples an invariant,
``swap`` runs one exact-input trade, ``fingerprint`` emits liquidity
densities, ``payoff`` tabulates LP value and greeks, ``analyze`` digests a
price-history CSV and ``compare`` lines several fingerprints up on one
grid.  Output is CSV (default) or JSON, written to stdout or
``--output-path``; runs are deterministic, so identical invocations
produce identical bytes.

Exit codes: 0 success, 1 domain/convergence/data errors, 2 usage errors.
"""

from __future__ import annotations

import argparse
import json
import math
import re
import sys

import numpy as np

from . import curves, fingerprint, payoff, series, swap
from .curves import CurveSpec, PoolState
from .errors import NegammError

_FAMILIES = ("cpmm", "ccmm", "csemm", "parabola")
_DOMAIN_NAMES = {
    "positive": fingerprint.POSITIVE,
    "negative": fingerprint.NEGATIVE,
}


def _parse_grid(text: str, parser: argparse.ArgumentParser) -> np.ndarray:
    """min:max:steps with inclusive endpoints; steps is the point count."""
    parts = text.split(":")
    if len(parts) != 3:
        parser.error(f"--grid must be min:max:steps, got {text!r}")
    try:
        lo, hi = float(parts[0]), float(parts[1])
        steps = int(parts[2])
    except ValueError:
        parser.error(f"--grid must be numeric min:max:steps, got {text!r}")
    if steps < 2:
        parser.error(f"--grid needs steps >= 2, got {steps}")
    if not (math.isfinite(lo) and math.isfinite(hi)) or lo >= hi:
        parser.error(f"--grid needs finite min < max, got {text!r}")
    return np.linspace(lo, hi, steps)


def _spec_from_args(args, parser: argparse.ArgumentParser) -> CurveSpec:
    fam = args.family
    if fam is None:
        parser.error("--family is required")
    if fam == "ccmm":
        if args.k is None:
            parser.error("--k is required for --family ccmm")
        return CurveSpec.ccmm(args.k)
    if fam == "csemm":
        if args.alpha is None or args.beta is None:
            parser.error("--alpha and --beta are required for --family csemm")
        return CurveSpec.csemm(args.alpha, args.beta)
    if fam == "parabola":
        return CurveSpec.parabola(2 if args.m is None else args.m)
    if args.L is None:
        parser.error("--L is required for --family cpmm")
    return CurveSpec.cpmm(args.L)


def _fmt(value) -> str:
    if isinstance(value, float):
        if math.isfinite(value):
            return repr(value)
        if math.isnan(value):
            return "nan"
        return "inf" if value > 0 else "-inf"
    return str(value)


def _json_cell(value):
    if isinstance(value, float) and not math.isfinite(value):
        return _fmt(value)
    return value


def _emit(header, rows, args) -> None:
    if args.output == "json":
        payload = [
            {key: _json_cell(val) for key, val in zip(header, row)} for row in rows
        ]
        text = json.dumps(payload, indent=2) + "\n"
    else:
        import csv as _csv
        import io

        buf = io.StringIO()
        writer = _csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([_fmt(v) for v in row])
        text = buf.getvalue()
    if args.output_path:
        with open(args.output_path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_curve(args, parser):
    spec = _spec_from_args(args, parser)
    xs = _parse_grid(args.grid, parser)
    rows = [[float(x), curves.y_from_x(spec, float(x), args.branch)] for x in xs]
    return ["x", "y"], rows


def _cmd_swap(args, parser):
    spec = _spec_from_args(args, parser)
    if args.x is None:
        parser.error("--x (the current x reserve) is required for swap")
    if args.token_in is None or args.amount_in is None:
        parser.error("--token-in and --amount-in are required for swap")
    if args.y is None:
        state = curves.state_from_x(spec, args.x)
    else:
        theta = None
        if spec.family is curves.Family.CCMM:
            theta = math.atan2(args.y - spec.k, args.x - spec.k) + 2.0 * math.pi
        state = PoolState(x=args.x, y=args.y, theta=theta)
    req = swap.SwapRequest(
        token_in=args.token_in, amount_in=args.amount_in, fee=args.fee
    )
    new_state, result = swap.execute_swap(spec, state, req)
    header = [
        "amount_out",
        "price_before",
        "price_after",
        "residual_after",
        "new_x",
        "new_y",
    ]
    row = [
        result.amount_out,
        result.price_before,
        result.price_after,
        result.residual_after,
        new_state.x,
        new_state.y,
    ]
    return header, [row]


def _analytic_sample(spec, coord, space, domain):
    """Closed-form density at one coordinate; coord is t in tick space."""
    fam = spec.family
    sign = "+" if domain == fingerprint.POSITIVE else "-"
    if fam is curves.Family.CCMM:
        if space == fingerprint.TICK:
            return fingerprint.ccmm_liquidity_tick(coord, spec.k, sign)
        return fingerprint.ccmm_liquidity_sqrtprice(coord, spec.k, sign)
    if fam is curves.Family.PARABOLA:
        if space == fingerprint.TICK:
            return fingerprint.parabola_liquidity_tick(coord, domain)
        return fingerprint.parabola_liquidity_sqrtprice(coord, domain)
    if fam is curves.Family.CPMM:
        # The '-' rows are the mirrored negative-liquidity branch of
        # x*y = L^2; no pool state reaches them, they exist for plots.
        return fingerprint.cpmm_liquidity(spec.L, sign)
    raise NegammError("csemm has no closed-form fingerprint; use --source numeric")


def _fingerprint_rows(spec, grid, space, domain, source):
    """Rows (coord, density, domain_sign) for one domain of one curve."""
    eval_space = fingerprint.TICK if space == "circle" else space
    if source == "analytic":
        samples = [
            fingerprint.FingerprintSample(
                coord=float(t),
                density=_analytic_sample(spec, float(t), eval_space, domain),
                domain_sign=domain,
            )
            for t in grid
        ]
    else:
        samples = fingerprint.numeric_fingerprint(spec, grid, eval_space, domain)
    rows = []
    for smp in samples:
        coord = smp.coord
        if space == "circle":
            coord = fingerprint.circle_map(smp.coord, domain)
        rows.append([coord, smp.density, smp.domain_sign])
    return rows


def _resolve_source(spec, requested, parser):
    if requested == "auto":
        return "numeric" if spec.family is curves.Family.CSEMM else "analytic"
    if requested == "analytic" and spec.family is curves.Family.CSEMM:
        parser.error("csemm has no closed-form fingerprint; use --source numeric")
    return requested


def _cmd_fingerprint(args, parser):
    spec = _spec_from_args(args, parser)
    grid = _parse_grid(args.grid, parser)
    source = _resolve_source(spec, args.source, parser)
    if args.domain == "both":
        domains = [fingerprint.POSITIVE, fingerprint.NEGATIVE]
    else:
        domains = [_DOMAIN_NAMES[args.domain]]
    rows = []
    for domain in domains:
        rows.extend(_fingerprint_rows(spec, grid, args.space, domain, source))
    return ["coord", "density", "domain_sign"], rows


def _cmd_payoff(args, parser):
    spec = _spec_from_args(args, parser)
    ps = _parse_grid(args.grid, parser)
    rows = []
    for p in ps:
        point = payoff.greeks(spec, float(p), args.sigma_iv)
        rows.append([point.p, point.value, point.delta, point.gamma, point.theta])
    return ["p", "value", "delta", "gamma", "theta"], rows


def _cmd_analyze(args, parser):
    if args.input is None:
        parser.error("--input is required for analyze")
    data = series.load_series(args.input)
    if args.stat == "negative-days":
        stats = series.negative_price_stats(data)
        rows = [
            [year, stats[year].negative_days, stats[year].min_price]
            for year in sorted(stats)
        ]
        return ["year", "negative_days", "min_price"], rows
    if args.stat == "returns":
        ret = series.returns(data, args.mode, args.eps)
        rows = [[d.isoformat(), v] for d, v in zip(ret.dates, ret.values)]
        return ["date", "return"], rows
    if args.stat == "squared-returns":
        ret = series.returns(data, args.mode, args.eps)
        rows = [[d.isoformat(), r2] for d, r2 in series.squared_returns(ret)]
        return ["date", "squared_return"], rows
    # hill
    ret = series.returns(data, args.mode, args.eps)
    alpha = series.hill_tail_index(ret, args.top_k)
    return ["top_k", "tail_index"], [[args.top_k, alpha]]


def _parse_compare_spec(text: str, parser):
    """family:key=value[,key=value...]; 'gaussian:mu=..,sigma=..,mass=..' allowed."""
    name, _, rest = text.partition(":")
    kv = {}
    if rest:
        for part in rest.split(","):
            key, eq, val = part.partition("=")
            if not eq:
                parser.error(f"bad spec {text!r}: expected key=value, got {part!r}")
            try:
                kv[key.strip()] = float(val)
            except ValueError:
                parser.error(f"bad spec {text!r}: {val!r} is not a number")
    try:
        if name == "gaussian":
            return ("gaussian", kv["mu"], kv["sigma"], kv["mass"])
        if name == "ccmm":
            return ("curve", CurveSpec.ccmm(kv["k"]))
        if name == "csemm":
            return ("curve", CurveSpec.csemm(kv["alpha"], kv["beta"]))
        if name == "parabola":
            return ("curve", CurveSpec.parabola(int(kv.get("m", 2))))
        if name == "cpmm":
            return ("curve", CurveSpec.cpmm(kv["L"]))
    except KeyError as exc:
        parser.error(f"bad spec {text!r}: missing parameter {exc}")
    parser.error(f"bad spec {text!r}: unknown family {name!r}")


def _cmd_compare(args, parser):
    if not args.specs:
        parser.error("--specs needs at least one curve spec")
    if args.space not in (fingerprint.TICK, fingerprint.SQRTPRICE):
        parser.error("compare supports --space tick or sqrtprice")
    grid = _parse_grid(args.grid, parser)
    parsed = [_parse_compare_spec(text, parser) for text in args.specs]
    columns = []
    for entry in parsed:
        if entry[0] == "gaussian":
            if args.space != fingerprint.TICK:
                parser.error("gaussian comparator is defined in tick space")
            _, mu, sigma, mass = entry
            columns.append(
                [
                    fingerprint.gaussian_fingerprint(float(t), mu, sigma, mass)
                    for t in grid
                ]
            )
        else:
            spec = entry[1]
            source = _resolve_source(spec, "auto", parser)
            rows = _fingerprint_rows(
                spec, grid, args.space, fingerprint.POSITIVE, source
            )
            columns.append([row[1] for row in rows])
    header = ["coord"] + list(args.specs)
    rows = []
    for i, t in enumerate(grid):
        rows.append([float(t)] + [col[i] for col in columns])
    return header, rows


def _expand_params(argv: list[str]) -> list[str]:
    """Splice ``--params FILE`` key=value pairs in as ordinary flags.

    File flags are inserted where --params stood, so explicit flags given
    later on the command line win (argparse keeps the last occurrence).
    """
    if "--params" not in argv:
        return argv
    idx = argv.index("--params")
    if idx + 1 >= len(argv):
        raise _UsageError("--params needs a file path")
    path = argv[idx + 1]
    injected: list[str] = []
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            key, eq, val = line.partition("=")
            if not eq:
                raise _UsageError(
                    f"{path}: line {lineno}: expected key = value, got {raw.strip()!r}"
                )
            key = key.strip()
            val = val.strip()
            if not key or not val:
                raise _UsageError(
                    f"{path}: line {lineno}: expected key = value, got {raw.strip()!r}"
                )
            if key == "specs":
                injected.extend(["--specs", *val.split()])
            else:
                injected.extend([f"--{key}", val])
    return argv[:idx] + injected + argv[idx + 2 :]


class _UsageError(Exception):
    pass


def _add_common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--family", choices=_FAMILIES)
    sub.add_argument("--k", type=float, help="ccmm radius/offset")
    sub.add_argument("--alpha", type=float, help="csemm x-axis crossing")
    sub.add_argument("--beta", type=float, help="csemm y-axis crossing")
    sub.add_argument("--m", type=int, help="parabola exponent (even, default 2)")
    sub.add_argument("--L", type=float, help="cpmm liquidity parameter")
    sub.add_argument("--grid", help="sample grid, min:max:steps (inclusive)")
    sub.add_argument("--output", choices=("csv", "json"), default="csv")
    sub.add_argument("--output-path", help="write here instead of stdout")
    sub.add_argument(
        "--params", metavar="FILE", help="key = value file of extra flags"
    )


# Accept leading-minus values like "-6:6:241" or "-1e-3" as arguments
# rather than flags; argparse's stock matcher only covers plain decimals.
_NEGATIVE_VALUE = re.compile(r"^-\d|^-\.\d")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="negamm",
        description="Invariant curves, swaps and liquidity analytics for "
        "markets whose prices can go negative.",
    )
    parser._negative_number_matcher = _NEGATIVE_VALUE
    subs = parser.add_subparsers(dest="command", required=True)

    p_curve = subs.add_parser("curve", help="sample (x, y) points of an invariant")
    _add_common(p_curve)
    p_curve.add_argument("--branch", choices=("lower", "upper"), default="lower")

    p_swap = subs.add_parser("swap", help="execute one exact-input swap")
    _add_common(p_swap)
    p_swap.add_argument("--x", type=float, help="current x reserve")
    p_swap.add_argument("--y", type=float, help="current y reserve (else derived)")
    p_swap.add_argument("--token-in", choices=("x", "y"))
    p_swap.add_argument("--amount-in", type=float)
    p_swap.add_argument("--fee", type=float, default=0.0)

    p_fp = subs.add_parser("fingerprint", help="liquidity density samples")
    _add_common(p_fp)
    p_fp.add_argument(
        "--space", choices=("sqrtprice", "tick", "circle"), default="sqrtprice"
    )
    p_fp.add_argument(
        "--domain", choices=("positive", "negative", "both"), default="positive"
    )
    p_fp.add_argument(
        "--source",
        choices=("auto", "analytic", "numeric"),
        default="auto",
        help="closed form where available (auto), or force the numeric oracle",
    )

    p_pay = subs.add_parser("payoff", help="LP value, delta, gamma, theta")
    _add_common(p_pay)
    p_pay.add_argument("--sigma-iv", type=float, default=0.0)

    p_an = subs.add_parser("analyze", help="price-history statistics")
    _add_common(p_an)
    p_an.add_argument("--input", help="CSV with header date,price")
    p_an.add_argument(
        "--stat",
        choices=("negative-days", "returns", "squared-returns", "hill"),
        default="negative-days",
    )
    p_an.add_argument(
        "--mode",
        choices=(series.ARITHMETIC_DIFF, series.PERCENT),
        default=series.ARITHMETIC_DIFF,
    )
    p_an.add_argument("--eps", type=float, default=1e-9)
    p_an.add_argument("--top-k", type=int, default=50)

    p_cmp = subs.add_parser("compare", help="aligned fingerprints of several curves")
    _add_common(p_cmp)
    p_cmp.add_argument(
        "--specs",
        nargs="+",
        metavar="SPEC",
        help="e.g. ccmm:k=1 csemm:alpha=3,beta=3 gaussian:mu=0,sigma=1.4,mass=2",
    )
    p_cmp.add_argument("--space", choices=("sqrtprice", "tick"), default="tick")

    for sub in subs.choices.values():
        sub._negative_number_matcher = _NEGATIVE_VALUE

    return parser


_DISPATCH = {
    "curve": _cmd_curve,
    "swap": _cmd_swap,
    "fingerprint": _cmd_fingerprint,
    "payoff": _cmd_payoff,
    "analyze": _cmd_analyze,
    "compare": _cmd_compare,
}


def run(argv=None) -> int:
    argv = list(sys.argv[1:]) if argv is None else list(argv)
    try:
        argv = _expand_params(argv)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    needs_grid = args.command in ("curve", "fingerprint", "payoff", "compare")
    if needs_grid and getattr(args, "grid", None) is None:
        print(f"usage error: --grid is required for {args.command}", file=sys.stderr)
        return 2
    try:
        header, rows = _DISPATCH[args.command](args, parser)
        _emit(header, rows, args)
    except SystemExit as exc:  # parser.error inside a command
        return 0 if exc.code in (0, None) else 2
    except NegammError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
