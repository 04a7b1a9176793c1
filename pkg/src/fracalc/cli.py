"""Command-line interface.

Commands emit plot-ready CSV or machine-readable JSON on the data stream
(stdout or --output FILE); diagnostics and reports never mix into the data
stream.  All floats are printed in shortest round-trip form so identical
inputs produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass

import numpy as np

from .caputo import Polynomial, SampledSeries, caputo_poly, caputo_series
from .check import run_checks
from .errors import DomainError, FracalcError
from .indicators import (
    IndicatorPair,
    alpha_sweep,
    average_indicator,
    detect_multivalued,
    marginal_indicator,
    t_indicator,
)
from .series import demo_process, ingest_csv, sample

__all__ = ["RunConfig", "build_parser", "run", "main"]

_DEFAULT_N = 2000


@dataclass(frozen=True)
class RunConfig:
    """Resolved invocation parameters for one CLI run."""

    command: str
    input: str | None = None
    engine: str | None = None
    alphas: tuple[float, ...] = ()
    alpha_raw: str | None = None
    T: float | None = None
    n: int = _DEFAULT_N
    output: str | None = None
    format: str = "csv"
    coeffs: tuple[float, ...] | None = None
    column: str = "y"
    demo: str | None = None
    x_tol: float | None = None
    y_tol: float | None = None


def _fmt(x: float) -> str:
    """Shortest decimal that round-trips to the same double."""
    return repr(float(x))


def _parse_alpha_spec(text: str) -> tuple[float, ...]:
    """A single order 'A' or an inclusive range 'START:STOP:STEP'."""
    if ":" not in text:
        return (float(text),)
    parts = text.split(":")
    if len(parts) != 3:
        raise DomainError(f"alpha range must be START:STOP:STEP, got {text!r}")
    start, stop, step = (float(p) for p in parts)
    if step <= 0.0:
        raise DomainError(f"alpha range step must be > 0, got {step!r}")
    if start > stop:
        raise DomainError(f"alpha range needs start <= stop, got {text!r}")
    count = int(math.floor((stop - start) / step + 1e-9)) + 1
    return tuple(start + i * step for i in range(count))


def _parse_coeffs(text: str) -> tuple[float, ...]:
    try:
        return tuple(float(c) for c in text.split(","))
    except ValueError:
        raise DomainError(f"--coeffs must be comma-separated numbers, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fracalc",
        description="Caputo fractional derivatives and memory-aware economic indicators.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_io(p, with_engine=True):
        p.add_argument("--input", metavar="PATH", help="CSV file with header t,x,y")
        if with_engine:
            p.add_argument("--engine", choices=("analytic", "numeric"))
        p.add_argument("--alpha", metavar="A|START:STOP:STEP", help="order(s) of differentiation")
        p.add_argument("--T", type=float, metavar="VALUE", help="evaluation time (default: series end)")
        p.add_argument("--N", type=int, default=_DEFAULT_N, metavar="VALUE",
                       help=f"sampling resolution (default {_DEFAULT_N})")
        p.add_argument("--output", metavar="PATH", help="write data here instead of stdout")
        p.add_argument("--format", choices=("csv", "json"), default="csv")

    p = sub.add_parser("deriv", help="Caputo derivative of one column or polynomial at T")
    add_io(p)
    p.add_argument("--coeffs", metavar="C0,C1,...", help="polynomial coefficients, low order first")
    p.add_argument("--column", choices=("x", "y"), default="y", help="CSV column to differentiate")

    p = sub.add_parser("indicator", help="average, marginal, and order-alpha indicator at T")
    add_io(p)
    p.add_argument("--demo", choices=("fig1", "fig2"), help="use a built-in demo pair")

    p = sub.add_parser("sweep", help="indicator across a range of orders")
    add_io(p)
    p.add_argument("--demo", choices=("fig1", "fig2"), help="use a built-in demo pair")

    p = sub.add_parser("demo", help="emit a demo curve (X(t), Y(t)) plus a multivaluedness report")
    p.add_argument("which", choices=("fig1", "fig2"))
    add_io(p, with_engine=False)
    p.add_argument("--x-tol", type=float, dest="x_tol",
                   help="factor match tolerance (default: one grid cell of X variation)")
    p.add_argument("--y-tol", type=float, dest="y_tol",
                   help="indicator difference threshold (default: 10 grid cells of Y variation)")

    p = sub.add_parser("check", help="run the built-in verification suite")
    p.add_argument("--output", metavar="PATH", help="write the report here instead of stdout")

    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    alpha_raw = getattr(args, "alpha", None)
    return RunConfig(
        command=args.command,
        input=getattr(args, "input", None),
        engine=getattr(args, "engine", None),
        alphas=_parse_alpha_spec(alpha_raw) if alpha_raw else (),
        alpha_raw=alpha_raw,
        T=getattr(args, "T", None),
        n=getattr(args, "N", _DEFAULT_N),
        output=getattr(args, "output", None),
        format=getattr(args, "format", "csv"),
        coeffs=_parse_coeffs(args.coeffs) if getattr(args, "coeffs", None) else None,
        column=getattr(args, "column", "y"),
        demo=getattr(args, "demo", None) or getattr(args, "which", None),
        x_tol=getattr(args, "x_tol", None),
        y_tol=getattr(args, "y_tol", None),
    )


def _emit(text: str, output: str | None) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        with open(output, "w", encoding="utf-8", newline="") as f:
            f.write(text)


def _report(text: str, data_went_to_file: bool) -> None:
    # Human-facing companion output: stdout when free, else stderr --
    # never the data stream.
    stream = sys.stdout if data_went_to_file else sys.stderr
    stream.write(text)


def _json_doc(command: str, params: dict, body: dict) -> str:
    return json.dumps({"command": command, "params": params, **body}, indent=2) + "\n"


def _csv_doc(header: str, rows: list[str]) -> str:
    return "\n".join([header, *rows]) + "\n"


def _base_params(config: RunConfig) -> dict:
    return {
        "engine": config.engine,
        "alpha": config.alpha_raw,
        "T": config.T,
        "N": config.n,
        "input": config.input,
        "demo": config.demo,
        "format": config.format,
    }


def _require_single_alpha(config: RunConfig) -> float:
    if len(config.alphas) != 1:
        raise DomainError("this command takes a single --alpha value")
    return config.alphas[0]


def _load_pair(config: RunConfig):
    """Build the indicator pair plus the T to evaluate at (None = series end)."""
    if config.input and config.demo:
        raise DomainError("give --input or --demo, not both")
    if config.input:
        if config.engine == "analytic":
            raise DomainError("CSV input is sampled data; use the numeric engine")
        return ingest_csv(config.input), config.T
    if config.demo:
        d = demo_process(config.demo)
        if config.engine == "numeric":
            # Sample over [0, T] directly so any positive T works.
            t_hi = config.T if config.T is not None else d.t_end
            pair = IndicatorPair(y=sample(d.y, t_hi, config.n), x=sample(d.x, t_hi, config.n))
            return pair, None
        return d.pair(), config.T if config.T is not None else d.t_end
    raise DomainError("need --input PATH or --demo fig1|fig2")


def _run_deriv(config: RunConfig) -> int:
    if not config.alphas:
        raise DomainError("deriv needs --alpha")
    if config.coeffs is not None and config.input:
        raise DomainError("give --coeffs or --input, not both")
    if config.coeffs is not None:
        p = Polynomial(config.coeffs)
        engine = config.engine or "analytic"
        if config.T is None:
            raise DomainError("polynomial input needs an explicit --T")
        if engine == "analytic":
            values = [caputo_poly(p, a, config.T) for a in config.alphas]
        else:
            s = sample(p, config.T, config.n)
            values = [caputo_series(s, a) for a in config.alphas]
    elif config.input:
        if config.engine == "analytic":
            raise DomainError("analytic engine needs --coeffs")
        pair = ingest_csv(config.input)
        series: SampledSeries = pair.x if config.column == "x" else pair.y
        if config.T is not None:
            series = series.truncated(config.T)
        values = [caputo_series(series, a) for a in config.alphas]
    else:
        raise DomainError("need --coeffs or --input")

    rows = [{"alpha": a, "value": v, "degenerate": False} for a, v in zip(config.alphas, values)]
    if config.format == "json":
        text = _json_doc("deriv", _base_params(config), {"results": rows})
    else:
        text = _csv_doc("alpha,value", [f"{_fmt(a)},{_fmt(v)}" for a, v in zip(config.alphas, values)])
    _emit(text, config.output)
    return 0


def _run_indicator(config: RunConfig) -> int:
    a = _require_single_alpha(config)
    pair, T = _load_pair(config)
    rows = [
        {"kind": "average", "alpha": 0.0, "value": average_indicator(pair, T), "degenerate": False},
        {"kind": "marginal", "alpha": 1.0, "value": marginal_indicator(pair, T), "degenerate": False},
        {"kind": "t_indicator", "alpha": a, "value": t_indicator(pair, a, T), "degenerate": False},
    ]
    if config.format == "json":
        text = _json_doc("indicator", _base_params(config), {"results": rows})
    else:
        text = _csv_doc(
            "kind,alpha,value",
            [f"{r['kind']},{_fmt(r['alpha'])},{_fmt(r['value'])}" for r in rows],
        )
    _emit(text, config.output)
    return 0


def _run_sweep(config: RunConfig) -> int:
    if not config.alphas:
        raise DomainError("sweep needs --alpha (a value or START:STOP:STEP)")
    pair, T = _load_pair(config)
    result = alpha_sweep(pair, config.alphas, T)
    rows = [
        {"alpha": e.alpha, "value": e.value, "degenerate": e.degenerate} for e in result
    ]
    if config.format == "json":
        text = _json_doc("sweep", _base_params(config), {"results": rows})
    else:
        lines = [
            f"{_fmt(e.alpha)}," if e.degenerate else f"{_fmt(e.alpha)},{_fmt(e.value)}"
            for e in result
        ]
        text = _csv_doc("alpha,value", lines)
    _emit(text, config.output)
    return 0


def _run_demo(config: RunConfig) -> int:
    d = demo_process(config.demo)
    xs = sample(d.x, d.t_end, config.n)
    ys = sample(d.y, d.t_end, config.n)
    x_tol = config.x_tol if config.x_tol is not None else _grid_tol(xs, 1.0)
    y_tol = config.y_tol if config.y_tol is not None else _grid_tol(ys, 10.0)
    witnesses = detect_multivalued(xs, ys, x_tol, y_tol)

    ts = xs.times()
    if config.format == "json":
        rows = [
            {"t": float(t), "x": float(xv), "y": float(yv)}
            for t, xv, yv in zip(ts.tolist(), xs.values.tolist(), ys.values.tolist())
        ]
        body = {
            "results": rows,
            "multivalued": {
                "count": len(witnesses),
                "x_tol": x_tol,
                "y_tol": y_tol,
                "witnesses": [{"t1": t1, "t2": t2} for t1, t2 in witnesses[:10]],
            },
        }
        text = _json_doc("demo", _base_params(config), body)
    else:
        text = _csv_doc(
            "x,y",
            [f"{_fmt(xv)},{_fmt(yv)}" for xv, yv in zip(xs.values.tolist(), ys.values.tolist())],
        )
    _emit(text, config.output)

    report = [
        f"multivalued dependence ({config.demo}): {len(witnesses)} witness pair(s) "
        f"at x_tol={_fmt(x_tol)}, y_tol={_fmt(y_tol)}"
    ]
    if witnesses:
        t1, t2 = witnesses[0]
        report.append(
            f"  e.g. t1={_fmt(t1)}, t2={_fmt(t2)}: "
            f"X {_fmt(float(d.x(t1)))} ~= {_fmt(float(d.x(t2)))} "
            f"but Y {_fmt(float(d.y(t1)))} vs {_fmt(float(d.y(t2)))}"
        )
    _report("\n".join(report) + "\n", data_went_to_file=config.output is not None)
    return 0


def _grid_tol(series: SampledSeries, cells: float) -> float:
    return cells * float(np.max(np.abs(np.diff(series.values))))


def _run_check(config: RunConfig) -> int:
    results = run_checks()
    lines = [
        f"{'PASS' if r.passed else 'FAIL'} {r.name}: {r.detail}" for r in results
    ]
    n_ok = sum(r.passed for r in results)
    lines.append(f"{n_ok}/{len(results)} checks passed")
    _emit("\n".join(lines) + "\n", config.output)
    return 0 if n_ok == len(results) else 1


_HANDLERS = {
    "deriv": _run_deriv,
    "indicator": _run_indicator,
    "sweep": _run_sweep,
    "demo": _run_demo,
    "check": _run_check,
}


def run(config: RunConfig) -> int:
    return _HANDLERS[config.command](config)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return run(config_from_args(args))
    except (FracalcError, OSError) as exc:
        sys.stderr.write(f"error: {type(exc).__name__}: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
