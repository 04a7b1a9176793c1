"""Time-series construction: demo processes, sampling, CSV ingestion."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .caputo import Polynomial, SampledSeries
from .errors import DomainError, InsufficientData, NonUniformGrid, ParseError
from .indicators import IndicatorPair

__all__ = [
    "DemoId",
    "DemoProcess",
    "demo_process",
    "sample",
    "ingest_csv",
    "export_csv",
]

_CSV_HEADER = ("t", "x", "y")

# Consecutive time deltas may deviate from the mean step by this much.
_GRID_RTOL = 1e-9


class DemoId(enum.Enum):
    FIG1 = "fig1"
    FIG2 = "fig2"


@dataclass(frozen=True)
class DemoProcess:
    """A built-in demonstration process: polynomial factor x and indicator y.

    Both demo factors are non-monotone in time, so the same factor value
    recurs with different indicator values: y is multivalued in x even
    though both are single-valued in t.
    """

    id: DemoId
    x: Polynomial
    y: Polynomial
    t_end: float

    def pair(self) -> IndicatorPair:
        return IndicatorPair(y=self.y, x=self.x)

    def sampled_pair(self, n: int) -> IndicatorPair:
        return IndicatorPair(
            y=sample(self.y, self.t_end, n),
            x=sample(self.x, self.t_end, n),
        )


_DEMOS = {
    DemoId.FIG1: DemoProcess(
        id=DemoId.FIG1,
        x=Polynomial((70.0, -0.2, 0.001)),
        y=Polynomial((1400.0, -3.0, 0.01)),
        t_end=200.0,
    ),
    DemoId.FIG2: DemoProcess(
        id=DemoId.FIG2,
        x=Polynomial((70.0, -0.58, 5.4e-3, -1.5e-5, 8.2e-9)),
        y=Polynomial((1700.0, -24.0, 0.51, -3.5e-3, 7.5e-6)),
        t_end=240.0,
    ),
}


def demo_process(which: DemoId | str) -> DemoProcess:
    """Look up a demo process by id or by its name ("fig1"/"fig2")."""
    if isinstance(which, str):
        try:
            which = DemoId(which.lower())
        except ValueError:
            names = ", ".join(d.value for d in DemoId)
            raise DomainError(f"unknown demo process {which!r}; expected one of: {names}")
    return _DEMOS[which]


def sample(p: Polynomial, t_end: float, n: int) -> SampledSeries:
    """Sample a polynomial uniformly: values[k] = p(k * t_end / n), k = 0..n."""
    t_end = float(t_end)
    if not (math.isfinite(t_end) and t_end > 0.0):
        raise DomainError(f"t_end must be finite and > 0, got {t_end!r}")
    n = int(n)
    if n < 2:
        raise DomainError(f"need n >= 2 sampling steps, got {n}")
    h = t_end / n
    return SampledSeries(h, p(np.arange(n + 1) * h))


def _parse_float(cell: str, line: int) -> float:
    try:
        return float(cell)
    except ValueError:
        raise ParseError(f"not a number: {cell!r}", line=line)


def ingest_csv(path) -> IndicatorPair:
    """Read a `t,x,y` CSV into a sampled pair, validating the uniform grid.

    The grid must start at t = 0 and increase in equal steps (deltas within
    1e-9 relative of their mean); anything else is rejected rather than
    resampled.
    """
    with open(path, encoding="utf-8", newline="") as f:
        lines = f.read().splitlines()
    rows = [(i + 1, line) for i, line in enumerate(lines) if line.strip()]
    if not rows:
        raise ParseError("empty file", line=1)
    header_line, header = rows[0]
    fields = tuple(cell.strip().lower() for cell in header.split(","))
    if fields != _CSV_HEADER:
        raise ParseError(f"expected header 't,x,y', got {header!r}", line=header_line)
    t, x, y = [], [], []
    for line_no, line in rows[1:]:
        cells = line.split(",")
        if len(cells) != 3:
            raise ParseError(f"expected 3 comma-separated values, got {len(cells)}", line=line_no)
        t.append(_parse_float(cells[0].strip(), line_no))
        x.append(_parse_float(cells[1].strip(), line_no))
        y.append(_parse_float(cells[2].strip(), line_no))
    if len(t) < 3:
        raise InsufficientData(f"need at least 3 data rows, got {len(t)}")
    n = len(t) - 1
    h = (t[-1] - t[0]) / n
    if h <= 0.0:
        raise NonUniformGrid("time stamps must be strictly increasing")
    if abs(t[0]) > _GRID_RTOL * h:
        raise DomainError(f"series must start at t = 0, got t0={t[0]!r}")
    deltas = np.diff(t)
    if np.max(np.abs(deltas - h)) > _GRID_RTOL * h:
        raise NonUniformGrid(f"time deltas deviate from uniform step {h!r} beyond tolerance")
    return IndicatorPair(y=SampledSeries(h, np.asarray(y)), x=SampledSeries(h, np.asarray(x)))


def export_csv(pair: IndicatorPair, target) -> None:
    """Write a sampled pair as `t,x,y` rows that re-ingest bit-exactly.

    ``target`` is a path or a writable text file object.
    """
    if pair.kind != "sampled":
        raise DomainError("only sampled pairs can be exported")
    x, y = pair.x, pair.y
    lines = ["t,x,y"]
    lines.extend(
        f"{k * x.h!r},{xv!r},{yv!r}"
        for k, (xv, yv) in enumerate(zip(x.values.tolist(), y.values.tolist()))
    )
    text = "\n".join(lines) + "\n"
    if hasattr(target, "write"):
        target.write(text)
    else:
        with open(target, "w", encoding="utf-8", newline="") as f:
            f.write(text)
