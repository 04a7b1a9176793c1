"""Caputo fractional derivatives and memory-aware economic indicators.

Two derivative engines share one contract: an exact closed form for
polynomials and an L1 product-integration scheme for uniformly sampled
series.  On top of them sits the indicator layer, a one-parameter family of
indicator/factor ratios that spans the spectrum from the average (order 0)
to the marginal (order 1) value of an economic indicator.
"""

from ._kernels import BACKEND as KERNEL_BACKEND
from .caputo import (
    FracOrder,
    Polynomial,
    SampledSeries,
    as_order,
    caputo_integer,
    caputo_l1,
    caputo_l1_extended,
    caputo_poly,
    caputo_series,
)
from .errors import (
    DenominatorNearZero,
    DomainError,
    EmptySweep,
    FracalcError,
    GridMismatch,
    InsufficientData,
    NonUniformGrid,
    ParseError,
    PoleError,
)
from .indicators import (
    IndicatorPair,
    SweepEntry,
    SweepResult,
    alpha_sweep,
    average_indicator,
    detect_multivalued,
    marginal_indicator,
    t_indicator,
    t_indicator_time,
)
from .series import DemoId, DemoProcess, demo_process, export_csv, ingest_csv, sample
from .specfun import gamma, log_gamma

__version__ = "0.1.0"

__all__ = [
    "KERNEL_BACKEND",
    "__version__",
    # special functions
    "gamma",
    "log_gamma",
    # domain types
    "FracOrder",
    "Polynomial",
    "SampledSeries",
    "IndicatorPair",
    "SweepEntry",
    "SweepResult",
    "DemoId",
    "DemoProcess",
    "as_order",
    # derivative engines
    "caputo_poly",
    "caputo_l1",
    "caputo_l1_extended",
    "caputo_integer",
    "caputo_series",
    # indicators
    "average_indicator",
    "marginal_indicator",
    "t_indicator",
    "t_indicator_time",
    "alpha_sweep",
    "detect_multivalued",
    # series construction
    "demo_process",
    "sample",
    "ingest_csv",
    "export_csv",
    # errors
    "FracalcError",
    "DomainError",
    "PoleError",
    "InsufficientData",
    "DenominatorNearZero",
    "GridMismatch",
    "NonUniformGrid",
    "ParseError",
    "EmptySweep",
]
