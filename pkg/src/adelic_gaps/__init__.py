"""Exact nearest-neighbor gap statistics for rotation orbits on adelic tori."""

from .adele import (
    AdelePoint,
    PrimeSet,
    TorusPoint,
    add,
    add_diagonal,
    ambient_metric,
    brute_force_torus_distance,
    make_point,
    reduce,
    scale_by_integer,
    sub,
    torus_distance,
    zero_point,
)
from .arith import archimedean_abs, is_prime, padic_abs, valuation
from .lattice import (
    RotationMatrixSpec,
    ScanResult,
    G_N_value,
    delta_via_lattice,
    F_value,
    min_positive_diagonal_distance,
    scan_G,
)
from .paper_examples import (
    ExampleInstance,
    build_F1,
    build_F2,
    build_F3,
    build_I1,
    build_I2,
    build_I3,
    build_I4,
    default_instances,
    reproduce_all,
)
from .torus_gaps import (
    DegenerateOrbitError,
    GapReport,
    gap_report,
    nn_distance,
    orbit,
    three_gap_check,
)

__all__ = [
    "AdelePoint",
    "PrimeSet",
    "TorusPoint",
    "add",
    "add_diagonal",
    "ambient_metric",
    "archimedean_abs",
    "brute_force_torus_distance",
    "build_F1",
    "build_F2",
    "build_F3",
    "build_I1",
    "build_I2",
    "build_I3",
    "build_I4",
    "default_instances",
    "delta_via_lattice",
    "DegenerateOrbitError",
    "ExampleInstance",
    "F_value",
    "G_N_value",
    "gap_report",
    "GapReport",
    "is_prime",
    "make_point",
    "min_positive_diagonal_distance",
    "nn_distance",
    "orbit",
    "padic_abs",
    "reduce",
    "reproduce_all",
    "RotationMatrixSpec",
    "scale_by_integer",
    "scan_G",
    "ScanResult",
    "sub",
    "three_gap_check",
    "torus_distance",
    "valuation",
    "zero_point",
]
