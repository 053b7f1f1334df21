"""Bargmann transform, closed-form heat flows and verification suites."""

from ._core import (
    AccuracyError,
    DivergenceError,
    DomainError,
    MehlerForm,
    Method,
    ParseError,
    PolyGauss,
    Side,
    UsageError,
    apply,
    conjugation_image,
    exact_residual,
    forward,
    forward_image,
    forward_quadrature,
    harmonic_kernel_complex,
    intertwine_residual,
    inverse,
    inverse_image,
    mehler_kernel,
    run_config,
    run_suite,
    solution_image,
    solve,
    suite_names,
    table,
)

OPERATORS = (
    "dirac-real",
    "dirac-complex",
    "euler-real",
    "euler-complex",
    "harmonic-real",
    "harmonic-complex",
)

__all__ = [name for name in dir() if not name.startswith("_")]
