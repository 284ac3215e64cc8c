"""Derivative-range certificates, spline witnesses and extremal search for
Hausdorff moments. Exact arithmetic throughout; rationals are Fractions."""

from ._momentrange import (
    MomentRangeError,
    analyze,
    build_witness,
    certificate,
    d_table,
    delta,
    hilbert_interpolant,
    maximize_spread,
    reflect,
    run_cli,
    verify_identities,
)

__all__ = [
    "MomentRangeError",
    "analyze",
    "build_witness",
    "certificate",
    "d_table",
    "delta",
    "hilbert_interpolant",
    "maximize_spread",
    "reflect",
    "run_cli",
    "verify_identities",
]
