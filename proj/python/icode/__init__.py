"""Optimal scalar linear index codes over GF(2) for one-sided neighbouring side information."""

from ._icode import (
    DimensionError,
    Inconclusive,
    InvalidParameters,
    ParseError,
    Problem,
    capacity,
    generate,
    is_critical,
    minrank,
    run_cli,
    verify,
)

__all__ = [
    "DimensionError",
    "Inconclusive",
    "InvalidParameters",
    "ParseError",
    "Problem",
    "capacity",
    "generate",
    "is_critical",
    "minrank",
    "run_cli",
    "verify",
]
