"""Exact homology, cohomology and cup products for twisted Leibniz-type algebras.

All numeric interchange uses rational strings ("p/q" or integers); nothing in
the pipeline ever rounds. See the C++ headers for the full API.
"""

from ._core import (
    Algebra,
    CapError,
    Pair,
    ParseError,
    ValidationError,
    algebra,
    audit,
    boundary,
    builtin_names,
    cohomology,
    homology,
    rho_terms,
    serialize,
    verify,
)

__all__ = [
    "Algebra",
    "CapError",
    "Pair",
    "ParseError",
    "ValidationError",
    "algebra",
    "audit",
    "boundary",
    "builtin_names",
    "cohomology",
    "homology",
    "rho_terms",
    "serialize",
    "verify",
]
