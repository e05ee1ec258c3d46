"""Recognize distance matrices of weighted hypercubes, Q3, the Petersen graph and trees."""

import json

from ._metrec import (
    MetrecError,
    OrderError,
    ParseError,
    TriangleViolation,
    bench,
    canonical,
    generate,
    indecomposable_pairs,
)
from ._metrec import recognize as _recognize

__all__ = [
    "MetrecError",
    "OrderError",
    "ParseError",
    "TriangleViolation",
    "bench",
    "canonical",
    "generate",
    "indecomposable_pairs",
    "recognize",
]


def recognize(text, family="auto", method="count", format="text", mode="exact", eps=1e-9):
    """Return the list of verdict dicts for a matrix given as text."""
    return json.loads(_recognize(text, family, method, format, mode, eps))
