"""Affine Weyl groups, 0-Hecke algebras and Demazure operators over GF(p)."""

import json

from ._core import (
    Element,
    ParseError,
    ResourceBoundExceeded,
    enumerate_ball,
    from_word,
    graph_dot,
    positive_root_count,
    translation,
)
from ._core import check_json as _check_json
from ._core import compute_json as _compute_json

__all__ = [
    "Element",
    "ParseError",
    "ResourceBoundExceeded",
    "check",
    "compute",
    "enumerate_ball",
    "from_word",
    "graph_dot",
    "positive_root_count",
    "translation",
]


def compute(type, rank, expression, prime=3):
    """Evaluate a compute expression and return the decoded JSON result."""
    return json.loads(_compute_json(type, rank, prime, expression))


def check(type, rank, suite, prime=3, max_length=3, seed=1, samples=50):
    """Run a check suite; returns one report dict, or a list for suite="all"."""
    return json.loads(_check_json(type, rank, suite, prime, max_length, seed, samples))
