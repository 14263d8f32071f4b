"""Bruhat atlas verification for P^{2n-1} inside the SO(2n+2) flag manifold."""

import json

from ._core import (
    DivisionByZeroError,
    MissingVariableError,
    Polynomial,
    bott_samelson_matrix,
    chart_map,
    distinguished_word,
    essential_set,
    is_reduced,
    minor,
    render_diagram,
    word_length,
)
from . import _core

__all__ = [
    "DivisionByZeroError",
    "MissingVariableError",
    "Polynomial",
    "bott_samelson_matrix",
    "chart_map",
    "distinguished_word",
    "essential_set",
    "is_reduced",
    "minor",
    "render_diagram",
    "verify_atlas",
    "verify_chart",
    "word_length",
]


def verify_chart(l, n):
    """Report for chart l at rank n, as a dict."""
    return json.loads(_core.verify_chart_json(l, n))


def verify_atlas(n, threads=1):
    """Report for all 2n charts at rank n, as a dict."""
    return json.loads(_core.verify_atlas_json(n, threads))
