"""Exact commutative-algebra kernel for pairs of codimension-two planes."""

import json as _json

from ._core import (
    DomainError,
    Error,
    Ideal,
    ParseError,
    canonical_class,
    chamber,
    classify,
    fixture,
    fixture_ids,
    hilbert_function,
    hilbert_series,
    intersect,
    is_fano,
    is_flat,
    limit_ideal,
    normal_form_ideal,
    pn_reference,
    quotient,
    random_linear_change,
    saturate,
    saturate_irrelevant,
    tangent_dimension,
    verify_json,
)


def verify(n_min=3, n_max=5, seed=1):
    """Run the check battery and return the report as a dict."""
    return _json.loads(verify_json(n_min, n_max, seed))


__all__ = [name for name in dir() if not name.startswith("_")]
