"""Hausdorff operators on Fock spaces.

Measures are given as built-in names ("hardy", "beta:a:b", "dirac:t",
"geom:lambda:ratio"), JSON text, or dicts following the JSON schema.
Functions are lists of Taylor coefficients.
"""

import json as _json

from . import _fockhaus
from ._fockhaus import MathError, fock_norm, function, kernel_norm, mixed_norm, monomial_norm

__all__ = [
    "MathError",
    "apply_quadrature",
    "apply_spectral",
    "classify",
    "fock_norm",
    "function",
    "kernel_norm",
    "measure_json",
    "mixed_norm",
    "moments",
    "monomial_norm",
    "smoothing",
    "summing",
    "support",
    "verify",
]


def _spec(measure):
    if isinstance(measure, dict):
        return _json.dumps(measure)
    return measure


def moments(measure, count):
    return _fockhaus.moments(_spec(measure), count)


def support(measure):
    return _fockhaus.support(_spec(measure))


def measure_json(measure):
    return _json.loads(_fockhaus.measure_json(_spec(measure)))


def apply_spectral(measure, coeffs):
    return _fockhaus.apply_spectral(_spec(measure), list(coeffs))


def apply_quadrature(measure, coeffs, points):
    return _fockhaus.apply_quadrature(_spec(measure), list(coeffs), list(points))


def classify(measure, p=2.0, q=2.0, alpha=1.0):
    return _json.loads(_fockhaus.classify_json(_spec(measure), p, q, alpha))


def smoothing(measure, p, q, alpha=1.0):
    return _json.loads(_fockhaus.smoothing_json(_spec(measure), p, q, alpha))


def summing(measure, p, q):
    return _json.loads(_fockhaus.summing_json(_spec(measure), p, q))


def verify(suite="examples", seed=42):
    """Rows of the verification CSV as dicts."""
    lines = _fockhaus.verify_csv(suite, seed).strip().splitlines()
    header = lines[0].split(",")
    return [dict(zip(header, line.split(","))) for line in lines[1:]]
