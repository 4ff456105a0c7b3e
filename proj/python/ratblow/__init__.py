"""Donaldson and Seiberg-Witten series under rational blowdown."""

import json
from fractions import Fraction

from . import _core
from ._core import Error, ParseError, SpecError

__all__ = [
    "Error", "ParseError", "SpecError", "series", "sw", "witten", "dim",
    "verify_bv_lemmas", "plumbing_inverse", "formal_log_coefficients", "catalog_specs",
]


def series(spec, pipeline=False):
    return json.loads(_core.series(spec, pipeline))


def sw(spec):
    return json.loads(_core.sw(spec))


def witten(spec):
    return json.loads(_core.witten(spec))


def dim(p, coords, basis="delta"):
    return json.loads(_core.dim(p, list(coords), basis))


def verify_bv_lemmas(p, t_max=2, box=4):
    return json.loads(_core.verify_bv_lemmas(p, t_max, box))


def plumbing_inverse(p):
    """Inverse of the chain plumbing matrix as rows of Fractions."""
    return [[Fraction(x) for x in row] for row in json.loads(_core.plumbing_inverse(p))]


def formal_log_coefficients(p):
    return [(t["exponent"], Fraction(t["coeff"])) for t in json.loads(_core.formal_log_coefficients(p))]


def catalog_specs():
    return list(_core.catalog_specs())
