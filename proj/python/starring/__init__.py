"""Finite rings with involution: projections, classification, theorem checks.

Rings are given as ringspec source text, e.g. ``"ring A = mat(2, zmod(3))"``.
With several definitions, ``ring=`` picks one; the last is used otherwise.
"""

import json

from . import _starring
from ._starring import DEFAULT_BOUND, StarringError, format_ringspec, run_cli, theorem_ids

__all__ = [
    "DEFAULT_BOUND",
    "StarringError",
    "c031_table",
    "classify",
    "cover",
    "format_ringspec",
    "projections",
    "run_cli",
    "search_nonunital",
    "theorem_ids",
    "unitify_check",
    "validate",
    "verify",
]


def classify(source, ring=None, bound=DEFAULT_BOUND, full_witnesses=False):
    return json.loads(_starring.classify(source, ring, bound, full_witnesses))


def verify(source, ring=None, theorem="all", bound=DEFAULT_BOUND):
    return json.loads(_starring.verify(source, ring, theorem, bound))


def projections(source, ring=None, bound=DEFAULT_BOUND):
    return json.loads(_starring.projections(source, ring, bound))


def cover(source, element, ring=None, bound=DEFAULT_BOUND):
    return json.loads(_starring.cover(source, element, ring, bound))


def validate(source, ring=None, bound=DEFAULT_BOUND):
    return json.loads(_starring.validate(source, ring, bound))


def unitify_check(source, ring=None, bound=DEFAULT_BOUND):
    return json.loads(_starring.unitify_check(source, ring, bound))


def c031_table(n_max=2, m_max=12, bound=DEFAULT_BOUND):
    return json.loads(_starring.c031_table(n_max, m_max, bound))


def search_nonunital(order_max=16):
    return json.loads(_starring.search_nonunital(order_max))
