"""Exact computations in finite group-graded rings.

Thin dict-level wrappers around the compiled ``_core`` module, which speaks
JSON text. Reports have the same shape as the ``gradering`` CLI's output.
"""

import json

from gradering import _core

__all__ = [
    "validate",
    "classify",
    "construct",
    "verify",
    "search",
    "corpus",
    "audit",
]


def validate(obj, max_order=0):
    """Validate a ring or graded-ring document (a dict); returns a report."""
    return json.loads(_core.validate(json.dumps(obj), max_order))


def classify(obj, max_order=0, lattice_cap=0):
    """Decide every predicate for a graded ring, symbolic ring, or witness
    bundle given as a dict."""
    return json.loads(_core.classify(json.dumps(obj), max_order, lattice_cap))


def construct(spec, max_order=0):
    """Build a ring from a construction spec dict; returns the ring dict."""
    return json.loads(_core.construct(json.dumps(spec), max_order))


def verify(theorem="all", max_order=0, workers=0, timings=False):
    """Evaluate registered statements over the default corpus."""
    return json.loads(_core.verify(theorem, max_order, workers, timings))


def search(hypothesis, conclusion, max_order=0, workers=0):
    """Hunt for a counterexample to a predicate implication."""
    return json.loads(_core.search(hypothesis, conclusion, max_order, workers))


def corpus(max_order=0):
    """Build the default corpus and list its instances."""
    return json.loads(_core.corpus(max_order))


def audit(example, max_order=0):
    """Re-derive a worked example ("e4.3" or "e3.3") and compare with the
    recorded claim."""
    return json.loads(_core.audit(example, max_order))
