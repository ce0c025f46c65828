"""Directed minimum 0-extension: classification, solving, hardness gadgets.

Thin dict-level wrappers around the compiled core. Rationals travel as
strings ("p" or "p/q") so nothing is ever rounded through a float.
"""

import json as _json

from . import _core

Error = _core.Error


def classify(metric):
    """Structural verdict for a metric dict: outcome, witness, trace."""
    return _json.loads(_core.classify_json(_json.dumps(metric)))


def solve(instance, method="auto"):
    """Optimize an instance dict. method is "auto", "brute" or "blp"."""
    return _json.loads(_core.solve_json(_json.dumps(instance), method))


def gadget(metric, case="auto"):
    """Build and verify a hardness gadget for an NP-hard metric."""
    return _json.loads(_core.gadget_json(_json.dumps(metric), case))


def reduce_maxcut(metric, graph, k, check=False):
    """Compose the max-cut decision instance for cut threshold k."""
    return _json.loads(
        _core.reduce_json(_json.dumps(metric), _json.dumps(graph), k, check)
    )


def verify_polymorphism(metric):
    """Construct the tractability certificate and run the checker."""
    return _json.loads(_core.verify_polymorphism_json(_json.dumps(metric)))


__all__ = [
    "Error",
    "classify",
    "solve",
    "gadget",
    "reduce_maxcut",
    "verify_polymorphism",
]
