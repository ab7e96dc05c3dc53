"""Python bindings for the glauber C++ library.

Models are plain dicts such as ``{"family": "rc", "q": 2.0, "mu": 1.0}``.
Report-producing functions return dicts decoded from the library's JSON reports.
"""

import json as _json

from . import _glauber
from ._glauber import CapExceeded, Graph, ModelError, ParseError, load_graph, parse_graph

__all__ = [
    "CapExceeded",
    "Graph",
    "ModelError",
    "ParseError",
    "check_multiplicativity",
    "congestion",
    "lambda_of",
    "load_graph",
    "log_partition",
    "log_weight",
    "mixing",
    "parse_graph",
    "sample",
    "stationary",
    "width",
]


def _spec(model):
    return model if isinstance(model, str) else _json.dumps(model)


def lambda_of(model):
    """Return (lambda, lambda_hat) for a model."""
    return _glauber.lambda_of(_spec(model))


def log_weight(graph, model, members):
    return _glauber.log_weight(graph, _spec(model), list(members))


def log_partition(graph, model):
    return _glauber.log_partition(graph, _spec(model))


def stationary(graph, model):
    return _glauber.stationary(graph, _spec(model))


def sample(graph, model, steps, seed=0, burn_in=None, thin=1):
    return _glauber.sample(graph, _spec(model), steps, seed, burn_in, thin)


def width(graph, kind="edge", ordering="exact"):
    return _json.loads(_glauber.width(graph, kind, ordering))


def congestion(graph, model, ordering="exact"):
    return _json.loads(_glauber.congestion(graph, _spec(model), ordering))


def mixing(graph, model, epsilon=0.01, ordering="exact"):
    return _json.loads(_glauber.mixing(graph, _spec(model), epsilon, ordering))


def check_multiplicativity(graph, model, lam=None):
    return _json.loads(_glauber.check_multiplicativity(graph, _spec(model), lam))
