"""Python bindings for the netop library."""

import json

from ._netop import (
    NetopError,
    PetriNet,
    block_swap,
    cli,
    compose_permutations,
    normalize,
    run_suite,
    words_equal,
)
from . import _netop

__all__ = [
    "NetopError",
    "PetriNet",
    "act",
    "block_swap",
    "cli",
    "compose_permutations",
    "normalize",
    "run_suite",
    "words_equal",
]


def act(operation, args, model="sg"):
    """Act with an operation (dict with "profile", "sigma", "g") on network dicts."""
    out = _netop._act(json.dumps(operation), json.dumps(model), [json.dumps(a) for a in args])
    return json.loads(out)
