"""Python access to the harmchoice engine.

Datasets are passed as JSON or text (``a, b -> a`` lines); reports come back
as plain dicts with the same field names the command-line tool prints.
"""

import json

from . import _harmchoice
from ._harmchoice import DEFAULT_SEED, HarmchoiceError, harmful_distortion, is_inconsistent, satisfies_warp

__all__ = [
    "DEFAULT_SEED",
    "HarmchoiceError",
    "analyze",
    "census",
    "construct_inconsistent",
    "error_code",
    "generate",
    "harmful_distortion",
    "is_inconsistent",
    "load",
    "normalize_dataset",
    "run",
    "sample_census",
    "satisfies_warp",
    "sp",
]


def error_code(exc):
    """Error code name ("MissingMenu", ...) carried by a HarmchoiceError."""
    return exc.args[1] if len(exc.args) > 1 else None


def load(path):
    """Read a dataset file and return its text, ready for the other calls."""
    with open(path, encoding="utf-8") as f:
        return f.read()


def normalize_dataset(text):
    return json.loads(_harmchoice.normalize_dataset(text))


def analyze(text, workers=0):
    return json.loads(_harmchoice.analyze(text, workers))


def sp(text, method="both", workers=0):
    return json.loads(_harmchoice.sp(text, method, workers))


def census(n, workers=0):
    return json.loads(_harmchoice.census(n, workers))


def sample_census(n, samples, seed=DEFAULT_SEED, workers=0):
    return json.loads(_harmchoice.sample_census(n, samples, seed, workers))


def generate(order, *, fixed=None, cap=None, indices=None, seed=DEFAULT_SEED):
    """Dataset text for a simulated decision maker with the given base order.

    Exactly one policy: ``fixed=i``, ``cap=j`` (uniform over 0..j) or
    ``indices={("a", "b"): 1, ...}`` covering every menu with two or more items.
    """
    pairs = None if indices is None else [(list(k), v) for k, v in indices.items()]
    return _harmchoice.generate(list(order), fixed=fixed, cap=cap, indices=pairs, seed=seed)


def construct_inconsistent(k):
    return _harmchoice.construct_inconsistent(k)


def run(*args):
    """Run the command-line tool in-process; returns (status, stdout, stderr)."""
    return _harmchoice.run([str(a) for a in args])
