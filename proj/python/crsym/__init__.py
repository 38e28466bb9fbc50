"""Exact invariants of 2-nondegenerate CR symbols.

Symbols and candidates are plain dicts in the same JSON layout the ``crsym``
command line reads; a builtin id ("eg1", "eg2", "eg3") may be passed instead.
"""

import json

from . import _crsym
from ._crsym import ParseError

__all__ = [
    "ParseError",
    "analyze",
    "builtin",
    "builtin_ids",
    "conjugate",
    "prolong",
    "run_cli",
    "scan",
    "verify",
]


def _arg(target):
    return json.dumps(target)


def builtin_ids():
    return list(_crsym.builtin_ids())


def builtin(example_id):
    """Symbol and reduced candidate of a builtin example."""
    return json.loads(_crsym.builtin(example_id))


def verify(example_id):
    return json.loads(_crsym.verify(example_id))


def analyze(target):
    return json.loads(_crsym.analyze(_arg(target)))


def prolong(target, reduced=False, max_degree=10):
    """Tanaka prolongation of the full g0 of a symbol, or of a candidate when reduced."""
    return json.loads(_crsym.prolong(_arg(target), reduced, max_degree))


def conjugate(candidate, dilation):
    """Block dilation of a candidate; dilation is a scalar string such as "2" or "i/sqrt2"."""
    return json.loads(_crsym.conjugate(_arg(candidate), str(dilation)))


def scan(m=3, r=1, signature=(3, 0), mode="dense", trials=100, seed=0, bound=20, workers=1):
    p, q = signature
    return json.loads(_crsym.scan(m, r, p, q, mode, trials, seed, bound, workers))


def run_cli(*args):
    """Runs the command line in process; returns (exit_code, stdout, stderr)."""
    return _crsym.run_cli([str(a) for a in args])
