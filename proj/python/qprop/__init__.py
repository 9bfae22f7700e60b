"""Spans of finite sets, power operations, and bialgebra evaluation.

Dict-based wrappers around the compiled core.  Structured values are plain
Python dicts and lists in the same JSON schemas the command-line tool reads
and writes; permutations are one-line notation strings such as ``"2 1 3"``.
An algebra argument is either a builtin name (see :func:`builtin_names`) or
a dict of structure constants.
"""

import json as _json

from qprop import _core
from qprop._core import builtin_names, check, acceptance, phi

__all__ = [
    "acceptance",
    "axioms",
    "bialgebra",
    "builtin_names",
    "check",
    "compose",
    "decode",
    "encode",
    "eval_span",
    "phi",
    "psi",
]


def _text(value):
    return value if isinstance(value, str) else _json.dumps(value)


def bialgebra(algebra):
    """Structure constants of an algebra."""
    return _json.loads(_core.bialgebra(_text(algebra)))


def axioms(algebra):
    """Verified axiom flags of an algebra."""
    return _core.axioms(_text(algebra))


def compose(cat, a, b, operad="as"):
    """Compose two morphisms in the named category (``b`` after ``a``).

    Categories: ``fas`` (maps with ordered fibers), ``f`` (plain maps),
    ``q-fas``/``q-f``/``q-fas1``/``q-fas2`` (spans), ``mon`` (word tuples),
    ``fp`` (twisted maps over the ``as`` or ``com`` operad).
    """
    return _json.loads(_core.compose(cat, _text(a), _text(b), operad))


def psi(algebra, n, sigma=""):
    """Matrix of a power operation, entries as rational strings."""
    return _json.loads(_core.psi(_text(algebra), n, sigma))


def eval_span(algebra, span):
    """Evaluate a span on an algebra; returns the matrix dict."""
    return _json.loads(_core.eval_span(_text(algebra), _text(span)))


def encode(scheme, value):
    """Encode a span (``matrix``, ``words``, ``qfas``) or a word (``shuffle``)."""
    return _json.loads(_core.encode(scheme, _text(value)))


def decode(scheme, value):
    """Decode an encoding back to a span (or word)."""
    return _json.loads(_core.decode(scheme, _text(value)))
