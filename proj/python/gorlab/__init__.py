"""Exact Cohen-Macaulay/Gorenstein analysis of graded rings.

The heavy lifting happens in the C++ extension `_gorlab`; this package wraps
its JSON-string API into plain dictionaries.
"""

import json as _json

try:
    from ._gorlab import (  # noqa: F401
        ConsistencyError,
        GorlabInputError,
        Ring as _Ring,
        StabilizationError,
        __version__,
    )
except ImportError:  # in-tree builds put the extension on PYTHONPATH instead
    from _gorlab import (  # noqa: F401
        ConsistencyError,
        GorlabInputError,
        Ring as _Ring,
        StabilizationError,
        __version__,
    )


def _spec_text(spec):
    if isinstance(spec, str):
        return spec
    return _json.dumps(spec)


class Ring:
    """A standard graded algebra k[x_1..x_n]/I with I homogeneous.

    `spec` is either a dict or a JSON string:
        {"field": "Q" | {"Fp": p}, "vars": [...], "degrees": [...], "ideal": [...]}
    """

    def __init__(self, spec):
        self._ring = _Ring(_spec_text(spec))

    def analyze(self, seed=42, window=2, max_steps=10):
        return _json.loads(self._ring.analyze_json(seed, window, max_steps))

    def sweep(self, sop, max_n=6, seed=42, window=2, max_steps=10):
        return _json.loads(self._ring.sweep_json(sop, max_n, seed, window, max_steps))

    def theorem_check(self, samples=20, seed=42, window=2, max_steps=10):
        return _json.loads(self._ring.theorem_json(samples, seed, window, max_steps))

    def corollary_search(self, max_power=4, samples=20, seed=42, window=2, max_steps=10):
        return _json.loads(
            self._ring.corollary_json(max_power, samples, seed, window, max_steps)
        )

    def __getattr__(self, name):
        return getattr(self._ring, name)


def analyze(spec, **kw):
    return Ring(spec).analyze(**kw)


def sweep(spec, sop, **kw):
    return Ring(spec).sweep(sop, **kw)


def theorem_check(spec, **kw):
    return Ring(spec).theorem_check(**kw)


def corollary_search(spec, **kw):
    return Ring(spec).corollary_search(**kw)
