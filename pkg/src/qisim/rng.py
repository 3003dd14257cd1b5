"""Seeded random streams.

Everything stochastic takes a ``numpy.random.Generator``.  Independent
per-trial or per-session streams are derived from a master seed by
counter-splitting a :class:`numpy.random.SeedSequence`, so results never
depend on the order in which trials are executed.
"""

import numpy as np


def make_rng(seed=None):
    """Return a Generator; pass-through if ``seed`` already is one."""
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def child_rng(seed, counter):
    """The ``counter``-th independent stream derived from ``seed``."""
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(int(counter),)))


def trial_streams(seed, n):
    """``n`` independent Generators derived from one master seed."""
    return [child_rng(seed, i) for i in range(n)]
