"""Exact sum-sets, ratio-sets and sum-division checks for finite sets of
positive rationals.

Elements may be given as ints, ``fractions.Fraction``, finite-decimal floats
or strings such as ``"3/4"``; results come back as ``Fraction`` values.
"""

import json
from fractions import Fraction

from . import _core
from ._core import CapExceeded, InputError, InvariantViolation

__all__ = [
    "CapExceeded",
    "InputError",
    "InvariantViolation",
    "beta_constant",
    "farey_set",
    "farey_size",
    "farey_statistics",
    "geometric_set",
    "grid_sumset_size",
    "interval_set",
    "make_set",
    "mult_table_count",
    "productset",
    "rad_ang_sizes",
    "random_set",
    "ratio_spectrum",
    "ratioset",
    "ray_certificate",
    "search",
    "square_set",
    "sumset",
    "threshold_index",
    "verify",
]


def _texts(values):
    return [str(v) for v in values]


def _fractions(texts):
    return [Fraction(t) for t in texts]


def make_set(values):
    return _fractions(_core.make_set(_texts(values)))


def sumset(a, b=None, pair_cap=None):
    return _fractions(_core.sumset(_texts(a), _texts(a if b is None else b), pair_cap))


def productset(a, b=None, pair_cap=None):
    return _fractions(_core.productset(_texts(a), _texts(a if b is None else b), pair_cap))


def ratioset(a, b=None, pair_cap=None):
    return _fractions(_core.ratioset(_texts(a), _texts(a if b is None else b), pair_cap))


def square_set(a):
    return _fractions(_core.square_set(_texts(a)))


def grid_sumset_size(a, pair_cap=None):
    return _core.grid_sumset_size(_texts(a), pair_cap)


def rad_ang_sizes(a):
    return _core.rad_ang_sizes(_texts(a))


def ratio_spectrum(a):
    """[(ratio, multiplicity)] sorted by multiplicity, then ratio."""
    return [(Fraction(r), m) for r, m in _core.ratio_spectrum(_texts(a))]


def threshold_index(a):
    return _core.threshold_index(_texts(a))


def verify(a, precision=15):
    """Verification report with the same fields as ``sumdiv verify``."""
    return json.loads(_core.verify_json(_texts(a), precision))


def ray_certificate(a, from_index=None):
    return json.loads(_core.ray_certificate_json(_texts(a), from_index))


def interval_set(n):
    return _fractions(_core.interval_set(n))


def geometric_set(ratio, n):
    return _fractions(_core.geometric_set(str(ratio), n))


def farey_set(n):
    return _fractions(_core.farey_set(n))


def random_set(n, bound, seed):
    return _fractions(_core.random_set(n, bound, seed))


def farey_size(n):
    return _core.farey_size(n)


def farey_statistics(n):
    return json.loads(_core.farey_statistics_json(n))


def mult_table_count(n):
    return _core.mult_table_count(n)


def beta_constant():
    return _core.beta_constant()


def search(objective="J", mode="exhaustive", size=3, universe=12, seed=0, iterations=1000, bound=32):
    return json.loads(_core.search_json(objective, mode, size, universe, seed, iterations, bound))
