"""Betti numbers and face counts of minimal wonderful models for G(r,p,n)."""

import json
from fractions import Fraction

from ._core import GuardError, IntegralityError, building_set, nested_set_count
from . import _core

__all__ = [
    "GuardError",
    "IntegralityError",
    "building_set",
    "nested_set_count",
    "poincare",
    "poincare_report",
    "fvector",
    "euler",
    "series",
    "kirkman_cayley",
    "count_plane_trees",
    "run_acceptance",
]


def _int(v):
    return int(v) if isinstance(v, str) else v


def poincare_report(r, p, n, method="series", guard=5000):
    report = json.loads(_core.poincare_json(r, p, n, method, guard))
    report["poincare"] = [[k, _int(c)] for k, c in report["poincare"]]
    return report


def poincare(r, p, n, method="series", guard=5000):
    """Dense coefficient list of the Poincare polynomial, lowest degree first."""
    pairs = poincare_report(r, p, n, method, guard)["poincare"]
    out = [0] * (pairs[-1][0] + 1)
    for k, c in pairs:
        out[k] = c
    return out


def fvector(type, n, method="series"):
    report = json.loads(_core.fvector_json(type, n, method))
    return [_int(v) for v in report["fvector"]]


def euler(type, n, method="series"):
    return _int(json.loads(_core.euler_json(type, n, method)))


def series(name, trunc, r=1, reading="standard"):
    """Terms as {(q, t, z, w): Fraction}."""
    dump = json.loads(_core.series_json(name, trunc, r, reading))
    return {
        (t["q"], t["t"], t["z"], t["w"]): Fraction(_int(t["numerator"]), _int(t["denominator"]))
        for t in dump["terms"]
    }


def kirkman_cayley(n, s):
    return int(_core.kirkman_cayley(n, s))


def count_plane_trees(n, s):
    return int(_core.count_plane_trees(n, s))


def run_acceptance():
    return [_core.run_criterion(i) for i in range(1, _core.criterion_count() + 1)]
