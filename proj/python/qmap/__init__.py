"""Exact vertex functions of zero-dimensional A-type quiver varieties.

Series come back as dicts mapping an exponent tuple ((i, d_i), ...) to a
Fraction (specialized) or a coefficient string (symbolic).
"""
import json
from fractions import Fraction

from . import _core
from ._core import QmapError, default_points, suite_names

__all__ = ["QmapError", "anvertex", "default_points", "mirror", "suite_names", "verify", "zfun"]


def _series(text, exact=True):
    out = {}
    for term in json.loads(text)["terms"]:
        key = tuple(sorted((int(i), d) for i, d in term["z"].items()))
        out[key] = Fraction(term["coeff"]) if exact else term["coeff"]
    return out


def zfun(parts, degree, route="product", hbar="2/3", q="1/5", symbolic=False):
    parts = list(parts)
    if symbolic:
        return _series(_core.zfun_symbolic(parts, degree, route), exact=False)
    return _series(_core.zfun(parts, degree, route, str(hbar), str(q)))


def verify(suite, **options):
    if "points" in options:
        options["points"] = [[str(h), str(q)] for h, q in options["points"]]
    return json.loads(_core.verify(suite, json.dumps(options)))


def anvertex(fixed_point, order, degree=2, hbar="2/3", q="1/5", oracle=False):
    if not isinstance(fixed_point, str):
        fixed_point = json.dumps(fixed_point)
    raw = json.loads(_core.anvertex(fixed_point, list(order), degree, str(hbar), str(q), oracle))
    return {k: _series(json.dumps(v)) for k, v in raw.items()}


def mirror(fixed_point):
    if not isinstance(fixed_point, str):
        fixed_point = json.dumps(fixed_point)
    return _core.mirror(fixed_point)
