"""JSON encoding of rationals and polyhedra."""
from __future__ import annotations

import json
from fractions import Fraction

from ..errors import InputError
from .linalg import frac


def rat_str(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_rat(s) -> Fraction:
    if isinstance(s, bool) or isinstance(s, float):
        raise InputError(f"rational must be a string or integer, got {s!r}")
    try:
        return frac(s)
    except (ValueError, ZeroDivisionError, TypeError) as e:
        raise InputError(f"bad rational {s!r}") from e


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def polyhedron_to_json(P, vrep=None) -> dict:
    """V-rep for bounded polytopes (unless vrep=False), H-rep otherwise."""
    if vrep is None:
        vrep = P.bounded
    if vrep and not P.is_empty:
        return {"ambient": P.ambient, "vertices": [[rat_str(x) for x in v] for v in P.vertices]}
    if P.is_empty:
        return {"ambient": P.ambient, "empty": True}
    return {
        "ambient": P.ambient,
        "ineq": [{"a": [rat_str(x) for x in a], "b": rat_str(b)} for a, b in P.ineqs],
        "eq": [{"a": [rat_str(x) for x in a], "b": rat_str(b)} for a, b in P.eqs],
        "bounded": P.bounded,
    }


def polyhedron_from_json(d):
    from .polyhedron import Polyhedron

    if not isinstance(d, dict) or "ambient" not in d:
        raise InputError("polyhedron JSON needs an 'ambient' field")
    n = d["ambient"]
    if not isinstance(n, int) or n < 0:
        raise InputError("ambient must be a nonnegative integer")
    if d.get("empty"):
        return Polyhedron.empty(n)
    if "vertices" in d:
        pts = [[parse_rat(x) for x in v] for v in d["vertices"]]
        if any(len(p) != n for p in pts):
            raise InputError("vertex length differs from ambient")
        if not pts:
            return Polyhedron.empty(n)
        return Polyhedron.from_vertices(pts)

    def rows(key):
        out = []
        for r in d.get(key, []):
            a = [parse_rat(x) for x in r["a"]]
            if len(a) != n:
                raise InputError("constraint length differs from ambient")
            out.append((a, parse_rat(r["b"])))
        return out

    return Polyhedron.from_hrep(rows("ineq"), rows("eq"), ambient=n, bounded=d.get("bounded"))
