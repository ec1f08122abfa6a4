"""Brute-force graded classification written against the axioms directly.

Shares no code with the package: vectors are plain dicts of sympy
expressions, f(0) is a sympy symbol, and every assignment of f on the
nonzero window indices to {0, -1} is tested against both axioms on every
triple whose f-arguments stay inside the window.
"""

from itertools import product

import sympy

T = sympy.Symbol("t")


def _add(out, vec, scale=1):
    for k, c in vec.items():
        out[k] = out.get(k, 0) + scale * c


def _bracket(u, v):
    out = {}
    for i, c in u.items():
        for j, d in v.items():
            _add(out, {i + j: (i - j) * c * d})
    return out


def _make_circ(f):
    def circ(u, v):
        out = {}
        for i, c in u.items():
            for j, d in v.items():
                _add(out, {i + j: (i - j) * f[i] * c * d})
        return out
    return circ


def _conditions(f, w):
    circ = _make_circ(f)
    conds = set()
    for m, n, p in product(w, w, w):
        if m + n not in w:
            continue
        x, y, z = {m: 1}, {n: 1}, {p: 1}
        # [x, y] o z = x o (y o z) - y o (x o z) - <x, y> o z
        ang = circ(x, y)
        _add(ang, circ(y, x), -1)
        r = {}
        _add(r, circ(_bracket(x, y), z))
        _add(r, circ(x, circ(y, z)), -1)
        _add(r, circ(y, circ(x, z)))
        _add(r, circ(ang, z))
        # x o [y, z] = [x o y, z] + [y, x o z]
        s = {}
        _add(s, circ(x, _bracket(y, z)))
        _add(s, _bracket(circ(x, y), z), -1)
        _add(s, _bracket(y, circ(x, z)), -1)
        for vec in (r, s):
            for c in vec.values():
                e = sympy.expand(c)
                if e != 0:
                    conds.add(e)
    return conds


def brute_force_graded(lo, hi):
    """Set of (assignment on nonzero indices, f(0) constraint) pairs.

    The constraint is "free" or a sympy Rational.
    """
    w = range(lo, hi + 1)
    idx = [m for m in w if m != 0]
    found = set()
    for bits in product((0, -1), repeat=len(idx)):
        f = dict(zip(idx, bits))
        f[0] = T
        conds = _conditions(f, w)
        if not conds:
            found.add((tuple(zip(idx, bits)), "free"))
            continue
        if any(c.is_number for c in conds):
            continue
        sols = sympy.solve(list(conds), T, dict=True)
        for s in sols:
            found.add((tuple(zip(idx, bits)), sympy.Rational(s[T])))
    return found
