"""Desk-scale rediscovery of the graded and shifting classifications.

Graded: every assignment f: w minus {0} -> {0, -1} is tried, with f(0) kept as
an unknown.  The functional equation on pairs with m, n, m + n in w is affine
in f(0), so each assignment yields either no solution, one value of f(0), or a
free f(0).

Shifting: for a fixed graded family f and shift nu, the linear equation in g
gives a homogeneous system over the window.  Its nullspace is computed by
fraction-free elimination and then cut down by the quadratic equation in g.
Families whose f(0) is a free parameter are eliminated over Q[t] with
t = f(0); the values of t where the answer can change are the rational roots
of the last pivot and of the quadratic filter, and each is re-solved exactly.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product as iproduct
from math import gcd

import sympy

from .catalog import GRADED_F, _SHIFTING_TABLE, canonical_name
from .errors import (
    AmbiguousMatchError,
    ContractError,
    NuZeroError,
    WindowTooLargeError,
    WindowTooSmallError,
)
from .exact_arith import format_rational
from .verify import Window

DEFAULT_BUDGET = 2**24
FREE = "free"


# -- result types -------------------------------------------------------------

@dataclass(frozen=True)
class GradedSolution:
    """f on the nonzero window indices plus the constraint on f(0).

    ``f0_constraint`` is ``"free"`` or an exact rational.
    """

    f_values: tuple  # ((m, value), ...) sorted by m, m != 0
    f0_constraint: object

    def values(self) -> dict:
        return dict(self.f_values)

    def sort_key(self):
        f0 = (0, 0) if self.f0_constraint == FREE else (1, self.f0_constraint)
        return (tuple(v for _, v in self.f_values), f0)

    def to_json(self) -> dict:
        f0 = self.f0_constraint
        return {"f": {str(m): int(v) for m, v in self.f_values},
                "f0": f0 if f0 == FREE else format_rational(f0)}


@dataclass(frozen=True)
class ShiftingRay:
    """g = b * gamma on the window, for a free nonzero b.

    ``f0`` is None when the family fixes f(0), ``"free"`` when the ray exists
    for every f(0), and otherwise the value of f(0) it needs.
    """

    family: str
    nu: int
    gamma: tuple  # ((m, Fraction), ...) on the support, first entry 1
    nullspace_dim: int
    f0: object = None
    flags: tuple = ()

    def support(self) -> tuple:
        return tuple(m for m, _ in self.gamma)

    def as_dict(self) -> dict:
        return dict(self.gamma)

    def sort_key(self):
        f0 = (0, 0) if self.f0 in (None, FREE) else (1, self.f0)
        return (f0, self.support(), tuple(v for _, v in self.gamma))

    def to_json(self) -> dict:
        out = {"family": self.family, "nu": self.nu,
               "gamma": {str(m): format_rational(v) for m, v in self.gamma},
               "nullspace_dim": self.nullspace_dim}
        if self.f0 is not None:
            out["f0"] = self.f0 if self.f0 == FREE else format_rational(self.f0)
        if self.flags:
            out["flags"] = list(self.flags)
        return out


@dataclass
class ClassificationReport:
    window: Window
    kind: str
    solutions: list = field(default_factory=list)
    matched_catalog: list = field(default_factory=list)
    flags: list = field(default_factory=list)
    family: str | None = None
    nu: int | None = None

    def matched_names(self) -> set:
        return {m for m in self.matched_catalog if m != "unmatched" and not m.startswith("ambiguous")}

    def unmatched(self) -> list:
        return [s for s, m in zip(self.solutions, self.matched_catalog) if m == "unmatched"]

    def payload(self) -> dict:
        return {
            "kind": self.kind,
            "window": [self.window.lo, self.window.hi],
            "family": self.family,
            "nu": self.nu,
            "solutions": [dict(s.to_json(), match=m) for s, m in zip(self.solutions, self.matched_catalog)],
            "flags": list(self.flags),
        }

    @property
    def oracle_digest(self) -> str:
        """SHA-256 of the canonical JSON of the solution list."""
        blob = json.dumps(self.payload()["solutions"], sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(blob.encode()).hexdigest()

    def to_json(self) -> dict:
        out = self.payload()
        out["solution_count"] = len(self.solutions)
        out["oracle_digest"] = self.oracle_digest
        return out


# -- graded -------------------------------------------------------------------

def _family_f0(name: str):
    """f(0) of a graded family: a rational, or FREE for the a-families."""
    v = GRADED_F[name](0)
    return FREE if v.params() else v.constant_value()


def _family_int(name: str, m: int) -> int:
    return int(GRADED_F[name](m).constant_value())


def classify_graded(w, budget: int = DEFAULT_BUDGET) -> ClassificationReport:
    w = Window.coerce(w)
    if 0 not in w:
        raise ContractError("the graded classification needs a window containing 0")
    idx = [m for m in w if m != 0]
    size = 2 ** len(idx)
    if size > budget:
        raise WindowTooLargeError(f"2^{len(idx)} = {size} assignments exceed the budget {budget}")
    pairs = [(m, n) for m, n in iproduct(w, w) if m != n and (m + n) in w]
    rep = ClassificationReport(w, "graded")
    sols = []
    for bits in iproduct((0, -1), repeat=len(idx)):
        f = dict(zip(idx, bits))
        sol = _solve_f0(f, pairs)
        if sol is not None:
            sols.append(GradedSolution(tuple(sorted(f.items())), sol))
    sols.sort(key=GradedSolution.sort_key)
    rep.solutions = sols
    for s in sols:
        rep.matched_catalog.append(_safe_match(s, w))
    return rep


def _solve_f0(f: dict, pairs):
    """Solve the affine constraints c1 * f(0) + c0 = 0; None if inconsistent."""
    value = None
    pending = []
    for m, n in pairs:
        # Each term is affine in x = f(0): represent as (c1, c0).
        fm = (1, 0) if m == 0 else (0, f[m])
        fn = (1, 0) if n == 0 else (0, f[n])
        s = m + n
        fs = (1, 0) if s == 0 else (0, f[s])
        c1, c0 = _affine_residual(fm, fn, fs)
        if c1 == 0:
            if c0 != 0:
                return None
        else:
            pending.append((c1, c0))
    for c1, c0 in pending:
        x = Fraction(-c0, c1)
        if value is None:
            value = x
        elif value != x:
            return None
    return FREE if value is None else value


def _affine_residual(fm, fn, fs):
    """f(s) + f(m) f(s) + f(n) f(s) - f(m) f(n) as (c1, c0); never quadratic here."""

    def mul(p, q):
        (a1, a0), (b1, b0) = p, q
        if a1 and b1:
            raise AssertionError("f(0) appears twice in one product")
        return (a1 * b0 + a0 * b1, a0 * b0)

    terms = [fs, mul(fm, fs), mul(fn, fs)]
    neg = mul(fm, fn)
    return (sum(t[0] for t in terms) - neg[0], sum(t[1] for t in terms) - neg[1])


def _graded_candidates(sol: GradedSolution):
    vals = sol.values()
    hits = []
    for name in GRADED_F:
        if all(_family_int(name, m) == v for m, v in vals.items()):
            fam0 = _family_f0(name)
            if fam0 == FREE or sol.f0_constraint == FREE or fam0 == sol.f0_constraint:
                hits.append(name)
    return hits


def _ray_candidates(ray: ShiftingRay, w: Window):
    hits = []
    gam = ray.as_dict()
    for name, (f, gfun, nus, family) in _SHIFTING_TABLE.items():
        if family != ray.family or ray.nu not in nus:
            continue
        # The a-families host two rows each, told apart by f(0).
        if ray.f0 is not None:
            need = f(0).constant_value()
            if ray.f0 != FREE and ray.f0 != need:
                continue
        g = gfun(ray.nu)
        cat = {m: g(m).subs({"b": -1}).constant_value() for m in w}
        cat = {m: v for m, v in cat.items() if v}
        if cat and _proportional(cat, gam):
            hits.append(name)
    return hits


def _proportional(u: dict, v: dict) -> bool:
    if set(u) != set(v):
        return False
    k = min(u)
    r = u[k] / v[k]
    return all(u[m] == r * v[m] for m in u)


def match_catalog(sol, w) -> str:
    """Catalog name whose restriction to ``w`` equals ``sol``; "unmatched" if none."""
    w = Window.coerce(w)
    hits = _graded_candidates(sol) if isinstance(sol, GradedSolution) else _ray_candidates(sol, w)
    if not hits:
        return "unmatched"
    if len(hits) > 1:
        raise AmbiguousMatchError(f"restrictions to {w} coincide for {', '.join(hits)}")
    return hits[0]


def _safe_match(sol, w) -> str:
    try:
        return match_catalog(sol, w)
    except AmbiguousMatchError:
        hits = _graded_candidates(sol) if isinstance(sol, GradedSolution) else _ray_candidates(sol, w)
        return "ambiguous:" + ",".join(hits)


# -- fraction-free elimination --------------------------------------------------

class _IntRing:
    zero, one = 0, 1

    @staticmethod
    def is_zero(x):
        return x == 0

    @staticmethod
    def exquo(x, y):
        q, r = divmod(x, y)
        if r:
            raise ArithmeticError("inexact division in fraction-free elimination")
        return q

    @staticmethod
    def size(x):
        return abs(x)


class ZPoly:
    """Univariate polynomial over Z, coefficients low degree first, no trailing zeros."""

    __slots__ = ("c",)

    def __init__(self, coeffs=()):
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        self.c = tuple(c)

    @property
    def is_zero(self):
        return not self.c

    def degree(self):
        return len(self.c) - 1

    def __add__(self, o):
        o = _zp(o)
        n = max(len(self.c), len(o.c))
        return ZPoly((self.c[i] if i < len(self.c) else 0) + (o.c[i] if i < len(o.c) else 0) for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return ZPoly(-x for x in self.c)

    def __sub__(self, o):
        return self + (-_zp(o))

    def __rsub__(self, o):
        return _zp(o) - self

    def __mul__(self, o):
        if isinstance(o, int):
            return ZPoly(x * o for x in self.c) if o else ZPoly()
        if not self.c or not o.c:
            return ZPoly()
        out = [0] * (len(self.c) + len(o.c) - 1)
        for i, x in enumerate(self.c):
            if x:
                for j, y in enumerate(o.c):
                    out[i + j] += x * y
        return ZPoly(out)

    __rmul__ = __mul__

    def exquo(self, d):
        """Exact quotient; raises if d does not divide self over Z."""
        if d.is_zero:
            raise ZeroDivisionError
        rem = list(self.c)
        q = [0] * max(len(rem) - len(d.c) + 1, 0)
        lead = d.c[-1]
        for k in range(len(q) - 1, -1, -1):
            top = rem[k + len(d.c) - 1]
            if top % lead:
                raise ArithmeticError("inexact polynomial division")
            qk = top // lead
            q[k] = qk
            if qk:
                for j, y in enumerate(d.c):
                    rem[k + j] -= qk * y
        if any(rem):
            raise ArithmeticError("inexact polynomial division")
        return ZPoly(q)

    def to_sympy(self, t):
        return sympy.Poly(list(reversed(self.c)) or [0], t, domain="QQ")

    def __eq__(self, o):
        return isinstance(o, ZPoly) and self.c == o.c

    def __hash__(self):
        return hash(self.c)

    def __repr__(self):
        return f"ZPoly({list(self.c)})"


def _zp(x):
    return x if isinstance(x, ZPoly) else ZPoly((x,))


class _ZPolyRing:
    zero = ZPoly()
    one = ZPoly((1,))

    @staticmethod
    def is_zero(x):
        return x.is_zero

    @staticmethod
    def exquo(x, y):
        return x.exquo(y)

    @staticmethod
    def size(x):
        return (x.degree(), max(abs(c) for c in x.c))


def fraction_free_echelon(rows: list, ncols: int, ring=_IntRing):
    """Bareiss elimination to row echelon form.

    Returns ``(echelon_rows, pivot_columns, last_pivot)``.  Pivots are chosen by
    smallest size among the candidates in each column, which keeps the
    integers small; every choice is exact.
    """
    rows = [list(r) for r in rows]
    prev = ring.one
    pivots = []
    r = 0
    for c in range(ncols):
        cand = [i for i in range(r, len(rows)) if not ring.is_zero(rows[i][c])]
        if not cand:
            continue
        i = min(cand, key=lambda k: ring.size(rows[k][c]))
        rows[r], rows[i] = rows[i], rows[r]
        p = rows[r][c]
        for k in range(r + 1, len(rows)):
            q = rows[k][c]
            rk = rows[k]
            for j in range(c + 1, ncols):
                rk[j] = ring.exquo(p * rk[j] - q * rows[r][j], prev)
            rk[c] = ring.zero
        prev = p
        pivots.append(c)
        r += 1
    return rows[:r], pivots, prev


def _int_rows(rows) -> list:
    """Clear denominators row by row, make rows primitive and drop duplicates."""
    out, seen = [], set()
    for row in rows:
        den = 1
        for x in row:
            den = den * Fraction(x).denominator // gcd(den, Fraction(x).denominator)
        ints = [int(Fraction(x) * den) for x in row]
        g = 0
        for x in ints:
            g = gcd(g, x)
        if g == 0:
            continue
        ints = [x // g for x in ints]
        lead = next(x for x in ints if x)
        if lead < 0:
            ints = [-x for x in ints]
        key = tuple(ints)
        if key not in seen:
            seen.add(key)
            out.append(ints)
    return out


def nullspace(rows, ncols: int) -> list[list[Fraction]]:
    """Exact nullspace basis of an integer or rational matrix."""
    ech, piv, _ = fraction_free_echelon(_int_rows(rows), ncols)
    return _back_substitute(ech, piv, ncols)


def _back_substitute(ech, piv, ncols):
    free = [c for c in range(ncols) if c not in piv]
    basis = []
    for fc in free:
        x = [Fraction(0)] * ncols
        x[fc] = Fraction(1)
        for r in range(len(piv) - 1, -1, -1):
            c = piv[r]
            s = sum((Fraction(ech[r][j]) * x[j] for j in range(c + 1, ncols)), Fraction(0))
            x[c] = -s / ech[r][c]
        basis.append(x)
    return basis


# -- shifting -----------------------------------------------------------------

def _linear_rows(fv, cols, w, nu):
    """Coefficient rows of the linear equation; fv(m) gives f(m) as ring element."""
    pos = {m: i for i, m in enumerate(cols)}
    rows = []
    for m, n in iproduct(w, w):
        s = m + n + nu
        if (m + n) not in w or s not in w:
            continue
        row = [0] * len(cols)
        fs = fv(s)
        row[pos[m + n]] = row[pos[m + n]] + (fv(m) + fv(n) + 1) * (m - n)
        row[pos[n]] = row[pos[n]] - (fs - fv(m)) * (n - m + nu)
        row[pos[m]] = row[pos[m]] - (fs - fv(n)) * (n - m - nu)
        rows.append(row)
    return rows


def _quadratic_terms(w, nu):
    """Each quadratic equation as a list of (coefficient, i, j) monomials g(i) g(j)."""
    eqs = []
    for m, n in iproduct(w, w):
        s = m + n + nu
        if s not in w:
            continue
        eqs.append(((m - n, m, n), (-(m - n + nu), m, s), (-(m - n - nu), n, s)))
    return eqs


def _quad_eval(eq, g: dict):
    return sum(c * g.get(i, 0) * g.get(j, 0) for c, i, j in eq)


def _normalize(vec: dict) -> tuple:
    vec = {m: Fraction(v) for m, v in vec.items() if v}
    k = min(vec)
    lead = vec[k]
    return tuple((m, vec[m] / lead) for m in sorted(vec))


def _rays_in_nullspace(basis, cols, quads):
    """Rays of span(basis) that satisfy every quadratic equation.

    Dimension 1 is a direct check; larger nullspaces go through
    :func:`_rays_groebner`.
    Returns ``(rays, flags)`` with rays as dicts index -> Fraction.
    """
    dim = len(basis)
    vecs = [{cols[i]: v for i, v in enumerate(b) if v} for b in basis]
    flags = []
    if dim == 0:
        return [], flags
    if dim == 1:
        ok = all(_quad_eval(q, vecs[0]) == 0 for q in quads)
        return ([vecs[0]] if ok else []), flags
    return _rays_groebner(vecs, quads, flags)


def _rays_groebner(vecs, quads, flags):
    """Exact rays of span(vecs) on the quadratic variety, chart by chart.

    Chart i fixes x_i = 1 and x_j = 0 for j < i, so every ray is found once.
    Each chart is solved with a lex Groebner basis; positive-dimensional or
    irrational solution sets are flagged rather than enumerated.
    """
    dim = len(vecs)
    xs = sympy.symbols(f"x0:{dim}")
    support = sorted(set().union(*vecs))
    gsym = {m: sum(sympy.Rational(v.get(m, 0).numerator, v.get(m, 0).denominator) * x
                   for v, x in zip(vecs, xs) if v.get(m, 0)) for m in support}
    polys = []
    for q in quads:
        e = sum(c * gsym.get(i, 0) * gsym.get(j, 0) for c, i, j in q)
        e = sympy.expand(e)
        if e != 0:
            polys.append(e)
    out = []
    for i in range(dim):
        sub = {xs[j]: 0 for j in range(i)}
        sub[xs[i]] = 1
        free = xs[i + 1:]
        eqs = [sympy.expand(p.subs(sub)) for p in polys]
        eqs = [e for e in eqs if e != 0]
        if any(e.is_number for e in eqs):
            continue
        if not free:
            if not eqs:
                out.append(_combine(vecs, [0] * i + [1]))
            continue
        if not eqs:
            flags.append("positive_dimensional_rays")
            continue
        G = sympy.groebner(eqs, *free, order="lex", domain="QQ")
        if list(G.exprs) == [1]:
            continue
        if not G.is_zero_dimensional:
            flags.append("positive_dimensional_rays")
            continue
        for sol in sympy.solve(list(G.exprs), list(free), dict=True):
            vals = [sol.get(x, x) for x in free]
            if not all(v.is_rational for v in vals):
                flags.append("irrational_rays")
                continue
            coeffs = [0] * i + [1] + [Fraction(int(v.p), int(v.q)) for v in vals]
            out.append(_combine(vecs, coeffs))
    return [g for g in out if g], flags


def _combine(vecs, coeffs):
    g = {}
    for v, c in zip(vecs, coeffs):
        if c:
            for m, x in v.items():
                g[m] = g.get(m, 0) + c * x
    return {m: Fraction(x) for m, x in g.items() if x}


def _family_values(family: str, f0):
    f = GRADED_F[family]

    def fv(m):
        if m == 0 and f0 is not None:
            return f0
        return Fraction(f(m).constant_value())

    return fv


def _solve_fixed(family, f0, nu, w, cols, quads):
    rows = _linear_rows(_family_values(family, f0), cols, w, nu)
    if not rows:
        raise WindowTooSmallError(f"no index pairs reach the linear equation on {w} with nu={nu}")
    basis = nullspace(rows, len(cols))
    rays, flags = _rays_in_nullspace(basis, cols, quads)
    return rays, len(basis), flags


def classify_shifting(family: str, nu: int, w) -> ClassificationReport:
    if nu == 0:
        raise NuZeroError("shifting classification needs nu != 0")
    family = canonical_name(family)
    if family not in GRADED_F:
        raise ContractError(f"{family} is not a graded family")
    w = Window.coerce(w)
    cols = list(w)
    quads = _quadratic_terms(w, nu)
    rep = ClassificationReport(w, "shifting", family=family, nu=nu)
    found = {}

    def emit(g, dim, f0, flags):
        gamma = _normalize(g)
        key = (gamma, f0)
        if key not in found:
            found[key] = ShiftingRay(family, nu, gamma, dim, f0, tuple(sorted(set(flags))))

    symbolic = GRADED_F[family](0).params()
    if not symbolic:
        rays, dim, flags = _solve_fixed(family, None, nu, w, cols, quads)
        rep.flags.extend(flags)
        for g in rays:
            emit(g, dim, None, flags)
    else:
        generic, candidates, sflags = _symbolic_pass(family, nu, w, cols, quads)
        rep.flags.extend(sflags)
        for g, dim in generic:
            emit(g, dim, FREE, [])
        for t0 in sorted(candidates):
            rays, dim, flags = _solve_fixed(family, t0, nu, w, cols, quads)
            rep.flags.extend(flags)
            for g in rays:
                emit(g, dim, t0, flags)
        # A ray that exists for every f(0) supersedes its specialisations.
        free_keys = {gamma for gamma, f0 in found if f0 == FREE}
        found = {k: v for k, v in found.items() if k[1] == FREE or k[0] not in free_keys}
    rays = sorted(found.values(), key=ShiftingRay.sort_key)
    for r in rays:
        m = _safe_match(r, w)
        if m == "unmatched":
            r = ShiftingRay(r.family, r.nu, r.gamma, r.nullspace_dim, r.f0,
                            tuple(sorted(set(r.flags) | {"window_artifact"})))
        rep.solutions.append(r)
        rep.matched_catalog.append(m)
    rep.flags = sorted(set(rep.flags))
    return rep


def _rational_roots(p) -> tuple[list, bool]:
    """Rational roots of a polynomial in Q[t]; the flag says irrational roots exist."""
    if p.degree() <= 0:
        return [], False
    roots = []
    factors = p.factor_list()[1]
    for factor, _ in factors:
        if factor.degree() == 1:
            a, b = factor.all_coeffs()
            r = -sympy.Rational(b) / sympy.Rational(a)
            roots.append(Fraction(int(r.p), int(r.q)))
    irrational = any(fac.degree() > 1 for fac, _ in factors)
    return sorted(set(roots)), irrational


def _symbolic_pass(family, nu, w, cols, quads):
    """Eliminate over Z[t] with t = f(0).

    Returns generic rays (valid for every t), the rational values of t that
    need an exact re-solve, and flags.
    """
    ring = _ZPolyRing
    tpoly = ZPoly((0, 1))
    f = GRADED_F[family]

    def fv(m):
        return tpoly if m == 0 else _family_int(family, m)

    rows = _linear_rows(fv, cols, w, nu)
    if not rows:
        raise WindowTooSmallError(f"no index pairs reach the linear equation on {w} with nu={nu}")
    uniq, seen = [], set()
    for r in rows:
        r = [_zp(x) for x in r]
        key = tuple(x.c for x in r)
        if any(not x.is_zero for x in r) and key not in seen:
            seen.add(key)
            uniq.append(r)
    ech, piv, last = fraction_free_echelon(uniq, len(cols), ring)
    t = sympy.Symbol("t")
    flags = []
    candidates = set()
    roots, irr = _rational_roots(last.to_sympy(t))
    candidates.update(roots)
    if irr:
        flags.append("irrational_critical_f0")
    free = [c for c in range(len(cols)) if c not in piv]
    generic = []
    if len(free) == 1:
        # Back-substitute over Q(t), rescaling so every entry stays in Z[t].
        x = [None] * len(cols)
        x[free[0]] = ring.one
        for r in range(len(piv) - 1, -1, -1):
            c = piv[r]
            s = ring.zero
            for j in range(c + 1, len(cols)):
                if x[j] is not None and not ech[r][j].is_zero:
                    s = s + ech[r][j] * x[j]
            den = ech[r][c]
            x = [None if v is None else v * den for v in x]
            x[c] = -s
        entries = {cols[i]: x[i].to_sympy(t) for i in range(len(cols)) if not x[i].is_zero}
        content = None
        for p in entries.values():
            content = p if content is None else content.gcd(p)
        entries = {m: p.exquo(content) for m, p in entries.items()}
        zero = sympy.Poly(0, t, domain="QQ")
        vanish = []
        for q in quads:
            val = zero
            for c, i, j in q:
                if i in entries and j in entries:
                    val = val + entries[i] * entries[j] * c
            if not val.is_zero:
                vanish.append(val)
        if not vanish:
            if all(p.degree() <= 0 for p in entries.values()):
                generic.append(({m: _to_fraction(p.LC()) for m, p in entries.items()}, 1))
            else:
                flags.append("parametric_ray")
        else:
            G = vanish[0]
            for p in vanish[1:]:
                G = G.gcd(p)
            r2, irr2 = _rational_roots(G)
            candidates.update(r2)
            if irr2:
                flags.append("irrational_f0_solutions")
        # Points where the chosen ray degenerates.
        for p in entries.values():
            candidates.update(_rational_roots(p)[0])
    elif len(free) > 1:
        flags.append(f"generic_nullspace_dim_{len(free)}")
    return generic, candidates, flags


def _to_fraction(q) -> Fraction:
    q = sympy.Rational(q)
    return Fraction(int(q.p), int(q.q))
