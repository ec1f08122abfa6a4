"""Windowed exact verification of post-Lie identities.

Every check enumerates basis indices from a :class:`Window` and evaluates the
identity exactly; residuals are polynomials in the formal parameters, so a
pass holds for every parameter value at once.  Formula-backed specs are total
on Z and are evaluated wherever the products land; table-backed specs raise
:class:`~witt_postlie.errors.WindowEscapeError` if a product leaves their
rectangle.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product as iproduct

from .catalog import (
    PostLieSpec,
    catalog_lookup,
    module_structure,
    MODULE_CASES,
)
from .errors import NuZeroError, UnknownNameError, WindowError
from .exact_arith import Poly, ZERO
from .index_function import IndexFunction
from .witt import WittElement, bracket_basis, check_index

MAX_WIDTH = 64
MAX_WITNESSES = 16


@dataclass(frozen=True, order=True)
class Window:
    lo: int
    hi: int

    def __post_init__(self):
        if self.lo > self.hi:
            raise WindowError(f"window lo={self.lo} exceeds hi={self.hi}")
        if self.hi - self.lo > MAX_WIDTH:
            raise WindowError(f"window width {self.hi - self.lo} exceeds the guard of {MAX_WIDTH}")

    @classmethod
    def parse(cls, text: str) -> "Window":
        lo, sep, hi = str(text).partition("..")
        try:
            if not sep:
                raise ValueError
            lo, hi = int(lo), int(hi)
        except ValueError:
            raise WindowError(f"window must look like lo..hi, got {text!r}") from None
        return cls(lo, hi)

    @classmethod
    def coerce(cls, w) -> "Window":
        if isinstance(w, Window):
            return w
        if isinstance(w, str):
            return cls.parse(w)
        lo, hi = w
        return cls(lo, hi)

    def __iter__(self):
        return iter(range(self.lo, self.hi + 1))

    def __contains__(self, m):
        return self.lo <= m <= self.hi

    def __len__(self):
        return self.hi - self.lo + 1

    def __str__(self):
        return f"{self.lo}..{self.hi}"


def covering_window(w, nu: int = 0) -> tuple:
    """Smallest table window holding every product the checks on ``w`` touch.

    Products are evaluated at first/second indices that are sums of at most two
    window indices, shifted by at most one nu.  The result may exceed the
    desk-scale guard, so it is returned as a plain (lo, hi) pair.
    """
    w = Window.coerce(w)
    lo = min(2 * w.lo, w.lo) + min(0, nu)
    hi = max(2 * w.hi, w.hi) + max(0, nu)
    return (lo, hi)


@dataclass(frozen=True)
class Residual:
    identity_id: str
    indices: tuple
    value: object

    def to_json(self):
        if isinstance(self.value, WittElement):
            val = [{"index": k, "coeff": str(c)} for k, c in self.value.items()]
        else:
            val = str(self.value)
        return {"identity": self.identity_id, "indices": list(self.indices), "value": val}


@dataclass
class VerifyReport:
    identity_id: str
    window: Window
    total_checked: int = 0
    residuals: list = field(default_factory=list)
    residual_count: int = 0
    components: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.residual_count == 0

    def record(self, identity_id, indices, value):
        self.total_checked += 1
        if value:
            self.residual_count += 1
            self._keep(Residual(identity_id, tuple(indices), value))

    def _keep(self, res: Residual):
        # Witnesses are capped per identity so one noisy identity cannot hide the rest.
        if sum(1 for r in self.residuals if r.identity_id == res.identity_id) < MAX_WITNESSES:
            self.residuals.append(res)

    def absorb(self, other: "VerifyReport"):
        self.total_checked += other.total_checked
        self.residual_count += other.residual_count
        for res in other.residuals:
            self._keep(res)

    def to_json(self) -> dict:
        out = {
            "identity": self.identity_id,
            "window": [self.window.lo, self.window.hi],
            "total_checked": self.total_checked,
            "residual_count": self.residual_count,
            "passed": self.passed,
            "witnesses": [r.to_json() for r in sorted(self.residuals, key=lambda r: (r.identity_id, r.indices))],
        }
        if self.components:
            out["components"] = {k: v.to_json() for k, v in sorted(self.components.items())}
        return out

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.identity_id} on {self.window}: {self.total_checked} checked, {self.residual_count} nonzero"


# -- sparse vector helpers ------------------------------------------------------
# Vectors are dicts index -> Poly; "pairs" are iterables of (index, Poly).

def _acc(out: dict, pairs, scale=None, sign=1):
    for k, c in pairs:
        if scale is not None:
            c = c * scale
        if sign < 0:
            c = -c
        s = out[k] + c if k in out else c
        if s:
            out[k] = s
        else:
            out.pop(k, None)


def _left(fn, u, p):
    """(sum c_k L_k) * L_p."""
    out = {}
    for k, c in u:
        _acc(out, fn(k, p), c)
    return out.items()


def _right(fn, m, u):
    """L_m * (sum c_k L_k)."""
    out = {}
    for k, c in u:
        _acc(out, fn(m, k), c)
    return out.items()


def _element(vec: dict) -> WittElement:
    return WittElement._raw(dict(vec))


class _Products:
    """Memoised basis products of a spec and of its two brackets."""

    def __init__(self, spec: PostLieSpec):
        self.spec = spec
        self._circ, self._angle, self._lie, self._sum = {}, {}, {}, {}

    def circ(self, m, n):
        key = (m, n)
        r = self._circ.get(key)
        if r is None:
            r = self._circ[key] = tuple(self.spec.basis_product(m, n))
        return r

    def angle(self, m, n):
        key = (m, n)
        r = self._angle.get(key)
        if r is None:
            out = {}
            _acc(out, self.circ(m, n))
            _acc(out, self.circ(n, m), sign=-1)
            r = self._angle[key] = tuple(out.items())
        return r

    def lie(self, m, n):
        key = (m, n)
        r = self._lie.get(key)
        if r is None:
            out = {}
            _acc(out, ((check_index(m + n), Poly.const(m - n)),) if m != n else ())
            if self.spec.witt_role == "sum":
                _acc(out, self.angle(m, n), sign=-1)
            r = self._lie[key] = tuple(out.items())
        return r

    def sum(self, m, n):
        key = (m, n)
        r = self._sum.get(key)
        if r is None:
            out = {}
            _acc(out, bracket_basis(m, n))
            if self.spec.witt_role == "bracket":
                _acc(out, self.angle(m, n))
            r = self._sum[key] = tuple(out.items())
        return r


def _action_residual(P: _Products, br, m, n, p):
    """br(x, y) o z - x o (y o z) + y o (x o z)."""
    r = {}
    _acc(r, _left(P.circ, br(m, n), p))
    _acc(r, _right(P.circ, m, P.circ(n, p)), sign=-1)
    _acc(r, _right(P.circ, n, P.circ(m, p)))
    return r


def _derivation_residual(P: _Products, br, m, n, p):
    """x o br(y, z) - br(x o y, z) - br(y, x o z)."""
    r = {}
    _acc(r, _right(P.circ, m, br(n, p)))
    _acc(r, _left(br, P.circ(m, n), p), sign=-1)
    _acc(r, _right(br, n, P.circ(m, p)), sign=-1)
    return r


def check_postlie(spec: PostLieSpec, w) -> VerifyReport:
    """Post-Lie axioms over the bracket [,] on all basis triples of ``w``:

    [x, y] o z = x o (y o z) - y o (x o z) - <x, y> o z
    x o [y, z] = [x o y, z] + [y, x o z]
    """
    w = Window.coerce(w)
    P = _Products(spec)
    rep = VerifyReport("postlie", w)
    for m, n, p in iproduct(w, w, w):
        r = _action_residual(P, P.lie, m, n, p)
        _acc(r, _left(P.circ, P.angle(m, n), p))
        rep.record("action", (m, n, p), _element(r))
        rep.record("derivation", (m, n, p), _element(_derivation_residual(P, P.lie, m, n, p)))
    return rep


def check_postlie_sum(spec: PostLieSpec, w) -> VerifyReport:
    """Post-Lie axioms over the bracket {,} = <,> + [,] on all basis triples:

    {x, y} o z = x o (y o z) - y o (x o z)
    x o {y, z} - {x o y, z} - {y, x o z} = x o <y, z> - <x o y, z> - <y, x o z>
    """
    w = Window.coerce(w)
    P = _Products(spec)
    rep = VerifyReport("postlie_sum", w)
    for m, n, p in iproduct(w, w, w):
        rep.record("sum_action", (m, n, p), _element(_action_residual(P, P.sum, m, n, p)))
        r = _derivation_residual(P, P.sum, m, n, p)
        _acc(r, _derivation_residual(P, P.angle, m, n, p).items(), sign=-1)
        rep.record("sum_derivation", (m, n, p), _element(r))
    return rep


def _jacobi_into(rep: VerifyReport, br, w: Window):
    for m, n in iproduct(w, w):
        r = {}
        _acc(r, br(m, n))
        _acc(r, br(n, m))
        rep.record("antisymmetry", (m, n), _element(r))
    for m, n, p in iproduct(w, w, w):
        r = {}
        _acc(r, _right(br, m, br(n, p)))
        _acc(r, _right(br, n, br(p, m)))
        _acc(r, _right(br, p, br(m, n)))
        rep.record("jacobi", (m, n, p), _element(r))


def check_jacobi(spec: PostLieSpec, w, which: str | None = None) -> VerifyReport:
    """Antisymmetry and Jacobi for the bracket the product induces.

    ``which`` is ``"sum"`` or ``"lie"``; by default the bracket that is not
    the Witt bracket is checked.
    """
    w = Window.coerce(w)
    if which is None:
        which = "sum" if spec.witt_role == "bracket" else "lie"
    if which not in ("sum", "lie"):
        raise ValueError("which must be 'sum' or 'lie'")
    P = _Products(spec)
    rep = VerifyReport(f"jacobi_{which}", w)
    _jacobi_into(rep, P.sum if which == "sum" else P.lie, w)
    return rep


def check_equivalence(spec: PostLieSpec, w) -> VerifyReport:
    """Both axiom systems agree on ``w`` and the brackets convert into each other.

    Passes when the two axiom checks have the same outcome, [x, y] is recovered
    exactly as {x, y} - <x, y>, and (when the axioms hold) the derived bracket
    satisfies Jacobi.  The individual reports are kept in ``components``.
    """
    w = Window.coerce(w)
    a = check_postlie(spec, w)
    b = check_postlie_sum(spec, w)
    P = _Products(spec)
    rep = VerifyReport("equivalence", w, components={"postlie": a, "postlie_sum": b})
    for m, n in iproduct(w, w):
        r = {}
        _acc(r, P.sum(m, n))
        _acc(r, P.angle(m, n), sign=-1)
        _acc(r, P.lie(m, n), sign=-1)
        rep.record("bracket_roundtrip", (m, n), _element(r))
    rep.record("axiom_agreement", (), Poly.const(0 if a.passed == b.passed else 1))
    if a.passed:
        j = check_jacobi(spec, w)
        rep.components["jacobi"] = j
        rep.absorb(j)
    return rep


# -- functional equations ------------------------------------------------------

def _literal(v: Poly):
    if v.is_constant():
        c = v.constant_value()
        if c in (0, -1):
            return int(c)
    return None


def _graded_equation_into(rep, f, w, sums_in_window):
    for m, n in iproduct(w, w):
        if sums_in_window and m + n not in w:
            continue
        fm, fn, fs = f(m), f(n), f(m + n)
        val = (fs + fm * fs + fn * fs - fm * fn) * (m - n)
        rep.record("graded_equation", (m, n), val)
    for m in w:
        if m != 0:
            fm = f(m)
            rep.record("values_in_0_or_minus_1", (m,), fm * (fm + 1))
    for m, n in iproduct(w, w):
        if m == n or (sums_in_window and m + n not in w):
            continue
        lm, ln = _literal(f(m)), _literal(f(n))
        if lm is None or lm != ln:
            continue
        if lm == 0:
            rep.record("zero_set_closed", (m, n), f(m + n))
        else:
            rep.record("minus_one_set_closed", (m, n), f(m + n) + 1)


def check_graded_equation(f: IndexFunction, w, sums_in_window: bool = True) -> VerifyReport:
    """Functional equation for graded structures phi(m, n) = (m - n) f(m):

    (m - n)(f(m+n) + f(m) f(m+n) + f(n) f(m+n) - f(m) f(n)) = 0

    plus its consequences f(m) in {0, -1} for m != 0, and closure of
    {f = 0} and {f = -1} under sums of distinct elements.  With
    ``sums_in_window=False`` every pair of ``w`` is used and f is read at
    m + n wherever that lands.
    """
    w = Window.coerce(w)
    rep = VerifyReport("graded_equation", w)
    _graded_equation_into(rep, f, w, sums_in_window)
    return rep


def check_shifting_equations(f: IndexFunction, g: IndexFunction, nu: int, w) -> VerifyReport:
    """Equations on (f, g, nu) for shifting structures, restricted to ``w``.

    quadratic: (m-n) g(m) g(n) = ((m-n+nu) g(m) + (m-n-nu) g(n)) g(m+n+nu)
    linear:    (m-n)(f(m)+f(n)+1) g(m+n)
                 = (n-m+nu)(f(m+n+nu)-f(m)) g(n) + (n-m-nu)(f(m+n+nu)-f(n)) g(m)
    pinned:    nu g(m) g(-nu) = (m + 2 nu) g(m)^2   (quadratic at n = -nu)
    """
    if nu == 0:
        raise NuZeroError("nu must be nonzero")
    w = Window.coerce(w)
    rep = VerifyReport("shifting_equations", w)
    _graded_equation_into(rep, f, w, True)
    for m, n in iproduct(w, w):
        s = m + n + nu
        if s not in w:
            continue
        gm, gn, gs = g(m), g(n), g(s)
        rep.record("shift_quadratic", (m, n), gm * gn * (m - n) - (gm * (m - n + nu) + gn * (m - n - nu)) * gs)
        if m + n not in w:
            continue
        fs = f(s)
        lhs = (f(m) + f(n) + 1) * g(m + n) * (m - n)
        rhs = (fs - f(m)) * gn * (n - m + nu) + (fs - f(n)) * gm * (n - m - nu)
        rep.record("shift_linear", (m, n), lhs - rhs)
    if -nu in w:
        gp = g(-nu)
        for m in w:
            gm = g(m)
            rep.record("shift_pinned", (m,), gm * gp * nu - gm * gm * (m + 2 * nu))
    return rep


# -- modules ------------------------------------------------------------------

def check_module(name: str, w, nu: int | None = None) -> VerifyReport:
    """{L_m, L_n} . v_p = L_m . (L_n . v_p) - L_n . (L_m . v_p) on ``w``."""
    if name not in MODULE_CASES:
        raise UnknownNameError(f"unknown module action {name!r}")
    w = Window.coerce(w)
    spec = module_structure(name, nu)
    P = _Products(spec)
    rep = VerifyReport(f"module:{name}", w)
    for m, n, p in iproduct(w, w, w):
        rep.record("module_law", (m, n, p), _element(_action_residual(P, P.sum, m, n, p)))
    return rep


def verify_catalog_entry(name: str, nu: int | None, w) -> dict:
    """Run every applicable check for a catalog entry; returns name -> report."""
    entry = catalog_lookup(name, nu)
    spec = entry.spec
    out = {
        "postlie": check_postlie(spec, w),
        "postlie_sum": check_postlie_sum(spec, w),
        "jacobi": check_jacobi(spec, w),
    }
    if hasattr(spec, "g"):
        out["equations"] = check_shifting_equations(spec.f, spec.g, spec.nu, w)
    else:
        out["equations"] = check_graded_equation(spec.f, w)
    return out
