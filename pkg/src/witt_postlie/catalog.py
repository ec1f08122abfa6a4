"""Product descriptors and the catalog of post-Lie structures on the Witt algebra.

Every descriptor exposes ``basis_product(m, n)``: the pairs ``(k, c)`` with
L_m o L_n = sum c L_k.  ``witt_role`` says which bracket the Witt bracket plays:

* ``"bracket"`` -- a structure on (W, [,]): the Witt bracket is [,] and the
  second bracket is {x, y} = <x, y> + [x, y] with <x, y> = x o y - y o x.
* ``"sum"`` -- a structure on (W, {,}): the Witt bracket is {,} and
  [x, y] = {x, y} - <x, y>.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .errors import (
    ContractError,
    DenominatorZeroError,
    InadmissibleNuError,
    NuZeroError,
    ParameterConstraintError,
    UnknownNameError,
    UnsupportedVariantError,
    WindowEscapeError,
)
from .exact_arith import ONE, ZERO, Poly
from .index_function import IndexFunction, ZERO_FUNCTION
from .witt import WittElement, basis, bilinear, bracket, check_index

WITT_ROLES = ("bracket", "sum")

_A = Poly.var("a")
_B = Poly.var("b")


class PostLieSpec:
    """Base class for bilinear products on the Witt algebra."""

    witt_role = "bracket"

    def basis_product(self, m: int, n: int) -> tuple:
        raise NotImplementedError

    def params(self) -> frozenset:
        return frozenset()

    def subs(self, assignment) -> "PostLieSpec":
        raise UnsupportedVariantError(f"{type(self).__name__} does not support substitution")


@dataclass(frozen=True)
class GradedSpec(PostLieSpec):
    """L_m o L_n = (m - n) f(m) L_{m+n}."""

    f: IndexFunction
    witt_role: str = "bracket"

    def basis_product(self, m, n):
        c = self.f(m) * (m - n)
        return ((check_index(m + n), c),) if c else ()

    def params(self):
        return self.f.params()

    def subs(self, assignment):
        return GradedSpec(self.f.subs(assignment), self.witt_role)


@dataclass(frozen=True)
class ShiftingSpec(PostLieSpec):
    """L_m o L_n = (m - n) f(m) L_{m+n} + (m - n + nu) g(m) L_{m+n+nu}."""

    f: IndexFunction
    g: IndexFunction
    nu: int
    witt_role: str = "bracket"

    def __post_init__(self):
        if self.nu == 0:
            raise NuZeroError("shifting structures need a nonzero shift nu")

    def basis_product(self, m, n):
        out = []
        c = self.f(m) * (m - n)
        if c:
            out.append((check_index(m + n), c))
        d = self.g(m) * (m - n + self.nu)
        if d:
            out.append((check_index(m + n + self.nu), d))
        return tuple(out)

    def params(self):
        return self.f.params() | self.g.params()

    def subs(self, assignment):
        return ShiftingSpec(self.f.subs(assignment), self.g.subs(assignment), self.nu, self.witt_role)


@dataclass(frozen=True)
class TableSpec(PostLieSpec):
    """Explicit structure constants on a finite rectangle of index pairs.

    ``products`` maps (m, n) to the element L_m o L_n; pairs outside the
    rectangle raise :class:`WindowEscapeError` instead of reading as zero.
    """

    products: dict = field(hash=False, compare=True)
    m_range: tuple[int, int] = (0, 0)
    n_range: tuple[int, int] = (0, 0)
    witt_role: str = "bracket"
    nu: int | None = None
    name: str | None = field(default=None, compare=False)

    def __post_init__(self):
        (a, b), (c, d) = self.m_range, self.n_range
        if a > b or c > d:
            raise ContractError("empty table rectangle")

    def covers(self, m, n) -> bool:
        return self.m_range[0] <= m <= self.m_range[1] and self.n_range[0] <= n <= self.n_range[1]

    def basis_product(self, m, n):
        if not self.covers(m, n):
            raise WindowEscapeError(
                f"product L_{m} o L_{n} requested outside the table rectangle "
                f"{self.m_range} x {self.n_range}"
            )
        x = self.products.get((m, n))
        return tuple(x.items()) if x is not None else ()

    def params(self):
        out = frozenset()
        for x in self.products.values():
            for _, c in x.items():
                out |= c.params()
        return out

    def subs(self, assignment):
        prods = {}
        for key, x in self.products.items():
            prods[key] = WittElement({k: c.subs(assignment) for k, c in x.items()})
        return TableSpec(prods, self.m_range, self.n_range, self.witt_role, self.nu, self.name)

    @classmethod
    def from_spec(cls, spec: PostLieSpec, window, name=None) -> "TableSpec":
        lo, hi = window
        prods = {}
        for m in range(lo, hi + 1):
            for n in range(lo, hi + 1):
                x = WittElement(dict(spec.basis_product(m, n)))
                if x:
                    prods[(m, n)] = x
        return cls(prods, (lo, hi), (lo, hi), spec.witt_role, getattr(spec, "nu", None), name)


@dataclass(frozen=True, eq=False)
class FormulaSpec(PostLieSpec):
    """Total product L_m o L_n = phi(m, n) L_{m+n} + rho(m, n) L_{m+n+nu}."""

    phi: Callable[[int, int], Poly]
    rho: Callable[[int, int], Poly] | None = None
    nu: int = 0
    witt_role: str = "bracket"
    label: str = ""
    param_names: frozenset = frozenset()

    def basis_product(self, m, n):
        out = []
        c = self.phi(m, n)
        if c:
            out.append((check_index(m + n), c))
        if self.rho is not None:
            d = self.rho(m, n)
            if d:
                k = check_index(m + n + self.nu)
                if out and out[0][0] == k:
                    s = out[0][1] + d
                    out = [(k, s)] if s else []
                else:
                    out.append((k, d))
        return tuple(out)

    def params(self):
        return self.param_names


def circ(spec: PostLieSpec, x: WittElement, y: WittElement) -> WittElement:
    return bilinear(x, y, spec.basis_product)


def angle(spec: PostLieSpec, x: WittElement, y: WittElement) -> WittElement:
    """The commutator x o y - y o x."""
    return circ(spec, x, y) - circ(spec, y, x)


def induced_bracket(spec: PostLieSpec, x: WittElement, y: WittElement) -> WittElement:
    """{x, y} = x o y - y o x + [x, y] for a structure on (W, [,])."""
    return angle(spec, x, y) + bracket(x, y)


def lie_bracket(spec: PostLieSpec, x, y) -> WittElement:
    """The bracket [,] the product is post-Lie over."""
    if spec.witt_role == "bracket":
        return bracket(x, y)
    return bracket(x, y) - angle(spec, x, y)


def sum_bracket(spec: PostLieSpec, x, y) -> WittElement:
    """The bracket {,} = <,> + [,]."""
    if spec.witt_role == "bracket":
        return induced_bracket(spec, x, y)
    return bracket(x, y)


# -- transport ----------------------------------------------------------------

def transport_tau(spec: PostLieSpec) -> PostLieSpec:
    """Rewrite ``spec`` along the automorphism L_m -> -L_{-m}."""
    if isinstance(spec, GradedSpec):
        return GradedSpec(spec.f.reflect(), spec.witt_role)
    if isinstance(spec, ShiftingSpec):
        return ShiftingSpec(spec.f.reflect(), spec.g.reflect(), -spec.nu, spec.witt_role)
    raise UnsupportedVariantError(f"transport_tau needs a graded or shifting spec, got {type(spec).__name__}")


def transport_scaling(spec: PostLieSpec, epsilon: int, c) -> PostLieSpec:
    """Rewrite a graded spec along L_m -> epsilon c^m L_{epsilon m}.

    The factors c^m cancel on both sides, leaving f2(m) = f1(epsilon m).
    """
    if not isinstance(spec, GradedSpec):
        raise UnsupportedVariantError("transport_scaling is defined for graded specs only")
    if epsilon not in (1, -1):
        raise ContractError("epsilon must be +1 or -1")
    if Fraction(c) == 0:
        raise ContractError("scaling constant c must be nonzero")
    return GradedSpec(spec.f.compose_sign(epsilon), spec.witt_role)


def apply_automorphism(x: WittElement, epsilon: int, c) -> WittElement:
    """L_m -> epsilon c^m L_{epsilon m} applied to ``x``."""
    c = Fraction(c)
    return WittElement({epsilon * m: v * (epsilon * c**m) for m, v in x.items()})


def tau(x: WittElement) -> WittElement:
    return apply_automorphism(x, -1, 1)


# -- catalog ------------------------------------------------------------------

@dataclass(frozen=True)
class CatalogEntry:
    name: str
    spec: PostLieSpec
    params: frozenset
    admissible_nu: tuple = ()
    family: str | None = None

    def to_json(self) -> dict:
        return {"name": self.name, "params": sorted(self.params), "admissible_nu": list(self.admissible_nu),
                "family": self.family, "spec": spec_to_json(self.spec)}


def _steps(*pieces):
    return IndexFunction(pieces)


# f of each graded family.  P3a/P4a take f(0) = -a so that L_0 o L_n = n a L_n.
GRADED_F = {
    "P1": IndexFunction.constant(0),
    "P2": IndexFunction.constant(-1),
    "P3a": _steps((">", 0, -1), ("==", 0, -_A), ("otherwise", None, 0)),
    "P4a": _steps(("<", 0, -1), ("==", 0, -_A), ("otherwise", None, 0)),
    "P5": _steps((">=", 2, -1), ("otherwise", None, 0)),
    "P6": _steps((">=", 2, 0), ("otherwise", None, -1)),
    "P7": _steps(("<=", -2, -1), ("otherwise", None, 0)),
    "P8": _steps((">=", -1, -1), ("otherwise", None, 0)),
}
GRADED_NAMES = tuple(GRADED_F)

# name -> (f, g builder taking nu, admissible nu, graded family, family f(0))
_SHIFT_F = {
    "NP1": _steps((">=", 0, -1), ("otherwise", None, 0)),
    "NP2": _steps((">", 0, -1), ("otherwise", None, 0)),
    "MP1": _steps(("<=", 0, -1), ("otherwise", None, 0)),
    "MP2": _steps(("<", 0, -1), ("otherwise", None, 0)),
}


def _g_pinned(nu):
    return IndexFunction.from_points({-nu: -_B})


def _g_points(points):
    return lambda nu: IndexFunction.from_points(points)


_SHIFTING_TABLE = {
    "NP1": (_SHIFT_F["NP1"], _g_pinned, (1, 2), "P3a"),
    "NP2": (_SHIFT_F["NP2"], _g_pinned, (-1, -2), "P3a"),
    "NP3": (GRADED_F["P5"], _g_pinned, (-2, -3, -4), "P5"),
    "NP4": (GRADED_F["P5"], _g_points({2: -_B}), (-1,), "P5"),
    "NP5": (GRADED_F["P5"], _g_points({2: -_B, 3: -2 * _B}), (-2,), "P5"),
    "NP6": (GRADED_F["P6"], _g_pinned, (-2, -3, -4), "P6"),
    "NP7": (GRADED_F["P6"], _g_points({2: -_B}), (-1,), "P6"),
    "NP8": (GRADED_F["P6"], _g_points({2: -_B, 3: -2 * _B}), (-2,), "P6"),
    "MP1": (_SHIFT_F["MP1"], _g_pinned, (-1, -2), "P4a"),
    "MP2": (_SHIFT_F["MP2"], _g_pinned, (1, 2), "P4a"),
    "MP3": (GRADED_F["P7"], _g_pinned, (2, 3, 4), "P7"),
    "MP4": (GRADED_F["P7"], _g_points({-2: -_B}), (1,), "P7"),
    "MP5": (GRADED_F["P7"], _g_points({-2: -_B, -3: -2 * _B}), (2,), "P7"),
    # Stored with g(-nu) = -b like its siblings; this is the image of NP6 under tau.
    "MP6": (GRADED_F["P8"], _g_pinned, (2, 3, 4), "P8"),
    "MP7": (GRADED_F["P8"], _g_points({-2: -_B}), (1,), "P8"),
    "MP8": (GRADED_F["P8"], _g_points({-2: -_B, -3: -2 * _B}), (2,), "P8"),
}
SHIFTING_NAMES = tuple(_SHIFTING_TABLE)

_ALIASES = {"P3": "P3a", "P4": "P4a"}


def canonical_name(name: str) -> str:
    name = name.strip()
    name = _ALIASES.get(name, name)
    if name not in GRADED_F and name not in _SHIFTING_TABLE:
        raise UnknownNameError(f"unknown structure {name!r}")
    return name


def admissible_nu(name: str) -> tuple:
    name = canonical_name(name)
    return _SHIFTING_TABLE[name][2] if name in _SHIFTING_TABLE else ()


def catalog_lookup(name: str, nu: int | None = None) -> CatalogEntry:
    name = canonical_name(name)
    if name in GRADED_F:
        if nu not in (None, 0):
            raise InadmissibleNuError(f"{name} is graded and takes no shift nu")
        spec = GradedSpec(GRADED_F[name])
        return CatalogEntry(name, spec, spec.params(), (), name)
    f, gfun, nus, family = _SHIFTING_TABLE[name]
    if nu is None:
        if len(nus) != 1:
            raise InadmissibleNuError(f"{name} needs nu, one of {list(nus)}")
        nu = nus[0]
    if nu not in nus:
        raise InadmissibleNuError(f"nu={nu} is not admissible for {name}; expected one of {list(nus)}")
    spec = ShiftingSpec(f, gfun(nu), nu)
    return CatalogEntry(name, spec, spec.params(), nus, family)


def all_entries():
    """Every catalog entry, shifting names expanded over their admissible nu."""
    for name in GRADED_NAMES:
        yield catalog_lookup(name)
    for name in SHIFTING_NAMES:
        for nu in _SHIFTING_TABLE[name][2]:
            yield catalog_lookup(name, nu)


def tau_partner(name: str) -> str:
    """Name of the entry a catalog structure is carried to by transport_tau."""
    name = canonical_name(name)
    pairs = {"P1": "P1", "P2": "P2", "P3a": "P4a", "P5": "P7", "P6": "P8"}
    pairs.update({v: k for k, v in pairs.items()})
    if name in pairs:
        return pairs[name]
    return ("MP" if name.startswith("NP") else "NP") + name[2:]


def identify(spec: PostLieSpec) -> list[tuple[str, int | None]]:
    """Catalog entries whose descriptor equals ``spec`` exactly."""
    hits = []
    for entry in all_entries():
        if entry.spec == spec:
            hits.append((entry.name, getattr(entry.spec, "nu", None)))
    return hits


# -- explicit example structures ----------------------------------------------

def example46_coefficient(alpha, epsilon, m: int, n: int) -> Poly:
    """-(alpha + n + alpha eps m)(1 + eps n) / (1 + eps (m + n)) at one index pair."""
    eps = Fraction(epsilon)
    den = 1 + eps * (m + n)
    if den == 0:
        raise DenominatorZeroError(m, n)
    alpha = Poly.coerce(alpha)
    num = (alpha * (1 + eps * m) + n) * (1 + eps * n)
    return num * (-1 / den)


def example_46_phi(alpha, epsilon, window) -> TableSpec:
    """Graded structure over (W, {,}) with the rational phi above, tabulated on ``window``.

    ``alpha`` may be a rational or a formal polynomial (it never appears in a
    denominator); ``epsilon`` must be a rational.
    """
    lo, hi = window
    eps = Fraction(epsilon)
    for m in range(lo, hi + 1):
        for n in range(lo, hi + 1):
            if 1 + eps * (m + n) == 0:
                raise DenominatorZeroError(m, n)
    if eps != 0 and (1 / eps).denominator == 1:
        raise ParameterConstraintError(f"1/epsilon = {1 / eps} is an integer")
    prods = {}
    for m in range(lo, hi + 1):
        for n in range(lo, hi + 1):
            c = example46_coefficient(alpha, eps, m, n)
            if c:
                prods[(m, n)] = WittElement({m + n: c})
    return TableSpec(prods, (lo, hi), (lo, hi), "sum", None, f"rational-graded(alpha={alpha}, epsilon={eps})")


def example_47_phi(alpha, mu, nu: int) -> FormulaSpec:
    """L_m o L_n = -(n + alpha) L_{m+n} + mu L_{m+n+nu} over (W, {,})."""
    if nu == 0:
        raise NuZeroError("the shifted example needs nu != 0")
    alpha, mu = Poly.coerce(alpha), Poly.coerce(mu)
    return FormulaSpec(
        phi=lambda m, n: -(alpha + n),
        rho=lambda m, n: mu,
        nu=nu,
        witt_role="sum",
        label=f"affine-shift(alpha={alpha}, mu={mu}, nu={nu})",
        param_names=alpha.params() | mu.params(),
    )


# -- module actions -----------------------------------------------------------

class ModuleElement(WittElement):
    """Element of the module with basis v_n (same storage as WittElement)."""

    __slots__ = ()

    def __str__(self):
        return super().__str__().replace("L[", "v[")


# action name -> catalog structure whose left multiplication gives L_m . v_n
MODULE_CASES = {
    "LP1": "P1",
    "LP3a": "P3a",
    "LP5": "P5",
    "LNP1": "NP1",
    "LNP3": "NP3",
    "NP4-action": "NP4",
    "NP5-action": "NP5",
}


def module_structure(name: str, nu: int | None = None) -> PostLieSpec:
    if name not in MODULE_CASES:
        raise UnknownNameError(f"unknown module action {name!r}; expected one of {sorted(MODULE_CASES)}")
    return catalog_lookup(MODULE_CASES[name], nu).spec


def module_action(name: str, m: int, n: int, nu: int | None = None) -> ModuleElement:
    """L_m . v_n for one of the listed module structures."""
    spec = module_structure(name, nu)
    return ModuleElement(dict(spec.basis_product(m, n)))


# -- JSON ---------------------------------------------------------------------

def spec_to_json(spec: PostLieSpec) -> dict:
    if isinstance(spec, GradedSpec):
        return {"variant": "graded", "witt_role": spec.witt_role, "f": spec.f.to_json()}
    if isinstance(spec, ShiftingSpec):
        return {"variant": "shifting", "witt_role": spec.witt_role, "nu": spec.nu,
                "f": spec.f.to_json(), "g": spec.g.to_json()}
    if isinstance(spec, TableSpec):
        return {"variant": "table", "witt_role": spec.witt_role,
                "m_range": list(spec.m_range), "n_range": list(spec.n_range)}
    return {"variant": "formula", "witt_role": spec.witt_role, "label": spec.label}


def spec_from_json(data: dict) -> PostLieSpec:
    v = data.get("variant")
    role = data.get("witt_role", "bracket")
    if v == "graded":
        return GradedSpec(IndexFunction.from_json(data["f"]), role)
    if v == "shifting":
        return ShiftingSpec(IndexFunction.from_json(data["f"]), IndexFunction.from_json(data["g"]),
                            int(data["nu"]), role)
    raise UnsupportedVariantError(f"cannot rebuild a {v!r} spec from a descriptor alone")


def describe_cases(spec: PostLieSpec) -> str:
    """Case list of L_m o L_n by regions of m, for human comparison."""
    if isinstance(spec, GradedSpec):
        f, g, nu = spec.f, ZERO_FUNCTION, 0
    elif isinstance(spec, ShiftingSpec):
        f, g, nu = spec.f, spec.g, spec.nu
    else:
        raise UnsupportedVariantError("case lists are available for graded and shifting specs")
    cuts = sorted({lo for lo, _, _ in f.regions() + g.regions() if lo is not None})
    bounds = [None] + cuts
    lines = []
    for i, lo in enumerate(bounds):
        hi = bounds[i + 1] - 1 if i + 1 < len(bounds) else None
        probe = lo if lo is not None else (hi if hi is not None else 0)
        fv, gv = f(probe), g(probe)
        terms = []
        if fv:
            terms.append(_coef_text(-fv, "n-m") + "L_{m+n}")
        if gv:
            s = "" if nu == 0 else (f"+{nu}" if nu > 0 else str(nu))
            terms.append(_coef_text(gv, f"m-n{s}") + "L_{m+n" + s + "}")
        body = terms[0] if terms else "0"
        for t in terms[1:]:
            body += " - " + t[1:] if t.startswith("-") else " + " + t
        if lo is None and hi is None:
            cond = "all m"
        elif lo is None:
            cond = f"m <= {hi}"
        elif hi is None:
            cond = f"m >= {lo}"
        elif lo == hi:
            cond = f"m = {lo}"
        else:
            cond = f"{lo} <= m <= {hi}"
        lines.append(f"  {body},  {cond}")
    return "\n".join(lines)


def _coef_text(c: Poly, linear: str) -> str:
    s = str(c)
    if s == "1":
        return f"({linear})"
    if s == "-1":
        return f"-({linear})"
    if len(c.items()) == 1:
        return f"{s}({linear})"
    return f"({s})({linear})"
