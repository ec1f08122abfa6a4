"""Rota-Baxter operators of weight 1 on the Witt algebra.

An operator is R(L_m) = f(m) L_m + g(m) L_{m+nu}; homogeneous operators use
g = 0 and nu = 0.  The weight-1 identity is

    [R(x), R(y)] = R([R(x), y] + [x, R(y)] + [x, y])

and x o y = [R(x), y] is then a post-Lie product with the same f, g, nu.

The catalog below is transcribed from the printed operator lists on its own,
not copied from the post-Lie catalog, so that ``derive_postlie`` round trips
are a real cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iproduct

from .catalog import GradedSpec, PostLieSpec, ShiftingSpec, identify
from .errors import ContractError, InadmissibleNuError, UnknownNameError
from .exact_arith import Poly
from .index_function import IndexFunction, ZERO_FUNCTION
from .verify import VerifyReport, Window, _acc, _element
from .witt import WittElement, bracket_basis, check_index

_A = Poly.var("a")
_B = Poly.var("b")


@dataclass(frozen=True)
class RBOperator:
    f: IndexFunction
    g: IndexFunction = ZERO_FUNCTION
    nu: int = 0

    def __post_init__(self):
        if self.g.is_zero() and self.nu != 0:
            raise ContractError("a homogeneous operator (g = 0) must have nu = 0")
        if not self.g.is_zero() and self.nu == 0:
            raise ContractError("an operator with g != 0 needs a nonzero nu")

    @property
    def homogeneous(self) -> bool:
        return self.nu == 0

    def on_basis(self, m: int) -> tuple:
        out = []
        c = self.f(m)
        if c:
            out.append((check_index(m), c))
        if self.nu:
            d = self.g(m)
            if d:
                out.append((check_index(m + self.nu), d))
        return tuple(out)

    def apply(self, x: WittElement) -> WittElement:
        out = {}
        for m, c in x.items():
            _acc(out, self.on_basis(m), c)
        return _element(out)

    def subs(self, assignment) -> "RBOperator":
        return RBOperator(self.f.subs(assignment), self.g.subs(assignment), self.nu)

    def params(self) -> frozenset:
        return self.f.params() | self.g.params()

    def to_json(self) -> dict:
        return {"f": self.f.to_json(), "g": self.g.to_json(), "nu": self.nu}

    @classmethod
    def from_json(cls, data: dict) -> "RBOperator":
        g = IndexFunction.from_json(data["g"]) if data.get("g") else ZERO_FUNCTION
        return cls(IndexFunction.from_json(data["f"]), g, int(data.get("nu", 0)))


def apply(R: RBOperator, x: WittElement) -> WittElement:
    return R.apply(x)


def check_weight1(R: RBOperator, w) -> VerifyReport:
    """The weight-1 Rota-Baxter identity on every basis pair of ``w``."""
    w = Window.coerce(w)
    rep = VerifyReport("rota_baxter", w)
    img = {}

    def Rb(m):
        r = img.get(m)
        if r is None:
            r = img[m] = R.on_basis(m)
        return r

    def br(u, v):
        out = {}
        for k, c in u:
            for l, d in v:
                _acc(out, bracket_basis(k, l), c * d)
        return tuple(out.items())

    def Rv(u):
        out = {}
        for k, c in u:
            _acc(out, Rb(k), c)
        return out.items()

    for m, n in iproduct(w, w):
        x, y = ((m, Poly.const(1)),), ((n, Poly.const(1)),)
        inner = {}
        _acc(inner, br(Rb(m), y))
        _acc(inner, br(x, Rb(n)))
        _acc(inner, bracket_basis(m, n))
        r = dict(br(Rb(m), Rb(n)))
        _acc(r, Rv(inner.items()), sign=-1)
        rep.record("rota_baxter", (m, n), _element(r))
    return rep


def derive_postlie(R: RBOperator) -> PostLieSpec:
    """The product x o y = [R(x), y] as a graded or shifting descriptor."""
    if R.homogeneous:
        return GradedSpec(R.f)
    return ShiftingSpec(R.f, R.g, R.nu)


# -- catalog ------------------------------------------------------------------

def _f(*pieces):
    return IndexFunction(pieces)


_MINUS = -1

# Homogeneous operators: R(L_m) = f(m) L_m.
_RB_HOMOGENEOUS = {
    "R1": _f(("otherwise", None, 0)),
    "R2": _f(("otherwise", None, _MINUS)),
    # Printed as R(L_0) = a L_0; stored as -a so that it derives P3a exactly.
    "R3a": _f((">", 0, _MINUS), ("==", 0, -_A), ("otherwise", None, 0)),
    "R4a": _f(("<", 0, _MINUS), ("==", 0, -_A), ("otherwise", None, 0)),
    "R5": _f((">=", 2, _MINUS), ("otherwise", None, 0)),
    "R6": _f(("<=", 1, _MINUS), ("otherwise", None, 0)),
    # The printed lists for R7 and R8 are exchanged relative to P7 and P8.
    "R7": _f(("<=", -2, _MINUS), ("otherwise", None, 0)),
    "R8": _f((">=", -1, _MINUS), ("otherwise", None, 0)),
}

_F_NONNEG = _f((">=", 0, _MINUS), ("otherwise", None, 0))
_F_POS = _f((">", 0, _MINUS), ("otherwise", None, 0))
_F_NONPOS = _f(("<=", 0, _MINUS), ("otherwise", None, 0))
_F_NEG = _f(("<", 0, _MINUS), ("otherwise", None, 0))


def _at_minus_nu(nu):
    return _f(("==", -nu, -_B), ("otherwise", None, 0))


def _fixed(points):
    return lambda nu: IndexFunction.from_points(points)


# name -> (f, g builder, admissible nu)
_RB_SHIFTING = {
    "NR1": (_F_NONNEG, _at_minus_nu, (1, 2)),
    "NR2": (_F_POS, _at_minus_nu, (-1, -2)),
    "NR3": (_RB_HOMOGENEOUS["R5"], _at_minus_nu, (-2, -3, -4)),
    "NR4": (_RB_HOMOGENEOUS["R5"], _fixed({2: -_B}), (-1,)),
    "NR5": (_RB_HOMOGENEOUS["R5"], _fixed({2: -_B, 3: -2 * _B}), (-2,)),
    "NR6": (_RB_HOMOGENEOUS["R6"], _at_minus_nu, (-2, -3, -4)),
    "NR7": (_RB_HOMOGENEOUS["R6"], _fixed({2: -_B}), (-1,)),
    "NR8": (_RB_HOMOGENEOUS["R6"], _fixed({2: -_B, 3: -2 * _B}), (-2,)),
    "MR1": (_F_NONPOS, _at_minus_nu, (-1, -2)),
    "MR2": (_F_NEG, _at_minus_nu, (1, 2)),
    "MR3": (_RB_HOMOGENEOUS["R7"], _at_minus_nu, (2, 3, 4)),
    "MR4": (_RB_HOMOGENEOUS["R7"], _fixed({-2: -_B}), (1,)),
    "MR5": (_RB_HOMOGENEOUS["R7"], _fixed({-2: -_B, -3: -2 * _B}), (2,)),
    "MR6": (_RB_HOMOGENEOUS["R8"], _at_minus_nu, (2, 3, 4)),
    "MR7": (_RB_HOMOGENEOUS["R8"], _fixed({-2: -_B}), (1,)),
    "MR8": (_RB_HOMOGENEOUS["R8"], _fixed({-2: -_B, -3: -2 * _B}), (2,)),
}

RB_HOMOGENEOUS_NAMES = tuple(_RB_HOMOGENEOUS)
RB_SHIFTING_NAMES = tuple(_RB_SHIFTING)
_RB_ALIASES = {"R3": "R3a", "R4": "R4a"}


@dataclass(frozen=True)
class RBCatalogEntry:
    name: str
    operator: RBOperator
    admissible_nu: tuple = ()

    @property
    def postlie_name(self) -> str:
        """Name of the post-Lie entry with the same index (R5 -> P5, NR3 -> NP3)."""
        return self.name.replace("R", "P", 1) if self.name.startswith("R") else self.name[0] + "P" + self.name[2:]

    def to_json(self) -> dict:
        return {"name": self.name, "admissible_nu": list(self.admissible_nu),
                "operator": self.operator.to_json()}


def rb_canonical_name(name: str) -> str:
    name = _RB_ALIASES.get(name.strip(), name.strip())
    if name not in _RB_HOMOGENEOUS and name not in _RB_SHIFTING:
        raise UnknownNameError(f"unknown Rota-Baxter operator {name!r}")
    return name


def rb_catalog_lookup(name: str, nu: int | None = None) -> RBCatalogEntry:
    name = rb_canonical_name(name)
    if name in _RB_HOMOGENEOUS:
        if nu not in (None, 0):
            raise InadmissibleNuError(f"{name} is homogeneous and takes no shift nu")
        return RBCatalogEntry(name, RBOperator(_RB_HOMOGENEOUS[name]))
    f, gfun, nus = _RB_SHIFTING[name]
    if nu is None:
        if len(nus) != 1:
            raise InadmissibleNuError(f"{name} needs nu, one of {list(nus)}")
        nu = nus[0]
    if nu not in nus:
        raise InadmissibleNuError(f"nu={nu} is not admissible for {name}; expected one of {list(nus)}")
    return RBCatalogEntry(name, RBOperator(f, gfun(nu), nu), nus)


def rb_all_entries():
    for name in RB_HOMOGENEOUS_NAMES:
        yield rb_catalog_lookup(name)
    for name in RB_SHIFTING_NAMES:
        for nu in _RB_SHIFTING[name][2]:
            yield rb_catalog_lookup(name, nu)


def identify_derived(R: RBOperator) -> list:
    """Post-Lie catalog entries equal to derive_postlie(R)."""
    return identify(derive_postlie(R))
