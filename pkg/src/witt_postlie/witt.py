"""The Witt algebra: sparse combinations of basis symbols L_m and the bracket."""

from __future__ import annotations

from typing import Callable, Iterable, Mapping

from .errors import IndexOutOfRangeError
from .exact_arith import Poly, ZERO

MAX_INDEX = 10**6


def check_index(m: int) -> int:
    if not isinstance(m, int) or isinstance(m, bool):
        raise TypeError(f"basis index must be an int, got {type(m).__name__}")
    if abs(m) > MAX_INDEX:
        raise IndexOutOfRangeError(f"basis index {m} exceeds |m| <= {MAX_INDEX}")
    return m


class WittElement:
    """Finite linear combination sum_m c_m L_m with :class:`Poly` coefficients.

    Zero coefficients are never stored, so two elements are equal exactly when
    their coefficient maps are equal.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, object] | None = None):
        c = {}
        if coeffs:
            for m, v in coeffs.items():
                v = Poly.coerce(v)
                if v:
                    c[check_index(m)] = v
        self._c = c

    @classmethod
    def _raw(cls, c: dict) -> "WittElement":
        x = cls.__new__(cls)
        x._c = c
        return x

    def coeff(self, m: int) -> Poly:
        return self._c.get(m, ZERO)

    def support(self) -> list[int]:
        return sorted(self._c)

    def items(self):
        """(index, coefficient) pairs sorted by index."""
        return sorted(self._c.items())

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self):
        return bool(self._c)

    def __len__(self):
        return len(self._c)

    def __eq__(self, other):
        if isinstance(other, WittElement):
            return self._c == other._c
        if other == 0:
            return not self._c
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __add__(self, other: "WittElement") -> "WittElement":
        if not isinstance(other, WittElement):
            return NotImplemented
        c = dict(self._c)
        for m, v in other._c.items():
            s = c[m] + v if m in c else v
            if s:
                c[m] = s
            else:
                del c[m]
        return WittElement._raw(c)

    def __neg__(self):
        return WittElement._raw({m: -v for m, v in self._c.items()})

    def __sub__(self, other: "WittElement") -> "WittElement":
        if not isinstance(other, WittElement):
            return NotImplemented
        return self + (-other)

    def scale(self, s) -> "WittElement":
        s = Poly.coerce(s)
        if not s:
            return WittElement._raw({})
        c = {}
        for m, v in self._c.items():
            p = v * s
            if p:
                c[m] = p
        return WittElement._raw(c)

    def __rmul__(self, s):
        return self.scale(s)

    def __mul__(self, s):
        if isinstance(s, WittElement):
            return NotImplemented
        return self.scale(s)

    def __str__(self):
        if not self._c:
            return "0"
        parts = []
        for m, v in self.items():
            s = str(v)
            if s == "1":
                parts.append(f"L[{m}]")
            elif s == "-1":
                parts.append(f"-L[{m}]")
            elif len(v.items()) == 1:
                parts.append(f"{s}*L[{m}]")
            else:
                parts.append(f"({s})*L[{m}]")
        out = parts[0]
        for s in parts[1:]:
            out += " - " + s[1:] if s.startswith("-") else " + " + s
        return out

    def __repr__(self):
        return f"WittElement({str(self)!r})"


ZERO_ELEMENT = WittElement()


def basis(m: int) -> WittElement:
    return WittElement._raw({check_index(m): Poly.const(1)})


def linear_combine(pairs: Iterable[tuple[object, WittElement]]) -> WittElement:
    acc: dict[int, Poly] = {}
    for s, x in pairs:
        s = Poly.coerce(s)
        if not s:
            continue
        for m, v in x._c.items():
            p = v * s
            q = acc[m] + p if m in acc else p
            if q:
                acc[m] = q
            else:
                acc.pop(m, None)
    return WittElement._raw(acc)


def equal(x: WittElement, y: WittElement) -> bool:
    return x == y


BasisProduct = Callable[[int, int], Iterable[tuple[int, Poly]]]


def bilinear(x: WittElement, y: WittElement, on_basis: BasisProduct) -> WittElement:
    """Bilinear extension of a product given on basis pairs.

    ``on_basis(m, n)`` yields ``(index, coefficient)`` pairs describing
    L_m * L_n.
    """
    acc: dict[int, Poly] = {}
    for m, cm in x._c.items():
        for n, cn in y._c.items():
            cmn = cm * cn
            for k, c in on_basis(m, n):
                p = cmn * c
                q = acc[k] + p if k in acc else p
                if q:
                    acc[k] = q
                else:
                    acc.pop(k, None)
    return WittElement._raw(acc)


def bracket_basis(m: int, n: int):
    if m == n:
        return ()
    return ((check_index(m + n), Poly.const(m - n)),)


def bracket(x: WittElement, y: WittElement) -> WittElement:
    """Lie bracket [L_m, L_n] = (m - n) L_{m+n}, extended bilinearly."""
    return bilinear(x, y, bracket_basis)
