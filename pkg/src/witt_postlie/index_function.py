"""Piecewise-constant integer functions such as f(m) and g(m)."""

from __future__ import annotations

from bisect import bisect_right
from typing import Iterable, Mapping

from .errors import ContractError
from .exact_arith import Poly, ZERO

GUARDS = (">=", "<=", "==", ">", "<", "otherwise")


def _holds(op: str, k: int | None, m: int) -> bool:
    if op == ">=":
        return m >= k
    if op == "<=":
        return m <= k
    if op == "==":
        return m == k
    if op == ">":
        return m > k
    if op == "<":
        return m < k
    return True


class IndexFunction:
    """A function Z -> Poly given by guarded pieces; the first matching piece wins.

    >>> f = IndexFunction([(">=", 2, -1), ("otherwise", None, 0)])
    >>> [str(f(m)) for m in (1, 2, 3)]
    ['0', '-1', '-1']

    Internally the pieces are flattened to a sorted list of breakpoints with
    one value per region, which gives structural equality and O(log n)
    evaluation.
    """

    __slots__ = ("pieces", "_cuts", "_vals", "_hash")

    def __init__(self, pieces: Iterable[tuple]):
        norm = []
        for piece in pieces:
            op, k, value = piece
            if op not in GUARDS:
                raise ContractError(f"unknown guard {op!r}")
            if op != "otherwise" and not isinstance(k, int):
                raise ContractError(f"guard {op!r} needs an integer bound")
            norm.append((op, None if op == "otherwise" else k, Poly.coerce(value)))
        self.pieces = tuple(norm)
        bounds = sorted({k for op, k, _ in norm if k is not None})
        # Sample points: each bound and its neighbours separate every region.
        samples = sorted({b + d for b in bounds for d in (-1, 0, 1)} | {0})
        vals = []
        for s in samples:
            v = self._lookup(s)
            if v is None:
                raise ContractError(f"pieces do not cover the integer {s}")
            vals.append(v)
        # Regions: (-inf, samples[0]] takes vals[0], then each sample point
        # starts a region extending to the next sample.
        cuts, out = [], [vals[0]]
        for s, v in zip(samples[1:], vals[1:]):
            if v != out[-1]:
                cuts.append(s)
                out.append(v)
        self._cuts = tuple(cuts)
        self._vals = tuple(out)
        self._hash = None

    def _lookup(self, m):
        for op, k, v in self.pieces:
            if _holds(op, k, m):
                return v
        return None

    @classmethod
    def constant(cls, value) -> "IndexFunction":
        return cls([("otherwise", None, value)])

    @classmethod
    def from_points(cls, points: Mapping[int, object], default=0) -> "IndexFunction":
        pieces = [("==", m, v) for m, v in sorted(points.items())]
        pieces.append(("otherwise", None, default))
        return cls(pieces)

    def __call__(self, m: int) -> Poly:
        return self._vals[bisect_right(self._cuts, m)]

    def regions(self) -> list[tuple[int | None, int | None, Poly]]:
        """Maximal runs ``(lo, hi, value)``; ``None`` marks an infinite end."""
        out = []
        lo = None
        for i, v in enumerate(self._vals):
            hi = self._cuts[i] - 1 if i < len(self._cuts) else None
            out.append((lo, hi, v))
            if i < len(self._cuts):
                lo = self._cuts[i]
        return out

    def is_zero(self) -> bool:
        return len(self._vals) == 1 and self._vals[0].is_zero()

    def params(self) -> frozenset:
        out = frozenset()
        for v in self._vals:
            out |= v.params()
        return out

    def with_value(self, m: int, value) -> "IndexFunction":
        return IndexFunction((("==", m, value),) + self.pieces)

    def reflect(self) -> "IndexFunction":
        """The function m -> f(-m)."""
        flip = {">=": "<=", "<=": ">=", ">": "<", "<": ">", "==": "==", "otherwise": "otherwise"}
        return IndexFunction(
            (flip[op], None if k is None else -k, v) for op, k, v in self.pieces
        )

    def compose_sign(self, epsilon: int) -> "IndexFunction":
        if epsilon == 1:
            return self
        if epsilon == -1:
            return self.reflect()
        raise ContractError("epsilon must be +1 or -1")

    def subs(self, assignment) -> "IndexFunction":
        return IndexFunction((op, k, v.subs(assignment)) for op, k, v in self.pieces)

    def map_values(self, fn) -> "IndexFunction":
        return IndexFunction((op, k, fn(v)) for op, k, v in self.pieces)

    def canonical_pieces(self) -> list[tuple]:
        """Pieces rebuilt from the regions: a deterministic normal form."""
        out = []
        regs = self.regions()
        for lo, hi, v in regs:
            if lo is None and hi is None:
                out.append(("otherwise", None, v))
            elif lo is None:
                out.append(("<=", hi, v))
            elif hi is None:
                out.append((">=", lo, v))
            elif lo == hi:
                out.append(("==", lo, v))
            else:
                for m in range(lo, hi + 1):
                    out.append(("==", m, v))
        return out

    def to_json(self) -> list:
        return [
            {"guard": op, "k": k, "value": str(v)} if k is not None else {"guard": op, "value": str(v)}
            for op, k, v in self.canonical_pieces()
        ]

    @classmethod
    def from_json(cls, data: list) -> "IndexFunction":
        return cls((d["guard"], d.get("k"), Poly.parse(d["value"])) for d in data)

    def describe(self, var: str = "m") -> str:
        parts = []
        for lo, hi, v in self.regions():
            if lo is None and hi is None:
                cond = "all " + var
            elif lo is None:
                cond = f"{var} <= {hi}"
            elif hi is None:
                cond = f"{var} >= {lo}"
            elif lo == hi:
                cond = f"{var} = {lo}"
            else:
                cond = f"{lo} <= {var} <= {hi}"
            parts.append(f"{v} for {cond}")
        return "; ".join(parts)

    def __eq__(self, other):
        if not isinstance(other, IndexFunction):
            return NotImplemented
        return self._cuts == other._cuts and self._vals == other._vals

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._cuts, self._vals))
        return self._hash

    def __repr__(self):
        return f"IndexFunction({self.describe()!r})"


ZERO_FUNCTION = IndexFunction.constant(ZERO)
