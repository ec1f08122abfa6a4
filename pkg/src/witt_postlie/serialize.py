"""Structure-constant files: deterministic JSON export and strict import.

Layout (schema_version "1")::

    {
      "schema_version": "1",
      "kind": "postlie" | "rotabaxter" | "liealgebra",
      "name": "NP4",
      "params": ["b"],
      "nu": -1,
      "witt_role": "bracket",
      "window": [-3, 3],
      "entries": [{"m": -3, "n": -3, "terms": [{"index": -6, "coeff": "-1"}]}, ...]
    }

Rota-Baxter files list one entry per m (no "n").  Entries are sorted by
(m, n), terms by index, and every coefficient is in canonical text form;
import rejects anything else so that export, import, export is byte-identical.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .catalog import PostLieSpec, TableSpec, circ, sum_bracket
from .errors import ParseError, SchemaError
from .exact_arith import Poly
from .verify import Window
from .witt import WittElement, basis

SCHEMA_VERSION = "1"
KINDS = ("postlie", "rotabaxter", "liealgebra")
_KEYS = ("schema_version", "kind", "name", "params", "nu", "witt_role", "window", "entries")


@dataclass
class StructureConstantsFile:
    kind: str
    name: str
    window: tuple
    entries: dict = field(default_factory=dict)  # (m, n) or (m,) -> WittElement
    params: tuple = ()
    nu: int | None = None
    witt_role: str = "bracket"

    def to_dict(self) -> dict:
        rows = []
        for key in sorted(self.entries):
            row = {"m": key[0]}
            if self.kind != "rotabaxter":
                row["n"] = key[1]
            row["terms"] = [{"index": k, "coeff": str(c)} for k, c in self.entries[key].items()]
            rows.append(row)
        return {
            "schema_version": SCHEMA_VERSION,
            "kind": self.kind,
            "name": self.name,
            "params": sorted(self.params),
            "nu": self.nu,
            "witt_role": self.witt_role,
            "window": [self.window[0], self.window[1]],
            "entries": rows,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    def to_spec(self) -> TableSpec:
        """The post-Lie table of a "postlie" file."""
        if self.kind != "postlie":
            raise SchemaError(f"a {self.kind!r} file does not describe a post-Lie product")
        lo, hi = self.window
        prods = {k: v for k, v in self.entries.items() if v}
        return TableSpec(prods, (lo, hi), (lo, hi), self.witt_role, self.nu, self.name)


def export_postlie(spec: PostLieSpec, w, name: str) -> StructureConstantsFile:
    w = Window.coerce(w)
    entries = {(m, n): circ(spec, basis(m), basis(n)) for m in w for n in w}
    return StructureConstantsFile("postlie", name, (w.lo, w.hi), entries, tuple(sorted(spec.params())),
                                  getattr(spec, "nu", None) or None, spec.witt_role)


def export_liealgebra(spec: PostLieSpec, w, name: str) -> StructureConstantsFile:
    """The induced bracket {L_m, L_n} on the window."""
    w = Window.coerce(w)
    entries = {(m, n): sum_bracket(spec, basis(m), basis(n)) for m in w for n in w}
    return StructureConstantsFile("liealgebra", name, (w.lo, w.hi), entries, tuple(sorted(spec.params())),
                                  getattr(spec, "nu", None) or None, spec.witt_role)


def export_rotabaxter(op, w, name: str) -> StructureConstantsFile:
    w = Window.coerce(w)
    entries = {(m,): op.apply(basis(m)) for m in w}
    return StructureConstantsFile("rotabaxter", name, (w.lo, w.hi), entries, tuple(sorted(op.params())),
                                  op.nu or None)


def loads(text: str) -> StructureConstantsFile:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    if not isinstance(data, dict):
        raise SchemaError("top level must be an object")
    if data.get("schema_version") != SCHEMA_VERSION:
        raise SchemaError(f"unsupported schema_version {data.get('schema_version')!r}; expected {SCHEMA_VERSION!r}")
    missing = [k for k in _KEYS if k not in data]
    if missing:
        raise SchemaError(f"missing keys: {', '.join(missing)}")
    extra = sorted(set(data) - set(_KEYS))
    if extra:
        raise SchemaError(f"unexpected keys: {', '.join(extra)}")
    kind = data["kind"]
    if kind not in KINDS:
        raise SchemaError(f"kind must be one of {KINDS}, got {kind!r}")
    if data["witt_role"] not in ("bracket", "sum"):
        raise SchemaError("witt_role must be 'bracket' or 'sum'")
    win = data["window"]
    if not (isinstance(win, list) and len(win) == 2 and all(isinstance(x, int) for x in win) and win[0] <= win[1]):
        raise SchemaError("window must be [lo, hi] with lo <= hi")
    nu = data["nu"]
    if nu is not None and not isinstance(nu, int):
        raise SchemaError("nu must be an integer or null")
    params = data["params"]
    if not isinstance(params, list) or params != sorted(params):
        raise SchemaError("params must be a sorted list")
    entries = {}
    prev = None
    for i, row in enumerate(data["entries"]):
        key = _entry_key(row, kind, i)
        if prev is not None and key <= prev:
            raise ParseError(f"entry {i} at {list(key)} is out of canonical (m, n) order")
        prev = key
        if not all(win[0] <= k <= win[1] for k in key):
            raise SchemaError(f"entry {i} at {list(key)} lies outside the window {win}")
        entries[key] = _terms(row.get("terms"), i)
    return StructureConstantsFile(kind, data["name"], (win[0], win[1]), entries, tuple(params), nu,
                                  data["witt_role"])


def _entry_key(row, kind, i):
    if not isinstance(row, dict):
        raise SchemaError(f"entry {i} must be an object")
    want = {"m", "terms"} if kind == "rotabaxter" else {"m", "n", "terms"}
    if set(row) != want:
        raise SchemaError(f"entry {i} must have exactly the keys {sorted(want)}")
    key = (row["m"],) if kind == "rotabaxter" else (row["m"], row["n"])
    if not all(isinstance(k, int) and not isinstance(k, bool) for k in key):
        raise SchemaError(f"entry {i} indices must be integers")
    return key


def _terms(terms, i) -> WittElement:
    if not isinstance(terms, list):
        raise SchemaError(f"entry {i} terms must be a list")
    coeffs = {}
    prev = None
    for j, t in enumerate(terms):
        if not isinstance(t, dict) or set(t) != {"index", "coeff"}:
            raise SchemaError(f"entry {i} term {j} must have keys index and coeff")
        k, text = t["index"], t["coeff"]
        if not isinstance(k, int) or not isinstance(text, str):
            raise SchemaError(f"entry {i} term {j} has wrong types")
        if prev is not None and k <= prev:
            raise ParseError(f"entry {i} terms are not sorted by index")
        prev = k
        c = Poly.parse(text)
        if str(c) != text:
            raise ParseError(f"entry {i} term {j}: coefficient {text!r} is not canonical (expected {str(c)!r})")
        if not c:
            raise ParseError(f"entry {i} term {j}: zero coefficients are not stored")
        coeffs[k] = c
    return WittElement(coeffs)


def load(path) -> StructureConstantsFile:
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())


def dump(scf: StructureConstantsFile, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(scf.dumps())
