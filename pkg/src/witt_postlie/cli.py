"""Command-line front end.

Exit status: 0 on success, 1 when a verification fails, 2 on usage or
contract errors.

    witt-postlie verify --structure NP5 --nu -2 --window -8..8
    witt-postlie classify graded --window -3..3
    witt-postlie classify shifting --family P5 --nu -2 --window -8..8
    witt-postlie transport --structure P5
    witt-postlie rb check --operator MR8 --window -8..8
    witt-postlie rb derive --operator R5
    witt-postlie export --structure P2 --window -1..1 --out p2.json
    witt-postlie import p2.json --verify-window -1..0
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import catalog as cat
from . import classify as cls
from . import rota_baxter as rb
from . import serialize
from . import verify as ver
from .errors import ContractError, WittError
from .exact_arith import PARAMS, parse_rational

BUDGET_ENV = "WITT_POSTLIE_BUDGET"


class _UsageError(Exception):
    pass


def _window(text):
    try:
        return ver.Window.parse(text)
    except ContractError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _param(text):
    name, sep, value = text.partition("=")
    name = name.strip()
    if not sep or name not in PARAMS:
        raise argparse.ArgumentTypeError(f"expected name=rational with name in {', '.join(PARAMS)}, got {text!r}")
    try:
        return name, parse_rational(value)
    except ContractError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _nu_list(text):
    """An integer or an inclusive range lo..hi; zero is skipped in ranges."""
    if ".." in text:
        w = _window(text)
        return [k for k in w if k != 0]
    try:
        return [int(text)]
    except ValueError:
        raise argparse.ArgumentTypeError(f"nu must be an integer or lo..hi, got {text!r}")


def _assignment(args) -> dict:
    return dict(args.param or [])


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        out = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    else:
        out = text.rstrip("\n") + "\n"
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)


# -- verify -------------------------------------------------------------------

def _resolve_spec(args):
    """The spec named on the command line, parameters substituted."""
    params = _assignment(args)
    if args.example:
        if args.example == "rational-graded":
            alpha = params.get("alpha", Fraction(0))
            eps = params.get("epsilon", Fraction(0))
            win = ver.covering_window(args.window)
            return f"rational-graded(alpha={alpha}, epsilon={eps})", cat.example_46_phi(alpha, eps, win)
        if args.example == "affine-shift":
            from .exact_arith import Poly
            alpha = params.get("alpha", Poly.var("alpha"))
            mu = params.get("mu", Poly.var("mu"))
            return "affine-shift", cat.example_47_phi(alpha, mu, args.nu if args.nu is not None else 1)
        raise _UsageError(f"unknown example {args.example!r}")
    if not args.structure:
        raise _UsageError("one of --structure, --example or --module is required")
    entry = cat.catalog_lookup(args.structure, args.nu)
    spec = entry.spec
    if params:
        spec = spec.subs(params)
    return entry.name, spec


def cmd_verify(args) -> int:
    w = args.window
    if args.module:
        rep = ver.check_module(args.module, w, args.nu)
        _emit(args, {"module": args.module, "reports": [rep.to_json()], "passed": rep.passed}, rep.summary())
        return 0 if rep.passed else 1
    name, spec = _resolve_spec(args)
    reports = [ver.check_postlie(spec, w), ver.check_postlie_sum(spec, w), ver.check_jacobi(spec, w)]
    if isinstance(spec, cat.ShiftingSpec):
        reports.append(ver.check_shifting_equations(spec.f, spec.g, spec.nu, w))
    elif isinstance(spec, cat.GradedSpec):
        reports.append(ver.check_graded_equation(spec.f, w))
    ok = all(r.passed for r in reports)
    lines = [f"{name}" + (f" (nu={spec.nu})" if getattr(spec, "nu", None) else "")]
    if isinstance(spec, (cat.GradedSpec, cat.ShiftingSpec)):
        lines.append("L_m o L_n =")
        lines.append(cat.describe_cases(spec))
    lines += [r.summary() for r in reports]
    for r in reports:
        for res in r.residuals[:3]:
            lines.append(f"  witness {res.identity_id} at {res.indices}: {res.value}")
    _emit(args, {"structure": name, "passed": ok, "reports": [r.to_json() for r in reports]}, "\n".join(lines))
    return 0 if ok else 1


# -- classify -----------------------------------------------------------------

def _budget(args) -> int:
    if args.budget is not None:
        return args.budget
    env = os.environ.get(BUDGET_ENV)
    if env:
        try:
            return int(env)
        except ValueError:
            raise _UsageError(f"{BUDGET_ENV} must be an integer, got {env!r}")
    return cls.DEFAULT_BUDGET


def cmd_classify(args) -> int:
    if args.mode == "graded":
        rep = cls.classify_graded(args.window, budget=_budget(args))
        lines = [f"graded classification on {rep.window}: {len(rep.solutions)} solutions"]
        for s, m in zip(rep.solutions, rep.matched_catalog):
            vals = " ".join(f"{k}:{v}" for k, v in s.f_values)
            f0 = s.f0_constraint if s.f0_constraint == cls.FREE else f"= {s.f0_constraint}"
            lines.append(f"  {m:10s} f(0) {f0:6s} {vals}")
        _emit(args, rep.to_json(), "\n".join(lines))
        return 0
    families = args.family or list(cat.GRADED_NAMES)
    nus = [k for spec in (args.nu or [[-1]]) for k in spec]
    reports, lines = [], []
    for fam in families:
        for nu in nus:
            rep = cls.classify_shifting(fam, nu, args.window)
            reports.append(rep.to_json())
            lines.append(f"{rep.family} nu={nu} on {rep.window}: {len(rep.solutions)} rays"
                         + (f" [{', '.join(rep.flags)}]" if rep.flags else ""))
            for r, m in zip(rep.solutions, rep.matched_catalog):
                gam = ", ".join(f"g({k})={v}" for k, v in r.gamma)
                f0 = "" if r.f0 is None else f" f(0)={r.f0}"
                lines.append(f"  {m:10s}{f0} {gam} (nullspace dim {r.nullspace_dim})")
    payload = reports[0] if len(reports) == 1 else {"reports": reports}
    _emit(args, payload, "\n".join(lines))
    return 0


# -- transport ----------------------------------------------------------------

def cmd_transport(args) -> int:
    entry = cat.catalog_lookup(args.structure, args.nu)
    if args.epsilon is None:
        out = cat.transport_tau(entry.spec)
        how = "tau: L_m -> -L_{-m}"
    else:
        out = cat.transport_scaling(entry.spec, args.epsilon, args.c)
        how = f"L_m -> {args.epsilon} * {args.c}^m L_{{{args.epsilon}m}}"
    hits = cat.identify(out)
    names = [f"{n}" + (f" (nu={nu})" if nu else "") for n, nu in hits]
    payload = {"structure": entry.name, "map": how, "image": cat.spec_to_json(out), "matches": names}
    text = f"{entry.name} under {how}\n{cat.describe_cases(out)}\nmatches: {', '.join(names) or 'none'}"
    _emit(args, payload, text)
    return 0


# -- Rota-Baxter --------------------------------------------------------------

def cmd_rb(args) -> int:
    entry = rb.rb_catalog_lookup(args.operator, args.nu)
    op = entry.operator.subs(_assignment(args)) if args.param else entry.operator
    if args.action == "check":
        rep = rb.check_weight1(op, args.window)
        _emit(args, {"operator": entry.name, "nu": op.nu or None, "report": rep.to_json()}, rep.summary())
        return 0 if rep.passed else 1
    spec = rb.derive_postlie(op)
    hits = cat.identify(spec)
    names = [n for n, _ in hits]
    payload = {"operator": entry.name, "nu": op.nu or None, "postlie": cat.spec_to_json(spec), "matches": names}
    _emit(args, payload, " ".join(names) if names else "unmatched")
    return 0


# -- export / import ------------------------------------------------------------

def cmd_export(args) -> int:
    w = args.window
    if args.operator:
        entry = rb.rb_catalog_lookup(args.operator, args.nu)
        scf = serialize.export_rotabaxter(entry.operator, w, entry.name)
    else:
        if not args.structure:
            raise _UsageError("export needs --structure or --operator")
        entry = cat.catalog_lookup(args.structure, args.nu)
        fn = serialize.export_liealgebra if args.kind == "liealgebra" else serialize.export_postlie
        scf = fn(entry.spec, w, entry.name)
    text = scf.dumps()
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_import(args) -> int:
    scf = serialize.load(args.file)
    payload = {"name": scf.name, "kind": scf.kind, "window": list(scf.window), "entries": len(scf.entries)}
    lines = [f"{scf.kind} {scf.name} on {scf.window[0]}..{scf.window[1]}: {len(scf.entries)} entries"]
    code = 0
    if args.verify_window is not None:
        spec = scf.to_spec()
        rep = ver.check_postlie(spec, args.verify_window)
        payload["report"] = rep.to_json()
        lines.append(rep.summary())
        code = 0 if rep.passed else 1
    if args.reexport:
        with open(args.reexport, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(scf.dumps())
    _emit(args, payload, "\n".join(lines))
    return code


# -- parser -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="witt-postlie",
                                description="Post-Lie structures and Rota-Baxter operators on the Witt algebra")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, window="-6..6"):
        sp.add_argument("--window", type=_window, default=ver.Window.parse(window), help="index window lo..hi")
        sp.add_argument("--format", choices=("text", "json"), default="text")
        sp.add_argument("--out", help="write output here instead of stdout")

    v = sub.add_parser("verify", help="check the axioms, Jacobi and functional equations")
    v.add_argument("--structure", help="catalog name such as P5 or NP3")
    v.add_argument("--module", help="module action name such as LP5 or NP4-action")
    v.add_argument("--example", choices=("rational-graded", "affine-shift"),
                   help="a non-catalog example; parameters via --param")
    v.add_argument("--nu", type=int)
    v.add_argument("--param", type=_param, action="append", help="name=rational, repeatable")
    common(v)
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("classify", help="rediscover the classification on a window")
    c.add_argument("mode", choices=("graded", "shifting"))
    c.add_argument("--family", action="append", help="graded family for shifting mode, repeatable")
    c.add_argument("--nu", type=_nu_list, action="append", help="integer or lo..hi, repeatable")
    c.add_argument("--budget", type=int, help=f"max graded assignments (env {BUDGET_ENV})")
    common(c, "-3..3")
    c.set_defaults(func=cmd_classify)

    t = sub.add_parser("transport", help="carry a structure along a Witt automorphism")
    t.add_argument("--structure", required=True)
    t.add_argument("--nu", type=int)
    t.add_argument("--epsilon", type=int, choices=(-1, 1), help="use L_m -> eps c^m L_{eps m} (graded only)")
    t.add_argument("--c", type=parse_rational, default=Fraction(1))
    common(t)
    t.set_defaults(func=cmd_transport)

    r = sub.add_parser("rb", help="Rota-Baxter operators of weight 1")
    r.add_argument("action", choices=("check", "derive"))
    r.add_argument("--operator", required=True)
    r.add_argument("--nu", type=int)
    r.add_argument("--param", type=_param, action="append")
    common(r)
    r.set_defaults(func=cmd_rb)

    e = sub.add_parser("export", help="write a structure-constants file")
    e.add_argument("--structure")
    e.add_argument("--operator")
    e.add_argument("--nu", type=int)
    e.add_argument("--kind", choices=("postlie", "liealgebra"), default="postlie")
    e.add_argument("--window", type=_window, default=ver.Window.parse("-3..3"))
    e.add_argument("--out")
    e.set_defaults(func=cmd_export)

    i = sub.add_parser("import", help="read a structure-constants file")
    i.add_argument("file")
    i.add_argument("--verify-window", type=_window, help="check the axioms on this window after import")
    i.add_argument("--reexport", help="write the parsed file back out (canonical form)")
    i.add_argument("--format", choices=("text", "json"), default="text")
    i.add_argument("--out")
    i.set_defaults(func=cmd_import)
    return p


_VALUE_FLAGS = ("--window", "--verify-window", "--nu")


def _join_negative_values(argv):
    """Turn ``--window -8..8`` into ``--window=-8..8`` so argparse does not read a flag."""
    out = []
    it = iter(argv)
    for tok in it:
        if tok in _VALUE_FLAGS:
            nxt = next(it, None)
            if nxt is None:
                out.append(tok)
            else:
                out.append(f"{tok}={nxt}")
        else:
            out.append(tok)
    return out


def main(argv=None) -> int:
    parser = build_parser()
    argv = _join_negative_values(sys.argv[1:] if argv is None else list(argv))
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (WittError, _UsageError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
