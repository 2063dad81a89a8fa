"""Command line driver.

Verbs: `check` runs the CaTT checker over a file of declarations,
`translate` emits the computad of every named context as JSON, `tree`
converts between the four faces of a pasting diagram (Batanin tree,
zigzag sequence, pasting context, globular set), `roundtrip` translates
contexts to computads and back and reports the isomorphism, and
`enumerate` lists trees or pasting contexts with counts.

Exit codes: 0 ok, 1 check failure, 2 parse failure, 3 internal invariant
breach.  Output is deterministic: JSON is emitted with sorted keys and
all ids are canonical.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from . import catt, pasting, surface, translation
from .batanin import format_tree, parse_tree, pos, tree_of_zig, zig
from .computad import computad_to_json, iso_computads
from .errors import KernelError
from .globular import cardinal, globset_from_json, globset_to_json
from .pasting import enumerate_psctxs
from .surface import (
    Binding,
    CheckDecl,
    CohDecl,
    CohInfo,
    CtxDecl,
    ElabError,
    Env,
    ParseError,
    SourceFile,
    SrcArrow,
    SrcStar,
    SrcVar,
    elab_bindings,
    elab_term,
    elab_type,
    print_bindings,
)
from .syntax import Arr, Coh, Ctx, Obj, identity_sub, subst_ty

OK, CHECK_FAILED, PARSE_FAILED, INTERNAL = 0, 1, 2, 3

DEFAULT_MAX_POSITIONS = 9


@dataclass(frozen=True)
class Diagnostic:
    severity: str
    span: tuple
    kind: str
    message: str

    def text(self) -> str:
        return f"{self.span[0]}:{self.span[1]}: {self.severity}[{self.kind}]: {self.message}"

    def to_json(self) -> dict:
        return {
            "severity": self.severity,
            "line": self.span[0],
            "column": self.span[1],
            "kind": self.kind,
            "message": self.message,
        }


def _diag_from_error(span: tuple, e: Exception) -> Diagnostic:
    message = getattr(e, "message", None) or str(e)
    return Diagnostic("error", span, type(e).__name__, message)


def _dump_json(value) -> str:
    return json.dumps(value, sort_keys=True, indent=2)


def max_positions() -> int:
    raw = os.environ.get("CATTKIT_MAX_POSITIONS")
    if raw is None:
        return DEFAULT_MAX_POSITIONS
    return int(raw)


# --------------------------------------------------------------------------
# file processing shared by check/translate/roundtrip

@dataclass
class Processed:
    env: Env
    order: list  # declaration results in file order: (kind, name, payload)
    diagnostics: list


def process_file(src: SourceFile) -> Processed:
    """Elaborate and check every declaration, collecting diagnostics."""
    env = Env()
    order = []
    diags = []
    for decl in src.decls:
        try:
            match decl:
                case CtxDecl(name, bindings):
                    ctx, names = elab_bindings(env, bindings, decl.span)
                    checked = catt.check_ctx(ctx)
                    env.declare_ctx(name, ctx, names, decl.span)
                    order.append(("ctx", name, checked))
                case CohDecl(name, bindings, src_ty):
                    ctx, names = elab_bindings(env, bindings, decl.span)
                    checked = catt.check_ctx(ctx)
                    ty = elab_type(env, names, ctx, src_ty)
                    if not isinstance(ty, Arr):
                        raise ElabError(decl.span, "a coherence type must be an arrow type")
                    term = Coh(ctx, ty, identity_sub(len(ctx)))
                    catt.check_coh(checked, term, subst_ty(ty, term.sub))
                    env.declare_coh(name, CohInfo(ctx, names, ty), decl.span)
                    order.append(("coh", name, (checked, ty)))
                case CheckDecl(src_term, ctx_name, src_ty):
                    if ctx_name not in env.ctxs:
                        raise ElabError(decl.span, f"unknown context {ctx_name!r}")
                    ctx, names = env.ctxs[ctx_name]
                    checked = catt.check_ctx(ctx)
                    term = elab_term(env, names, ctx, src_term)
                    ty = elab_type(env, names, ctx, src_ty)
                    catt.check_ty(checked, ty)
                    catt.check_tm(checked, term, ty)
                    order.append(("check", ctx_name, (term, ty)))
        except (ElabError, KernelError) as e:
            span = decl.span if isinstance(e, KernelError) else e.span
            diags.append(_diag_from_error(span, e))
    return Processed(env, order, diags)


def _load(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        return surface.parse(fh.read())


# --------------------------------------------------------------------------
# commands

def cmd_check(args) -> int:
    try:
        src = _load(args.file)
    except ParseError as e:
        if args.format == "json":
            print(_dump_json({"status": "parse-error",
                              "diagnostics": [_diag_from_error(e.span, e).to_json()]}))
        else:
            print(_diag_from_error(e.span, e).text())
        return PARSE_FAILED
    result = process_file(src)
    if args.format == "json":
        print(_dump_json({
            "status": "ok" if not result.diagnostics else "error",
            "decls": [{"kind": k, "name": n} for k, n, _ in result.order],
            "diagnostics": [d.to_json() for d in result.diagnostics],
        }))
    else:
        for kind, name, _ in result.order:
            print(f"ok {kind} {name}")
        for d in result.diagnostics:
            print(d.text())
    return OK if not result.diagnostics else CHECK_FAILED


def cmd_translate(args) -> int:
    try:
        src = _load(args.file)
    except ParseError as e:
        print(_diag_from_error(e.span, e).text())
        return PARSE_FAILED
    result = process_file(src)
    if result.diagnostics:
        for d in result.diagnostics:
            print(d.text())
        return CHECK_FAILED
    out = {}
    for kind, name, payload in result.order:
        if kind == "ctx":
            out[name] = computad_to_json(translation.r_ctx(payload).comp)
    print(_dump_json({"contexts": out}))
    return OK


def _names_for_psctx(n: int) -> tuple:
    return tuple(f"v{i}" for i in range(n))


def _psctx_to_surface(ctx: Ctx) -> str:
    names = _names_for_psctx(len(ctx))

    def term(t):
        return SrcVar(names[t.idx])

    def ty(a):
        if isinstance(a, Obj):
            return SrcStar()
        return SrcArrow(term(a.src), term(a.tgt), None)

    return print_bindings(tuple(
        Binding(names[i], ty(a)) for i, a in enumerate(ctx)))


def _parse_tree_spec(spec: str, source: str | None):
    """Read any of the four representations and return the Batanin tree."""
    text = spec.strip()
    if source is None:
        if text.startswith("br"):
            source = "tree"
        elif text.startswith("{"):
            source = "globset"
        elif text.startswith("("):
            inner = text[1:].lstrip()
            source = "zigzag" if not inner or inner[0].isdigit() or inner[0] == ")" else "psctx"
        else:
            raise ValueError(f"cannot recognise the input format of {text!r}")
    if source == "tree":
        return parse_tree(text)
    if source == "zigzag":
        if not (text.startswith("(") and text.endswith(")")):
            raise ValueError("a zigzag is written (0,1,...,0)")
        items = [p.strip() for p in text[1:-1].split(",") if p.strip()]
        return tree_of_zig(tuple(int(p) for p in items))
    if source == "psctx":
        bindings = surface.parse_bindings(text)
        ctx, _ = elab_bindings(Env(), bindings, (1, 1))
        return translation.tree_of_psctx(pasting.check_ps(ctx))
    if source == "globset":
        glob = globset_from_json(json.loads(text))
        return tree_of_zig(zig(cardinal(glob)))
    raise ValueError(f"unknown input format {source!r}")


def cmd_tree(args) -> int:
    try:
        tree = _parse_tree_spec(args.spec, args.source)
    except (ValueError, ParseError, ElabError, KernelError) as e:
        print(f"error: {e}")
        return CHECK_FAILED
    if args.to == "tree":
        print(format_tree(tree))
    elif args.to == "zigzag":
        print("(" + ",".join(str(d) for d in zig(pos(tree).card)) + ")")
    elif args.to == "psctx":
        print(_psctx_to_surface(translation.psctx_of_tree(tree).ctx))
    elif args.to == "globset":
        print(_dump_json(globset_to_json(pos(tree).card.glob)))
    return OK


def cmd_roundtrip(args) -> int:
    try:
        src = _load(args.file)
    except ParseError as e:
        print(_diag_from_error(e.span, e).text())
        return PARSE_FAILED
    result = process_file(src)
    if result.diagnostics:
        for d in result.diagnostics:
            print(d.text())
        return CHECK_FAILED
    failures = 0
    for kind, name, payload in result.order:
        if kind != "ctx":
            continue
        comp = translation.r_ctx(payload).comp
        ctx2, _witness = translation.ctx_of_computad(comp)
        comp2 = translation.r_ctx(ctx2).comp
        iso = iso_computads(comp, comp2)
        status = "iso" if iso is not None else "NOT-iso"
        if iso is None:
            failures += 1
        print(f"{status} ctx {name}: {sum(comp.gens)} generators")
    return OK if failures == 0 else CHECK_FAILED


def cmd_enumerate(args) -> int:
    cap = max_positions()
    if args.positions > cap:
        print(f"error: --positions {args.positions} exceeds the cap {cap} "
              "(set CATTKIT_MAX_POSITIONS to raise it)")
        return CHECK_FAILED
    sizes = [args.positions] if args.exact else list(range(1, args.positions + 1, 2))
    total = 0
    for n in sizes:
        if args.kind == "trees":
            from .batanin import enumerate_zigzags
            items = [format_tree(tree_of_zig(m)) for m in enumerate_zigzags(n) if len(m) == n]
        else:
            items = [_psctx_to_surface(c) for c in enumerate_psctxs(n)]
        for item in items:
            print(item)
        total += len(items)
    print(f"count {total}")
    return OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cattkit")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="type-check a file of declarations")
    c.add_argument("file")
    c.add_argument("--format", choices=["text", "json"], default="text")
    c.set_defaults(fn=cmd_check)

    t = sub.add_parser("translate", help="emit the computad of every context as JSON")
    t.add_argument("file")
    t.add_argument("--format", choices=["json"], default="json")
    t.set_defaults(fn=cmd_translate)

    tr = sub.add_parser("tree", help="convert between tree, zigzag, pasting context and globular set")
    tr.add_argument("spec")
    tr.add_argument("--from", dest="source", choices=["tree", "zigzag", "psctx", "globset"], default=None)
    tr.add_argument("--to", required=True, choices=["tree", "zigzag", "psctx", "globset"])
    tr.set_defaults(fn=cmd_tree)

    rt = sub.add_parser("roundtrip", help="translate contexts to computads and back, reporting isos")
    rt.add_argument("file")
    rt.set_defaults(fn=cmd_roundtrip)

    e = sub.add_parser("enumerate", help="list trees or pasting contexts with counts")
    e.add_argument("--positions", type=int, required=True)
    e.add_argument("--exact", action="store_true", help="only the exact size, not all sizes up to it")
    e.add_argument("--kind", choices=["trees", "psctx"], default="trees")
    e.set_defaults(fn=cmd_enumerate)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except AssertionError as e:
        print(f"internal invariant breach: {e}", file=sys.stderr)
        return INTERNAL


if __name__ == "__main__":
    sys.exit(main())
