"""Surface syntax: tokenizer, recursive-descent parser, printer and the
elaborator that resolves names to De Bruijn levels.

Declarations:

    ctx NAME = (x : TY, ...)
    coh NAME (PASTING-CTX) : TY
    check TERM in NAME : TY

Types are `*` or `TM -> TM`, optionally ascribing the base type `[TY]`;
without an ascription the base is inferred from the source term.  Terms
are identifiers or instantiations `coh NAME [x => TM, ...]` of previously
declared coherences, which desugar to closed coherence nodes.  The words
ctx, coh, check and in are reserved.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field

from .errors import KernelError
from .syntax import OBJ, Arr, Coh, Ctx, Tm, Ty, Var, ty_of

Span = tuple  # (line, column), 1-based

KEYWORDS = {"ctx", "coh", "check", "in"}

_TOKEN_RE = re.compile(r"""
    (?P<ws>\s+)
  | (?P<arrow>->)
  | (?P<darrow>=>)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_']*)
  | (?P<punct>[()\[\],:*=])
""", re.VERBOSE)


class ParseError(Exception):
    def __init__(self, span: Span, message: str):
        super().__init__(f"{span[0]}:{span[1]}: {message}")
        self.span = span
        self.message = message


class ElabError(Exception):
    def __init__(self, span: Span, message: str):
        super().__init__(f"{span[0]}:{span[1]}: {message}")
        self.span = span
        self.message = message


@dataclass(frozen=True)
class Token:
    kind: str  # 'ident' | 'arrow' | 'darrow' | one of "()[],:*=" | 'eof'
    text: str
    span: Span


def tokenize(text: str) -> list[Token]:
    out = []
    line, col = 1, 1
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError((line, col), f"unexpected character {text[pos]!r}")
        piece = m.group(0)
        if m.lastgroup == "punct":
            out.append(Token(piece, piece, (line, col)))
        elif m.lastgroup != "ws":
            out.append(Token(m.lastgroup, piece, (line, col)))
        for ch in piece:
            if ch == "\n":
                line += 1
                col = 1
            else:
                col += 1
        pos = m.end()
    out.append(Token("eof", "", (line, col)))
    return out


# --------------------------------------------------------------------------
# surface AST

@dataclass(frozen=True)
class SrcVar:
    name: str
    span: Span = field(compare=False, default=(0, 0))


@dataclass(frozen=True)
class SrcCohTerm:
    name: str
    args: tuple  # tuple[(str, SrcTerm), ...]
    span: Span = field(compare=False, default=(0, 0))


SrcTerm = SrcVar | SrcCohTerm


@dataclass(frozen=True)
class SrcStar:
    span: Span = field(compare=False, default=(0, 0))


@dataclass(frozen=True)
class SrcArrow:
    src: SrcTerm
    tgt: SrcTerm
    base: "SrcType | None" = None
    span: Span = field(compare=False, default=(0, 0))


SrcType = SrcStar | SrcArrow


@dataclass(frozen=True)
class Binding:
    name: str
    ty: SrcType
    span: Span = field(compare=False, default=(0, 0))


@dataclass(frozen=True)
class CtxDecl:
    name: str
    bindings: tuple
    span: Span = field(compare=False, default=(0, 0))


@dataclass(frozen=True)
class CohDecl:
    name: str
    bindings: tuple
    ty: SrcType
    span: Span = field(compare=False, default=(0, 0))


@dataclass(frozen=True)
class CheckDecl:
    term: SrcTerm
    ctx_name: str
    ty: SrcType
    span: Span = field(compare=False, default=(0, 0))


Decl = CtxDecl | CohDecl | CheckDecl


@dataclass(frozen=True)
class SourceFile:
    decls: tuple


class _Parser:
    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def next(self) -> Token:
        t = self.tokens[self.pos]
        self.pos += 1
        return t

    def expect(self, kind: str) -> Token:
        t = self.peek()
        if t.kind != kind:
            raise ParseError(t.span, f"expected {kind!r}, got {t.text!r}")
        return self.next()

    def ident(self, what: str = "identifier") -> Token:
        t = self.peek()
        if t.kind != "ident" or t.text in KEYWORDS:
            raise ParseError(t.span, f"expected {what}, got {t.text!r}")
        return self.next()

    def file(self) -> SourceFile:
        decls = []
        while self.peek().kind != "eof":
            decls.append(self.decl())
        return SourceFile(tuple(decls))

    def decl(self) -> Decl:
        t = self.peek()
        if t.kind == "ident" and t.text == "ctx":
            self.next()
            name = self.ident("context name")
            self.expect("=")
            self.expect("(")
            bindings = self.bindings()
            self.expect(")")
            return CtxDecl(name.text, bindings, t.span)
        if t.kind == "ident" and t.text == "coh":
            self.next()
            name = self.ident("coherence name")
            self.expect("(")
            bindings = self.bindings()
            self.expect(")")
            self.expect(":")
            ty = self.type_()
            return CohDecl(name.text, bindings, ty, t.span)
        if t.kind == "ident" and t.text == "check":
            self.next()
            term = self.term()
            kw = self.peek()
            if kw.kind != "ident" or kw.text != "in":
                raise ParseError(kw.span, f"expected 'in', got {kw.text!r}")
            self.next()
            name = self.ident("context name")
            self.expect(":")
            ty = self.type_()
            return CheckDecl(term, name.text, ty, t.span)
        raise ParseError(t.span, f"expected a declaration, got {t.text!r}")

    def bindings(self) -> tuple:
        out = []
        if self.peek().kind == ")":
            return ()
        while True:
            name = self.ident("variable name")
            self.expect(":")
            ty = self.type_()
            out.append(Binding(name.text, ty, name.span))
            if self.peek().kind == ",":
                self.next()
                continue
            return tuple(out)

    def type_(self) -> SrcType:
        t = self.peek()
        if t.kind == "*":
            self.next()
            return SrcStar(t.span)
        if t.kind == "(":
            self.next()
            ty = self.type_()
            self.expect(")")
            return ty
        src = self.term()
        self.expect("arrow")
        tgt = self.term()
        base = None
        if self.peek().kind == "[":
            self.next()
            base = self.type_()
            self.expect("]")
        return SrcArrow(src, tgt, base, t.span)

    def term(self) -> SrcTerm:
        t = self.peek()
        if t.kind == "ident" and t.text == "coh":
            self.next()
            name = self.ident("coherence name")
            self.expect("[")
            args = []
            if self.peek().kind != "]":
                while True:
                    var = self.ident("variable name")
                    self.expect("darrow")
                    args.append((var.text, self.term()))
                    if self.peek().kind == ",":
                        self.next()
                        continue
                    break
            self.expect("]")
            return SrcCohTerm(name.text, tuple(args), t.span)
        name = self.ident("term")
        return SrcVar(name.text, name.span)


def parse(text: str) -> SourceFile:
    """Parse a source file; raises ParseError with a span on bad input."""
    return _Parser(tokenize(text)).file()


def parse_bindings(text: str) -> tuple:
    """Parse a bare parenthesised binding list, e.g. '(x : *, y : *)'."""
    p = _Parser(tokenize(text))
    p.expect("(")
    out = p.bindings()
    p.expect(")")
    p.expect("eof")
    return out


# --------------------------------------------------------------------------
# printer (inverse of the parser on the AST)

def print_term(t: SrcTerm) -> str:
    match t:
        case SrcVar(name):
            return name
        case SrcCohTerm(name, args):
            inner = ", ".join(f"{x} => {print_term(u)}" for x, u in args)
            return f"coh {name} [{inner}]"
    raise TypeError(f"not a surface term: {t!r}")


def print_type(a: SrcType) -> str:
    match a:
        case SrcStar():
            return "*"
        case SrcArrow(src, tgt, base):
            out = f"{print_term(src)} -> {print_term(tgt)}"
            if base is not None:
                out += f" [{print_type(base)}]"
            return out
    raise TypeError(f"not a surface type: {a!r}")


def print_bindings(bindings: tuple) -> str:
    return "(" + ", ".join(f"{b.name} : {print_type(b.ty)}" for b in bindings) + ")"


def print_decl(d: Decl) -> str:
    match d:
        case CtxDecl(name, bindings):
            return f"ctx {name} = {print_bindings(bindings)}"
        case CohDecl(name, bindings, ty):
            return f"coh {name} {print_bindings(bindings)} : {print_type(ty)}"
        case CheckDecl(term, ctx_name, ty):
            return f"check {print_term(term)} in {ctx_name} : {print_type(ty)}"
    raise TypeError(f"not a declaration: {d!r}")


def print_file(f: SourceFile) -> str:
    return "\n".join(print_decl(d) for d in f.decls) + "\n"


# --------------------------------------------------------------------------
# elaboration to the kernel

@dataclass(frozen=True)
class CohInfo:
    psctx: Ctx
    names: tuple
    ty: Ty


class Env:
    """Named contexts and coherences declared so far; forward references
    are impossible because elaboration is a single pass."""

    def __init__(self):
        self.ctxs: dict[str, tuple[Ctx, tuple]] = {}
        self.cohs: dict[str, CohInfo] = {}

    def declare_ctx(self, name: str, ctx: Ctx, names: tuple, span: Span):
        if name in self.ctxs or name in self.cohs:
            raise ElabError(span, f"duplicate declaration {name!r}")
        self.ctxs[name] = (ctx, names)

    def declare_coh(self, name: str, info: CohInfo, span: Span):
        if name in self.ctxs or name in self.cohs:
            raise ElabError(span, f"duplicate declaration {name!r}")
        self.cohs[name] = info


def elab_term(env: Env, names: tuple, ctx: Ctx, t: SrcTerm) -> Tm:
    match t:
        case SrcVar(name):
            if name not in names:
                raise ElabError(t.span, f"unknown variable {name!r}")
            return Var(names.index(name))
        case SrcCohTerm(name, args):
            info = env.cohs.get(name)
            if info is None:
                raise ElabError(t.span, f"unknown coherence {name!r}")
            given = dict()
            for x, u in args:
                if x in given:
                    raise ElabError(t.span, f"variable {x!r} assigned twice")
                if x not in info.names:
                    raise ElabError(t.span, f"{name!r} has no variable {x!r}")
                given[x] = elab_term(env, names, ctx, u)
            missing = [x for x in info.names if x not in given]
            if missing:
                raise ElabError(t.span, f"missing assignment for {missing[0]!r}")
            return Coh(info.psctx, info.ty, tuple(given[x] for x in info.names))
    raise TypeError(f"not a surface term: {t!r}")


def elab_type(env: Env, names: tuple, ctx: Ctx, a: SrcType) -> Ty:
    match a:
        case SrcStar():
            return OBJ
        case SrcArrow(src, tgt, base):
            u = elab_term(env, names, ctx, src)
            v = elab_term(env, names, ctx, tgt)
            if base is not None:
                b = elab_type(env, names, ctx, base)
            else:
                try:
                    b = ty_of(ctx, u)
                except KernelError as e:
                    raise ElabError(a.span, f"cannot infer the base type: {e}") from e
            return Arr(b, u, v)
    raise TypeError(f"not a surface type: {a!r}")


def elab_bindings(env: Env, bindings: tuple, span: Span) -> tuple[Ctx, tuple]:
    names: tuple = ()
    ctx: Ctx = ()
    for b in bindings:
        if b.name in names:
            raise ElabError(b.span, f"duplicate variable {b.name!r}")
        if b.name in KEYWORDS:
            raise ElabError(b.span, f"{b.name!r} is reserved")
        ctx = ctx + (elab_type(env, names, ctx, b.ty),)
        names = names + (b.name,)
    return ctx, names
