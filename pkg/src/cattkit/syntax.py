"""Raw syntax of GSeTT and CaTT.

Variables are De Bruijn levels: index i refers to the i-th entry of the
ambient context, counted from the start.  This makes alpha-equivalence
literal equality, weakening a no-op, and variable sets plain index sets.
Raw values carry no well-formedness guarantee; the checkers in `gsett` and
`catt` produce the checked wrappers.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import IndexOutOfRange


@dataclass(frozen=True)
class Obj:
    """The base type of 0-cells."""

    def __repr__(self):
        return "Obj"


@dataclass(frozen=True)
class Arr:
    """Arrow type src -> tgt over a common base type."""

    base: "Ty"
    src: "Tm"
    tgt: "Tm"


@dataclass(frozen=True)
class Var:
    idx: int


@dataclass(frozen=True)
class Coh:
    """Coherence term; carries its own pasting context, so terms are closed.

    `ty` and the codomain of `sub` are relative to `psctx`; `sub` maps the
    variables of `psctx` into the ambient context.
    """

    psctx: "Ctx"
    ty: "Ty"
    sub: "Sub"


Ty = Obj | Arr
Tm = Var | Coh
Ctx = tuple  # tuple[Ty, ...]; entry i may mention only variables < i
Sub = tuple  # tuple[Tm, ...]; entry i is the image of variable i of the codomain

OBJ = Obj()


def dim_ty(a: Ty) -> int:
    """Dimension of a type: Obj is -1, each arrow layer adds one."""
    d = -1
    while isinstance(a, Arr):
        d += 1
        a = a.base
    return d


def dim_ctx(ctx: Ctx) -> int:
    """Dimension of a context: max over entries of (type dimension + 1)."""
    return max((dim_ty(a) + 1 for a in ctx), default=-1)


def vars_of(x: Ty | Tm | Sub) -> frozenset[int]:
    """Variable index set of a type, term or substitution."""
    match x:
        case Obj():
            return frozenset()
        case Arr(base, u, v):
            return vars_of(base) | vars_of(u) | vars_of(v)
        case Var(i):
            return frozenset((i,))
        case Coh(_, _, sub):
            return vars_of(sub)
        case tuple():
            out: frozenset[int] = frozenset()
            for t in x:
                out |= vars_of(t)
            return out
    raise TypeError(f"vars_of: unsupported value {x!r}")


def vars_of_ctx(ctx: Ctx) -> frozenset[int]:
    """A context owns all of its variable indices."""
    return frozenset(range(len(ctx)))


def subst_ty(a: Ty, g: Sub) -> Ty:
    match a:
        case Obj():
            return a
        case Arr(base, u, v):
            return Arr(subst_ty(base, g), subst_tm(u, g), subst_tm(v, g))
    raise TypeError(f"subst_ty: not a type: {a!r}")


def subst_tm(t: Tm, g: Sub) -> Tm:
    match t:
        case Var(i):
            if i >= len(g):
                raise IndexOutOfRange(i, len(g))
            return g[i]
        case Coh(psctx, ty, sub):
            return Coh(psctx, ty, compose_sub(sub, g))
    raise TypeError(f"subst_tm: not a term: {t!r}")


def compose_sub(g: Sub, d: Sub) -> Sub:
    """Composite substitution: first d, then g (entrywise action of d on g)."""
    return tuple(subst_tm(t, d) for t in g)


def identity_sub(n: int) -> Sub:
    return tuple(Var(i) for i in range(n))


def ty_of(ctx: Ctx, t: Tm) -> Ty:
    """Structural type of a term assumed well-formed over ctx."""
    match t:
        case Var(i):
            if i >= len(ctx):
                raise IndexOutOfRange(i, len(ctx))
            return ctx[i]
        case Coh(_, ty, sub):
            return subst_ty(ty, sub)
    raise TypeError(f"ty_of: not a term: {t!r}")
