"""Judgement checker for the type theory GSeTT: contexts, types, terms,
substitutions.

All judgements are syntax-directed, so checking is plain structural
recursion returning a witness wrapper or raising.  The internal rules take
an optional hook for the coherence term constructor; GSeTT itself has no
term constructors and rejects `Coh`, while `catt` reuses the same rules
with its coherence checker plugged in.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    CohNotAllowedInGSeTT,
    EntryIllTyped,
    IllTypedEntry,
    IndexOutOfRange,
    KernelError,
    LengthMismatch,
    SourceTypeMismatch,
    TargetTypeMismatch,
    VariableTypeMismatch,
)
from .syntax import Arr, Coh, Ctx, Obj, Sub, Tm, Ty, Var, subst_ty


@dataclass(frozen=True)
class CheckedCtx:
    """Witness that `ctx` is a valid context.

    Produced only by the checking operations of this module and of `catt`.
    """

    ctx: Ctx

    def __len__(self):
        return len(self.ctx)


@dataclass(frozen=True)
class CheckedTy:
    ctx: CheckedCtx
    ty: Ty


@dataclass(frozen=True)
class CheckedTm:
    ctx: CheckedCtx
    tm: Tm
    ty: Ty


@dataclass(frozen=True)
class CheckedSub:
    dom: CheckedCtx
    sub: Sub
    cod: CheckedCtx


# --------------------------------------------------------------------------
# rule engine, parameterised by the coherence hook

def _check_tm(ctx: Ctx, t: Tm, a: Ty, coh) -> None:
    match t:
        case Var(i):
            if i >= len(ctx):
                raise IndexOutOfRange(i, len(ctx))
            if ctx[i] != a:
                raise VariableTypeMismatch(i, ctx[i], a)
        case Coh():
            if coh is None:
                raise CohNotAllowedInGSeTT()
            coh(ctx, t, a)
        case _:
            raise TypeError(f"not a term: {t!r}")


def _check_ty(ctx: Ctx, a: Ty, coh) -> None:
    match a:
        case Obj():
            return
        case Arr(base, u, v):
            _check_ty(ctx, base, coh)
            try:
                _check_tm(ctx, u, base, coh)
            except KernelError as e:
                raise SourceTypeMismatch(e) from e
            try:
                _check_tm(ctx, v, base, coh)
            except KernelError as e:
                raise TargetTypeMismatch(e) from e
        case _:
            raise TypeError(f"not a type: {a!r}")


def _check_ctx(ctx: Ctx, coh) -> None:
    for i, a in enumerate(ctx):
        try:
            _check_ty(ctx[:i], a, coh)
        except KernelError as e:
            raise IllTypedEntry(i, e) from e


def _check_sub(dom: Ctx, g: Sub, cod: Ctx, coh) -> None:
    if len(g) != len(cod):
        raise LengthMismatch(len(g), len(cod))
    for i, t in enumerate(g):
        # cod[i] only mentions variables < i, so the full prefix of g applies
        try:
            _check_tm(dom, t, subst_ty(cod[i], g[:i]), coh)
        except KernelError as e:
            raise EntryIllTyped(i, e) from e


# --------------------------------------------------------------------------
# public GSeTT judgements

def check_ctx(ctx: Ctx) -> CheckedCtx:
    """Check the context judgement; freshness is automatic with levels."""
    _check_ctx(ctx, None)
    return CheckedCtx(ctx)


def check_ty(g: CheckedCtx, a: Ty) -> CheckedTy:
    _check_ty(g.ctx, a, None)
    return CheckedTy(g, a)


def check_tm(g: CheckedCtx, t: Tm, a: Ty) -> CheckedTm:
    """Check a term against a type already known valid in `g`."""
    _check_tm(g.ctx, t, a, None)
    return CheckedTm(g, t, a)


def check_sub(d: CheckedCtx, g: Sub, c: CheckedCtx) -> CheckedSub:
    _check_sub(d.ctx, g, c.ctx, None)
    return CheckedSub(d, g, c)
