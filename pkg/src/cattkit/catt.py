"""The full CaTT checker: GSeTT rules plus the coherence term constructor.

The coherence rule is guarded by a variable-coverage side condition.  We
implement the unified form: with A the full coherence type over the
pasting context G, the variables of the source (resp. target) boundary
substitution at level max(dim A, dim G - 1) must equal the variables of
the source (resp. target) of A together with those of its base type.  On
the domain where the rule can fire at all (dim G <= dim A + 1) this is the
boundary at dim A, with the identity substitution covering the case
dim G <= dim A; beyond that domain the comparison fails on dimension
grounds alone.  Equivalence with the original two-variant formulation is
property-tested at desk scale.
"""
from __future__ import annotations

from . import gsett, pasting
from .errors import (
    AnnotationMismatch,
    KernelError,
    NotAPastingContext,
    NotPasting,
    SideConditionFailedSource,
    SideConditionFailedTarget,
    SubstitutionIllTyped,
    TypeNotArrow,
)
from .gsett import CheckedCtx, CheckedSub, CheckedTm, CheckedTy
from .pasting import PsCtx
from .syntax import (
    Arr,
    Coh,
    Ctx,
    Sub,
    Tm,
    Ty,
    dim_ctx,
    dim_ty,
    subst_ty,
    vars_of,
)


def boundary_var_sets(g: PsCtx, ty: Arr, k: int) -> tuple[frozenset, frozenset, frozenset, frozenset]:
    """The four index sets compared by the side condition at level k.

    Returns (source boundary vars, source required vars, target boundary
    vars, target required vars).
    """
    src_b = vars_of(pasting.src_sub(g, k).sub)
    tgt_b = vars_of(pasting.tgt_sub(g, k).sub)
    src_r = vars_of(ty.src) | vars_of(ty.base)
    tgt_r = vars_of(ty.tgt) | vars_of(ty.base)
    return src_b, src_r, tgt_b, tgt_r


def unified_side_condition(g: PsCtx, ty: Arr) -> bool:
    """The side condition evaluated at level dim(ty), without the dimension
    guard; this is the form compared against sphere fullness."""
    src_b, src_r, tgt_b, tgt_r = boundary_var_sets(g, ty, dim_ty(ty))
    return src_b == src_r and tgt_b == tgt_r


def _check_side_condition(g: PsCtx, ty: Arr) -> None:
    k = max(dim_ty(ty), dim_ctx(g.ctx) - 1)
    src_b, src_r, tgt_b, tgt_r = boundary_var_sets(g, ty, k)
    if src_b != src_r:
        raise SideConditionFailedSource(src_b, src_r)
    if tgt_b != tgt_r:
        raise SideConditionFailedTarget(tgt_b, tgt_r)


def _coh_rule(ctx: Ctx, t: Coh, expected: Ty) -> None:
    try:
        g = pasting.check_ps(t.psctx)
    except NotAPastingContext as e:
        raise NotPasting(e) from e
    if not isinstance(t.ty, Arr):
        raise TypeNotArrow(t.ty)
    gsett._check_ty(t.psctx, t.ty, _coh_rule)
    _check_side_condition(g, t.ty)
    try:
        gsett._check_sub(ctx, t.sub, t.psctx, _coh_rule)
    except KernelError as e:
        raise SubstitutionIllTyped(e) from e
    actual = subst_ty(t.ty, t.sub)
    if actual != expected:
        raise AnnotationMismatch(expected, actual)


def check_ctx(ctx: Ctx) -> CheckedCtx:
    gsett._check_ctx(ctx, _coh_rule)
    return CheckedCtx(ctx)


def check_ty(g: CheckedCtx, a: Ty) -> CheckedTy:
    gsett._check_ty(g.ctx, a, _coh_rule)
    return CheckedTy(g, a)


def check_tm(g: CheckedCtx, t: Tm, a: Ty) -> CheckedTm:
    gsett._check_tm(g.ctx, t, a, _coh_rule)
    return CheckedTm(g, t, a)


def check_sub(d: CheckedCtx, g: Sub, c: CheckedCtx) -> CheckedSub:
    gsett._check_sub(d.ctx, g, c.ctx, _coh_rule)
    return CheckedSub(d, g, c)


def check_coh(d: CheckedCtx, t: Coh, expected: Ty) -> CheckedTm:
    """Check a coherence term against its expected (annotated) type."""
    _coh_rule(d.ctx, t, expected)
    return CheckedTm(d, t, expected)


def fig4_side_condition(g: PsCtx, ty: Arr) -> bool:
    """The original two-variant side condition, kept as an oracle for the
    property test that it agrees with the unified form."""
    dim_g = dim_ctx(g.ctx)
    src_r = vars_of(ty.src) | vars_of(ty.base)
    tgt_r = vars_of(ty.tgt) | vars_of(ty.base)
    if dim_g >= 1:
        src_b = vars_of(pasting.src_sub(g, dim_g - 1).sub)
        tgt_b = vars_of(pasting.tgt_sub(g, dim_g - 1).sub)
        if src_b == src_r and tgt_b == tgt_r:
            return True
    allvars = frozenset(range(len(g.ctx)))
    return allvars == src_r and allvars == tgt_r
