"""Pasting schemes: the judgement "ctx is a pasting context", boundary
contexts and the source/target substitutions into them.

The derivation rules are linear: one start rule, an alternation of
extension and descent steps, and one closing rule.  Every step is forced
by the next context entry, so the checker reconstructs the unique
derivation greedily, without backtracking.  Boundary computation walks the
stored derivation, mirroring the induction that defines it.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cache

from . import gsett
from .errors import KernelError, NotAPastingContext
from .gsett import CheckedCtx, CheckedSub
from .syntax import OBJ, Arr, Ctx, Obj, Tm, Ty, Var, dim_ty

PSS = "pss"
PSD = "psd"
PSE = "pse"
PS = "ps"


@dataclass(frozen=True)
class PsStep:
    """One derivation step together with the focus term and type after it."""

    rule: str
    tm: Tm
    ty: Ty


@dataclass(frozen=True)
class PsDerivation:
    steps: tuple[PsStep, ...]

    def rule_names(self) -> tuple[str, ...]:
        return tuple(s.rule for s in self.steps)

    def word(self) -> str:
        return "·".join(self.rule_names())


@dataclass(frozen=True)
class PsCtx:
    """A checked context together with its unique pasting derivation."""

    checked: CheckedCtx
    derivation: PsDerivation

    @property
    def ctx(self) -> Ctx:
        return self.checked.ctx


def _reindex_ty(a: Ty, mapping: dict[int, int]) -> Ty:
    match a:
        case Obj():
            return a
        case Arr(base, Var(i), Var(j)):
            return Arr(_reindex_ty(base, mapping), Var(mapping[i]), Var(mapping[j]))
    raise AssertionError(f"pasting contexts contain only variables: {a!r}")


@cache
def check_ps(ctx: Ctx) -> PsCtx:
    """Reconstruct the unique pasting derivation of ctx, or fail.

    Scans left to right.  After the start rule the focus is the first
    variable; each later entry pair must extend the focus after the forced
    number of descent steps (the entry's type dimension determines how far
    the focus must come down).  The context is accepted once all entries
    are consumed and the focus has been descended to the base type.
    """
    try:
        checked = gsett.check_ctx(ctx)
    except KernelError as e:
        pos = getattr(e, "position", 0)
        raise NotAPastingContext(pos, f"not a valid GSeTT context: {e}") from e
    if not ctx:
        raise NotAPastingContext(0, "the empty context is not a pasting context")
    if ctx[0] != OBJ:
        raise NotAPastingContext(0, "first entry must have the base type")

    steps = [PsStep(PSS, Var(0), OBJ)]
    tm: Tm = Var(0)
    ty: Ty = OBJ
    i = 1
    n = len(ctx)
    while i < n:
        if i + 1 >= n:
            raise NotAPastingContext(i, "extension entries must come in pairs")
        want = ctx[i]
        while dim_ty(ty) > dim_ty(want):
            if not isinstance(ty, Arr):
                raise AssertionError("descent below the base type")
            tm, ty = ty.tgt, ty.base
            steps.append(PsStep(PSD, tm, ty))
        if ty != want:
            raise NotAPastingContext(i, f"entry type {want!r} does not match the focus type {ty!r}")
        want_next = Arr(ty, tm, Var(i))
        if ctx[i + 1] != want_next:
            raise NotAPastingContext(i + 1, f"expected an arrow from the focus into entry {i}, got {ctx[i + 1]!r}")
        tm, ty = Var(i + 1), want_next
        steps.append(PsStep(PSE, tm, ty))
        i += 2
    while isinstance(ty, Arr):
        tm, ty = ty.tgt, ty.base
        steps.append(PsStep(PSD, tm, ty))
    steps.append(PsStep(PS, tm, ty))
    return PsCtx(checked, PsDerivation(tuple(steps)))


def _boundary(g: PsCtx, k: int, eps: str) -> tuple[Ctx, tuple[int, ...]]:
    """Boundary context plus the kept original indices, in order.

    Walks the derivation.  An extension step whose new pair sits at cell
    dimension d (the dimension of its lower entry) is kept when d < k,
    dropped when d > k, and at d == k either skipped (minus side: the
    first representative of the parallel class stays) or swapped in for
    the previous representative (plus side).
    """
    assert eps in ("-", "+")
    ctx = g.ctx
    kept: list[int] = []
    out: list[Ty] = []
    mapping: dict[int, int] = {}

    def keep(idx: int) -> None:
        mapping[idx] = len(kept)
        kept.append(idx)
        out.append(_reindex_ty(ctx[idx], mapping))

    next_entry = 1
    for step in g.derivation.steps:
        if step.rule == PSS:
            keep(0)
        elif step.rule == PSE:
            y_idx = next_entry
            next_entry += 2
            d = dim_ty(ctx[y_idx]) + 1
            if d < k:
                keep(y_idx)
                keep(y_idx + 1)
            elif d == k and eps == "+":
                dropped = kept.pop()
                del mapping[dropped]
                out.pop()
                keep(y_idx)
    return tuple(out), tuple(kept)


def boundary_ctx(g: PsCtx, k: int, eps: str) -> PsCtx:
    """The k-boundary of a pasting context; again a pasting context.

    For k >= dim of the context this is the context itself.
    """
    ctx, _ = _boundary(g, k, eps)
    return check_ps(ctx)


def _boundary_sub(g: PsCtx, k: int, eps: str) -> CheckedSub:
    ctx, kept = _boundary(g, k, eps)
    bnd = check_ps(ctx)
    return gsett.check_sub(g.checked, tuple(Var(j) for j in kept), bnd.checked)


def src_sub(g: PsCtx, k: int) -> CheckedSub:
    """The substitution from g onto its k-source boundary, variable to variable."""
    return _boundary_sub(g, k, "-")


def tgt_sub(g: PsCtx, k: int) -> CheckedSub:
    return _boundary_sub(g, k, "+")


def enumerate_psctxs(num_vars: int) -> list[Ctx]:
    """All pasting contexts with exactly `num_vars` entries.

    Driven by the derivation rules themselves: from each focus one may
    descend any number of times and then extend.  Distinctness is free
    because derivations are unique.
    """
    if num_vars < 1 or num_vars % 2 == 0:
        return []
    found: list[Ctx] = []

    def go(entries: list[Ty], tm: Tm, ty: Ty) -> None:
        if len(entries) == num_vars:
            found.append(tuple(entries))
            return
        c_tm, c_ty = tm, ty
        while True:
            n = len(entries)
            f_ty = Arr(c_ty, c_tm, Var(n))
            entries.append(c_ty)
            entries.append(f_ty)
            go(entries, Var(n + 1), f_ty)
            entries.pop()
            entries.pop()
            if isinstance(c_ty, Arr):
                c_tm, c_ty = c_ty.tgt, c_ty.base
            else:
                break

    go([OBJ], Var(0), OBJ)
    return found
