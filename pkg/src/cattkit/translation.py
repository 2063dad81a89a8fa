"""The translations between syntax and combinatorics: contexts of GSeTT to
globular sets, contexts of CaTT to computads, pasting contexts to Batanin
trees, and the constructive inverse from finite computads back to
contexts.

Context translations proceed by extension: each entry becomes one fresh
cell or generator, so variables are canonically identified with the cells
of the translated object.  The per-prefix results are memoised, keeping a
whole-context translation linear in context length.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cache

from . import catt, gsett, pasting
from .batanin import BataninTree, pos, tree_of_zig, zig, zig_of_tree
from .computad import (
    Cell,
    CohCell,
    CompMorphism,
    Computad,
    EMPTY_COMPUTAD,
    GenCell,
    Sphere,
    UNIT_SPHERE,
    _apply_maps,
    _apply_sphere,
    bdry,
    extend_comp,
    identity_morphism,
    is_full,
    make_computad,
    make_morphism,
)
from .errors import CohNotAllowedInGSeTT
from .gsett import CheckedCtx, CheckedSub
from .globular import EMPTY, GlobMorphism, GlobSet, cardinal, extend_glob
from .pasting import PsCtx
from .syntax import OBJ, Arr, Coh, Ctx, Obj, Tm, Ty, Var, dim_ty


@dataclass(frozen=True)
class GlobTranslation:
    """A translated context: the globular set together with the bijection
    from variable indices to its cells."""

    ctx: Ctx
    glob: GlobSet
    cells: tuple  # tuple[(dim, id), ...], one per variable


@dataclass(frozen=True)
class CompTranslation:
    """A translated CaTT context: the computad together with the bijection
    from variable indices to its generators."""

    ctx: Ctx
    comp: Computad
    gens: tuple  # tuple[(dim, id), ...], one per variable

    def var_of_gen(self, ref) -> int:
        return self.gens.index(ref)


# --------------------------------------------------------------------------
# GSeTT contexts to globular sets

@cache
def _v_ctx(ctx: Ctx) -> GlobTranslation:
    if not ctx:
        return GlobTranslation((), EMPTY, ())
    prev = _v_ctx(ctx[:-1])
    a = ctx[-1]
    pair = v_ty(prev, a)
    ids = None if pair is None else (pair[0][1], pair[1][1])
    bigger, fresh, _ = extend_glob(prev.glob, ids, dim_ty(a) + 1)
    return GlobTranslation(ctx, bigger, prev.cells + (fresh,))


def v_ctx(g: CheckedCtx) -> GlobTranslation:
    """Translate a GSeTT context; one cell per variable, by extension."""
    return _v_ctx(g.ctx)


def v_ty(tr: GlobTranslation, a: Ty):
    """A type over a translated context as a parallel pair of cells (None
    for the base type)."""
    match a:
        case Obj():
            return None
        case Arr(_, u, v):
            return (v_tm(tr, u), v_tm(tr, v))
    raise TypeError(f"not a type: {a!r}")


def v_tm(tr: GlobTranslation, t: Tm):
    match t:
        case Var(i):
            return tr.cells[i]
        case Coh():
            raise CohNotAllowedInGSeTT()
    raise TypeError(f"not a term: {t!r}")


def v_sub(g: CheckedSub) -> GlobMorphism:
    """A checked substitution, contravariantly, as a morphism of globular
    sets from the translated codomain to the translated domain."""
    tr_cod = _v_ctx(g.cod.ctx)
    tr_dom = _v_ctx(g.dom.ctx)
    maps = [[0] * c for c in tr_cod.glob.counts]
    for j, (d, i) in enumerate(tr_cod.cells):
        maps[d][i] = v_tm(tr_dom, g.sub[j])[1]
    return GlobMorphism(tr_cod.glob, tr_dom.glob, tuple(tuple(m) for m in maps))


# --------------------------------------------------------------------------
# pasting contexts and Batanin trees

@cache
def tree_of_psctx(g: PsCtx) -> BataninTree:
    """The Batanin tree of a pasting context, through its zigzag code."""
    return tree_of_zig(zig(cardinal(_v_ctx(g.ctx).glob)))


@cache
def r_bat(g: PsCtx) -> GlobMorphism:
    """The order-preserving relabelling from the translated pasting context
    onto the positions of its tree."""
    card = cardinal(_v_ctx(g.ctx).glob)
    target = pos(tree_of_psctx(g)).card
    maps = [[0] * c for c in card.glob.counts]
    for (d, i), (_, j) in zip(card.order, target.order):
        maps[d][i] = j
    return GlobMorphism(card.glob, target.glob, tuple(tuple(m) for m in maps))


@cache
def psctx_of_tree(b: BataninTree) -> PsCtx:
    """The unique pasting context whose tree is b, rebuilt from the zigzag
    code by extending on every up step and descending otherwise."""
    m = zig_of_tree(b)
    entries: list[Ty] = [OBJ]
    tm: Tm = Var(0)
    ty: Ty = OBJ
    for i in range(1, len(m)):
        if m[i] > m[i - 1]:
            y_idx = len(entries)
            entries.append(ty)
            ty = Arr(ty, tm, Var(y_idx))
            tm = Var(y_idx + 1)
            entries.append(ty)
        else:
            assert isinstance(ty, Arr)
            tm, ty = ty.tgt, ty.base
    return pasting.check_ps(tuple(entries))


# --------------------------------------------------------------------------
# CaTT contexts to computads

@cache
def _r_ctx(ctx: Ctx) -> CompTranslation:
    if not ctx:
        return CompTranslation((), EMPTY_COMPUTAD, ())
    prev = _r_ctx(ctx[:-1])
    a = ctx[-1]
    bigger, fresh, _ = extend_comp(prev.comp, r_ty(prev, a))
    return CompTranslation(ctx, bigger, prev.gens + ((dim_ty(a) + 1, fresh),))


def r_ctx(g: CheckedCtx) -> CompTranslation:
    """Translate a CaTT context to a computad; extension on the nose."""
    return _r_ctx(g.ctx)


def r_ty(tr: CompTranslation, a: Ty) -> Sphere:
    match a:
        case Obj():
            return UNIT_SPHERE
        case Arr(_, _, _):
            return Sphere(dim_ty(a), (r_tm(tr, a.src), r_tm(tr, a.tgt)))
    raise TypeError(f"not a type: {a!r}")


def r_tm(tr: CompTranslation, t: Tm) -> Cell:
    """Translate a checked term to a cell of the translated context."""
    match t:
        case Var(i):
            d, gid = tr.gens[i]
            return GenCell(d, gid)
        case Coh(psctx, ty, sub):
            g = pasting.check_ps(psctx)
            b = tree_of_psctx(g)
            ps_tr = _r_ctx(psctx)
            rb = r_bat(g)
            relabel = tuple(
                tuple(GenCell(d, rb.maps[d][i]) for i in range(len(rb.maps[d])))
                for d in range(len(rb.maps)))
            sphere = _apply_sphere(relabel, r_ty(ps_tr, ty))
            assert is_full(b, sphere), "translated coherence sphere must be full"
            counts = pos(b).card.glob.counts
            posmap = [[None] * c for c in counts]
            for j, (d, gid) in enumerate(ps_tr.gens):
                posmap[d][rb.maps[d][gid]] = r_tm(tr, sub[j])
            return CohCell(dim_ty(ty) + 1, b, sphere, tuple(tuple(lv) for lv in posmap))
    raise TypeError(f"not a term: {t!r}")


def r_sub(g: CheckedSub) -> CompMorphism:
    """A checked substitution, contravariantly, as a morphism of computads
    from the translated codomain to the translated domain."""
    tr_cod = _r_ctx(g.cod.ctx)
    tr_dom = _r_ctx(g.dom.ctx)
    maps = [[None] * k for k in tr_cod.comp.gens]
    for j, (d, gid) in enumerate(tr_cod.gens):
        maps[d][gid] = r_tm(tr_dom, g.sub[j])
    return make_morphism(tr_cod.comp, tr_dom.comp, maps)


# --------------------------------------------------------------------------
# inverses

def inv_r_ty(tr: CompTranslation, s: Sphere) -> Ty:
    """Invert the type translation on a valid sphere of the translated
    context."""
    if s.dim == -1:
        return OBJ
    a, b = s.cells
    base = inv_r_ty(tr, bdry(tr.comp, a))
    return Arr(base, inv_r_tm(tr, a), inv_r_tm(tr, b))


def inv_r_tm(tr: CompTranslation, cell: Cell) -> Tm:
    """Invert the term translation on a valid cell of the translated
    context."""
    match cell:
        case GenCell(d, gid):
            return Var(tr.var_of_gen((d, gid)))
        case CohCell(_, b, sphere, posmap):
            g = psctx_of_tree(b)
            ps_tr = _r_ctx(g.ctx)
            rb = r_bat(g)
            unlabel = [[None] * len(level) for level in rb.maps]
            for d in range(len(rb.maps)):
                for i, j in enumerate(rb.maps[d]):
                    unlabel[d][j] = GenCell(d, i)
            sphere_g = _apply_sphere(tuple(tuple(lv) for lv in unlabel), sphere)
            ty = inv_r_ty(ps_tr, sphere_g)
            sub = tuple(
                inv_r_tm(tr, posmap[d][rb.maps[d][gid]])
                for (d, gid) in ps_tr.gens)
            return Coh(g.ctx, ty, sub)
    raise TypeError(f"not a cell: {cell!r}")


def ctx_of_computad(c: Computad) -> tuple[CheckedCtx, CompMorphism]:
    """A context translating back to the given finite computad.

    Strips a generator of maximal dimension (the last one added, for
    determinism), recurses, and re-extends by the type obtained from the
    pulled-back attaching sphere; entries therefore come out ordered by
    dimension then id.  Returns the context and the witnessing
    isomorphism from c onto its translation.
    """
    if not c.gens:
        return CheckedCtx(()), identity_morphism(EMPTY_COMPUTAD)
    d = len(c.gens) - 1
    assert c.gens[d] > 0, "computad not normalised"
    smaller = make_computad(
        c.gens[:d] + (c.gens[d] - 1,),
        c.attach[:d] + (c.attach[d][:-1],))
    ctx2, iso2 = ctx_of_computad(smaller)
    tr2 = _r_ctx(ctx2.ctx)
    sphere2 = iso2.apply_sphere(c.attach[d][-1])
    a = inv_r_ty(tr2, sphere2)
    checked = catt.check_ctx(ctx2.ctx + (a,))
    tr = _r_ctx(checked.ctx)
    new_dim, new_gid = tr.gens[-1]
    assert new_dim == d
    maps = [list(level) for level in iso2.maps] + [[] for _ in range(d + 1 - len(iso2.maps))]
    maps[d] = maps[d] + [GenCell(d, new_gid)]
    return checked, make_morphism(c, tr.comp, maps)
