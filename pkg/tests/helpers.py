"""Shared fixtures, enumerators and random generators for the test suite.

Expected values are produced by independent means wherever the library
itself could be wrong: Dyck paths are counted by brute force over step
sequences, substitution pools are enumerated from the typing rules, and
random computads are grown sphere by sphere over previously built strata.
"""
from __future__ import annotations

from functools import cache
from itertools import islice, product

from cattkit import catt, gsett, pasting
from cattkit.batanin import BataninTree, br, enumerate_trees
from cattkit.computad import (
    Cell,
    CohCell,
    Computad,
    EMPTY_COMPUTAD,
    GenCell,
    Sphere,
    UNIT_SPHERE,
    bdry,
    extend_comp,
)
from cattkit.errors import KernelError
from cattkit.syntax import (
    OBJ,
    Arr,
    Coh,
    Ctx,
    Obj,
    Sub,
    Tm,
    Ty,
    Var,
    dim_ctx,
    dim_ty,
    identity_sub,
    subst_ty,
)
from cattkit.translation import psctx_of_tree

# the running example: the 2-dimensional pasting diagram with cells
# x, y, z : *, f g : x -> y, alpha : f -> g, h : y -> z
FIG7D = (
    OBJ,
    OBJ,
    Arr(OBJ, Var(0), Var(1)),
    Arr(OBJ, Var(0), Var(1)),
    Arr(Arr(OBJ, Var(0), Var(1)), Var(2), Var(3)),
    OBJ,
    Arr(OBJ, Var(1), Var(5)),
)
FIG7_ZIG = (0, 1, 2, 1, 0, 1, 0)
FIG7_TREE = br(br(br()), br())

WALKING = (OBJ, OBJ, Arr(OBJ, Var(0), Var(1)))
COMP_CTX = (OBJ, OBJ, Arr(OBJ, Var(0), Var(1)), OBJ, Arr(OBJ, Var(1), Var(3)))

IDENTITY_COH = Coh((OBJ,), Arr(OBJ, Var(0), Var(0)), identity_sub(1))
COMP_COH = Coh(COMP_CTX, Arr(OBJ, Var(0), Var(3)), identity_sub(5))


def dyck_count(k: int) -> int:
    """Brute-force count of Dyck paths of semilength k."""
    count = 0
    for steps in product((1, -1), repeat=2 * k):
        height = 0
        for s in steps:
            height += s
            if height < 0:
                break
        else:
            if height == 0:
                count += 1
    return count


@cache
def small_psctxs(max_vars: int = 7, max_dim: int | None = None) -> tuple[Ctx, ...]:
    """All pasting contexts with at most max_vars variables (odd sizes)."""
    out = []
    for n in range(1, max_vars + 1, 2):
        for ctx in pasting.enumerate_psctxs(n):
            if max_dim is None or dim_ctx(ctx) <= max_dim:
                out.append(ctx)
    return tuple(out)


@cache
def all_gsett_types(ctx: Ctx) -> tuple[Ty, ...]:
    """Every valid GSeTT type over ctx (variable endpoints only)."""
    tys: list[Ty] = [OBJ]
    frontier: list[Ty] = [OBJ]
    while frontier:
        new = []
        for a in frontier:
            terms = [Var(i) for i, t in enumerate(ctx) if t == a]
            for u in terms:
                for v in terms:
                    new.append(Arr(a, u, v))
        tys.extend(new)
        frontier = new
    return tuple(tys)


def arrow_types(ctx: Ctx) -> tuple[Arr, ...]:
    return tuple(a for a in all_gsett_types(ctx) if isinstance(a, Arr))


@cache
def coh_catalog(max_positions: int = 5, max_ty_dim: int = 2) -> tuple[tuple[Ctx, Ty], ...]:
    """Valid coherence heads (pasting context, arrow type) over small trees."""
    out = []
    for tree in enumerate_trees(max_positions):
        ctx = psctx_of_tree(tree).ctx
        checked = catt.check_ctx(ctx)
        for a in arrow_types(ctx):
            if dim_ty(a) > max_ty_dim:
                continue
            term = Coh(ctx, a, identity_sub(len(ctx)))
            try:
                catt.check_coh(checked, term, a)
            except KernelError:
                continue
            out.append((ctx, a))
    return tuple(out)


def catt_terms(ctx: Ctx, ty: Ty, depth: int, per_head: int = 8):
    """Checked terms of the given type over ctx: variables, then coherence
    instances up to the given substitution depth."""
    for i, t in enumerate(ctx):
        if t == ty:
            yield Var(i)
    if depth < 1:
        return
    want_dim = dim_ty(ty)
    for psctx, coh_ty in coh_catalog():
        if dim_ty(coh_ty) != want_dim:
            continue
        taken = 0
        for sub in all_subs(ctx, psctx, depth - 1):
            if subst_ty(coh_ty, sub) == ty:
                yield Coh(psctx, coh_ty, sub)
                taken += 1
                if taken >= per_head:
                    break


def all_subs(dom: Ctx, cod: Ctx, depth: int, per_entry: int = 6):
    """Checked substitutions dom -> cod, entry types instantiated as they
    are produced."""

    def go(i: int, acc: list[Tm]):
        if i == len(cod):
            yield tuple(acc)
            return
        want = subst_ty(cod[i], tuple(acc))
        for t in islice(catt_terms(dom, want, depth), per_entry):
            acc.append(t)
            yield from go(i + 1, acc)
            acc.pop()

    yield from go(0, [])


def term_pool(ctx: Ctx, depth: int = 2, limit: int = 400) -> list[tuple[Tm, Ty]]:
    """A deterministic pool of checked (term, type) pairs over ctx."""
    out = []
    for ty in all_gsett_types(ctx):
        for t in islice(catt_terms(ctx, ty, depth), 40):
            out.append((t, ty))
            if len(out) >= limit:
                return out
    return out


def sub_pool(limit_per_pair: int = 10) -> list[gsett.CheckedSub]:
    """Checked substitutions between small pasting contexts, including
    every boundary substitution."""
    out = []
    ctxs = small_psctxs(7)
    for ctx in ctxs:
        g = pasting.check_ps(ctx)
        for k in range(dim_ctx(ctx) + 1):
            out.append(pasting.src_sub(g, k))
            out.append(pasting.tgt_sub(g, k))
        checked = catt.check_ctx(ctx)
        out.append(catt.check_sub(checked, identity_sub(len(ctx)), checked))
    for dom in (WALKING, COMP_CTX, FIG7D):
        dchk = catt.check_ctx(dom)
        for cod in ctxs:
            if len(cod) > len(dom) + 2:
                continue
            cchk = catt.check_ctx(cod)
            for sub in islice(all_subs(dom, cod, 1), limit_per_pair):
                out.append(catt.check_sub(dchk, sub, cchk))
    return out


# --------------------------------------------------------------------------
# cell-level constructions and random computads

def chain_tree(d: int) -> BataninTree:
    t = br()
    for _ in range(d):
        t = br(t)
    return t


def unary_comp(c: Computad, cell: Cell) -> CohCell:
    """The unary composite of a cell: a coherence over the disk tree with
    the same boundary as the cell."""
    d = cell.dim
    assert d >= 1
    tree = chain_tree(d)
    sphere = Sphere(d - 1, (GenCell(d - 1, 0), GenCell(d - 1, 1)))
    posmap: list[tuple[Cell, ...]] = [()] * (d + 1)
    posmap[d] = (cell,)
    current = cell
    for k in range(d - 1, -1, -1):
        s = bdry(c, current)
        posmap[k] = (s.cells[0], s.cells[1])
        current = s.cells[0]
    return CohCell(d, tree, sphere, tuple(posmap))


def cell_pool(c: Computad) -> list[Cell]:
    out: list[Cell] = [GenCell(n, v) for n, k in enumerate(c.gens) for v in range(k)]
    for cell in list(out):
        if cell.dim >= 1:
            out.append(unary_comp(c, cell))
    return out


def random_computad(rng, max_gens: int = 5) -> Computad:
    """Grow a computad one random attaching sphere at a time."""
    c = EMPTY_COMPUTAD
    for _ in range(rng.randint(1, max_gens)):
        pool = cell_pool(c)
        choices: list[Sphere] = [UNIT_SPHERE]
        for a in pool:
            choices.append(Sphere(a.dim, (a, a)))
            if a.dim >= 1:
                choices.append(Sphere(a.dim, (a, unary_comp(c, a))))
            for b in pool:
                if b.dim == a.dim and bdry(c, a) == bdry(c, b):
                    choices.append(Sphere(a.dim, (a, b)))
        s = choices[rng.randrange(len(choices))]
        c, _, _ = extend_comp(c, s)
    return c
