"""Finite globular sets, disks and spheres, globular cardinals with their
boundaries, suspension and wedge.

Cells are (dimension, id) pairs with dense integer ids per dimension.  A
globular cardinal stores the linear order induced by sources and targets;
boundary inclusions pick least and greatest class representatives in that
order.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import NotCardinal, NotParallel

CellRef = tuple  # tuple[int, int]: (dimension, id)


@dataclass(frozen=True)
class GlobSet:
    """Per-dimension cell counts with source and target maps.

    `src[n][i]` is the source (an n-cell id) of the (n+1)-cell i; same for
    `tgt`.  `counts` carries no trailing zeros, so `dim` is well defined.
    """

    counts: tuple[int, ...]
    src: tuple[tuple[int, ...], ...]
    tgt: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        assert not self.counts or self.counts[-1] > 0, "trailing empty dimension"
        levels = max(len(self.counts) - 1, 0)
        assert len(self.src) == len(self.tgt) == levels
        for n in range(levels):
            assert len(self.src[n]) == len(self.tgt[n]) == self.counts[n + 1]
            for i in range(self.counts[n + 1]):
                assert 0 <= self.src[n][i] < self.counts[n]
                assert 0 <= self.tgt[n][i] < self.counts[n]
        # globularity
        for n in range(1, levels):
            for i in range(self.counts[n + 1]):
                s, t = self.src[n][i], self.tgt[n][i]
                assert self.src[n - 1][s] == self.src[n - 1][t]
                assert self.tgt[n - 1][s] == self.tgt[n - 1][t]

    @property
    def dim(self) -> int:
        return len(self.counts) - 1

    def cells(self):
        for n, c in enumerate(self.counts):
            for i in range(c):
                yield (n, i)

    def cell_count(self) -> int:
        return sum(self.counts)

    def src_of(self, cell: CellRef) -> CellRef:
        n, i = cell
        return (n - 1, self.src[n - 1][i])

    def tgt_of(self, cell: CellRef) -> CellRef:
        n, i = cell
        return (n - 1, self.tgt[n - 1][i])


EMPTY = GlobSet((), (), ())


def make_globset(counts, src, tgt) -> GlobSet:
    """Build a GlobSet, normalising away trailing empty dimensions."""
    counts = list(counts)
    while counts and counts[-1] == 0:
        counts.pop()
    levels = max(len(counts) - 1, 0)
    return GlobSet(
        tuple(counts),
        tuple(tuple(m) for m in list(src)[:levels]),
        tuple(tuple(m) for m in list(tgt)[:levels]),
    )


@dataclass(frozen=True)
class GlobMorphism:
    """Per-dimension cell functions commuting with source and target."""

    dom: GlobSet
    cod: GlobSet
    maps: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        assert len(self.maps) == len(self.dom.counts)
        for n, m in enumerate(self.maps):
            assert len(m) == self.dom.counts[n]
            for i in m:
                assert 0 <= i < self.cod.counts[n]
        for n in range(1, len(self.dom.counts)):
            for i in range(self.dom.counts[n]):
                img = self.maps[n][i]
                assert self.cod.src[n - 1][img] == self.maps[n - 1][self.dom.src[n - 1][i]]
                assert self.cod.tgt[n - 1][img] == self.maps[n - 1][self.dom.tgt[n - 1][i]]

    def apply(self, cell: CellRef) -> CellRef:
        n, i = cell
        return (n, self.maps[n][i])

    def is_iso(self) -> bool:
        if self.dom.counts != self.cod.counts:
            return False
        return all(sorted(m) == list(range(len(m))) for m in self.maps)


def identity_glob(x: GlobSet) -> GlobMorphism:
    return GlobMorphism(x, x, tuple(tuple(range(c)) for c in x.counts))


def compose_glob(g: GlobMorphism, f: GlobMorphism) -> GlobMorphism:
    """g after f."""
    assert f.cod == g.dom
    return GlobMorphism(
        f.dom, g.cod,
        tuple(tuple(g.maps[n][i] for i in f.maps[n]) for n in range(len(f.maps))))


def inverse_glob(f: GlobMorphism) -> GlobMorphism:
    assert f.is_iso()
    maps = []
    for m in f.maps:
        inv = [0] * len(m)
        for i, j in enumerate(m):
            inv[j] = i
        maps.append(tuple(inv))
    return GlobMorphism(f.cod, f.dom, tuple(maps))


# --------------------------------------------------------------------------
# disks and spheres

def disk(n: int) -> GlobSet:
    """The globular set represented by n: two cells below the top, one on top."""
    assert n >= 0
    counts = (2,) * n + (1,)
    src = tuple((0,) * counts[d + 1] for d in range(n))
    tgt = tuple((1,) * counts[d + 1] for d in range(n))
    return GlobSet(counts, src, tgt)


def sphere(n: int) -> GlobSet:
    """The n-sphere: the (n+1)-disk with its top cell removed; empty at n = -1."""
    assert n >= -1
    if n == -1:
        return EMPTY
    counts = (2,) * (n + 1)
    src = tuple((0, 0) for _ in range(n))
    tgt = tuple((1, 1) for _ in range(n))
    return GlobSet(counts, src, tgt)


def iota(n: int) -> GlobMorphism:
    """The inclusion of the (n-1)-sphere into the n-disk."""
    assert n >= 0
    return GlobMorphism(sphere(n - 1), disk(n), tuple((0, 1) for _ in range(n)))


# --------------------------------------------------------------------------
# the Sol order and globular cardinals

def sol_order(x: GlobSet) -> tuple[CellRef, ...]:
    """Linearise the order generated by src c < c < tgt c, or fail.

    Fails when the globular set is empty or when two cells are
    incomparable (equivalently, when the relation has a cycle or the
    topological order is not unique).
    """
    nodes = list(x.cells())
    if not nodes:
        raise NotCardinal("the empty globular set")
    edges: set[tuple[CellRef, CellRef]] = set()
    for cell in nodes:
        n, _ = cell
        if n >= 1:
            edges.add((x.src_of(cell), cell))
            edges.add((cell, x.tgt_of(cell)))
    succ: dict[CellRef, list[CellRef]] = {c: [] for c in nodes}
    indeg: dict[CellRef, int] = {c: 0 for c in nodes}
    for a, b in sorted(edges):
        succ[a].append(b)
        indeg[b] += 1
    avail = sorted(c for c in nodes if indeg[c] == 0)
    order: list[CellRef] = []
    while avail:
        if len(avail) > 1:
            raise NotCardinal(f"incomparable cells {avail[0]} and {avail[1]}")
        c = avail.pop()
        order.append(c)
        for b in succ[c]:
            indeg[b] -= 1
            if indeg[b] == 0:
                avail.append(b)
        avail.sort()
    if len(order) != len(nodes):
        raise NotCardinal("the generated order has a cycle")
    return tuple(order)


@dataclass(frozen=True)
class GlobCardinal:
    """A globular set whose Sol preorder is a finite non-empty total order."""

    glob: GlobSet
    order: tuple[CellRef, ...]

    def __post_init__(self):
        assert self.order == sol_order(self.glob)

    @property
    def dim(self) -> int:
        return self.glob.dim

    def rank(self, cell: CellRef) -> int:
        return self.order.index(cell)


def cardinal(x: GlobSet) -> GlobCardinal:
    return GlobCardinal(x, sol_order(x))


def cardinal_iso(x: GlobCardinal, y: GlobCardinal) -> GlobMorphism | None:
    """The order-preserving isomorphism between two cardinals, if any.

    Isomorphic cardinals match rank for rank along their Sol orders, so no
    search is needed: the rank map either is a morphism or no iso exists.
    """
    if len(x.order) != len(y.order):
        return None
    if any(a[0] != b[0] for a, b in zip(x.order, y.order)):
        return None
    maps = [[0] * c for c in x.glob.counts]
    for (dx, ix), (dy, iy) in zip(x.order, y.order):
        maps[dx][ix] = iy
    try:
        return GlobMorphism(x.glob, y.glob, tuple(tuple(m) for m in maps))
    except AssertionError:
        return None


# --------------------------------------------------------------------------
# boundaries of cardinals

def _boundary_classes(x: GlobCardinal, k: int) -> list[list[int]]:
    """Parallel classes of the k-cells, each listed in Sol order, classes
    ordered by their first member's rank."""
    if k > x.dim:
        return []
    ranked = [i for (d, i) in x.order if d == k]
    classes: dict[object, list[int]] = {}
    for i in ranked:
        if k == 0:
            key = ()
        else:
            key = (x.glob.src[k - 1][i], x.glob.tgt[k - 1][i])
        classes.setdefault(key, []).append(i)
    return sorted(classes.values(), key=lambda members: ranked.index(members[0]))


def boundary_card(x: GlobCardinal, k: int) -> GlobCardinal:
    """The k-boundary: dimensions below k copied, k-cells collapsed to
    parallel classes, higher cells dropped."""
    assert k >= 0
    if k >= x.dim:
        return x
    classes = _boundary_classes(x, k)
    counts = x.glob.counts[:k] + (len(classes),)
    src = list(x.glob.src[: max(k - 1, 0)])
    tgt = list(x.glob.tgt[: max(k - 1, 0)])
    if k >= 1:
        src.append(tuple(x.glob.src[k - 1][c[0]] for c in classes))
        tgt.append(tuple(x.glob.tgt[k - 1][c[0]] for c in classes))
    return cardinal(make_globset(counts, src, tgt))


def _boundary_incl(x: GlobCardinal, k: int, greatest: bool) -> GlobMorphism:
    if k >= x.dim:
        return identity_glob(x.glob)
    b = boundary_card(x, k)
    maps = [tuple(range(c)) for c in x.glob.counts[:k]]
    picks = tuple(c[-1] if greatest else c[0] for c in _boundary_classes(x, k))
    maps.append(picks)
    return GlobMorphism(b.glob, x.glob, tuple(maps))


def src_incl(x: GlobCardinal, k: int) -> GlobMorphism:
    """Inclusion of the k-boundary picking least class representatives."""
    return _boundary_incl(x, k, greatest=False)


def tgt_incl(x: GlobCardinal, k: int) -> GlobMorphism:
    return _boundary_incl(x, k, greatest=True)


# --------------------------------------------------------------------------
# bipointed globular sets, suspension and wedge

@dataclass(frozen=True)
class Bipointed:
    """A globular set with two distinguished 0-cells."""

    glob: GlobSet
    left: int
    right: int

    def __post_init__(self):
        assert self.glob.counts and 0 <= self.left < self.glob.counts[0]
        assert 0 <= self.right < self.glob.counts[0]


def as_bipointed(x: GlobCardinal) -> Bipointed:
    """A cardinal bipointed by its minimum and maximum cells (both 0-cells)."""
    (d0, i0), (d1, i1) = x.order[0], x.order[-1]
    assert d0 == 0 and d1 == 0
    return Bipointed(x.glob, i0, i1)


def suspend(x: GlobSet) -> Bipointed:
    """Shift every dimension up by one between two fresh 0-cells."""
    counts = (2,) + x.counts
    src = ((0,) * (x.counts[0] if x.counts else 0),) + x.src
    tgt = ((1,) * (x.counts[0] if x.counts else 0),) + x.tgt
    if not x.counts:
        src, tgt = (), ()
    return Bipointed(GlobSet(counts, src, tgt), 0, 1)


def suspend_morphism(f: GlobMorphism) -> GlobMorphism:
    return GlobMorphism(
        suspend(f.dom).glob, suspend(f.cod).glob, ((0, 1),) + f.maps)


def wedge_with_injections(x: Bipointed, y: Bipointed) -> tuple[Bipointed, GlobMorphism, GlobMorphism]:
    """Glue y's left basepoint onto x's right one; also return the two
    coprojections."""
    nx = x.glob.counts
    ny = y.glob.counts
    levels = max(len(nx), len(ny))

    def y0(j: int) -> int:
        if j == y.left:
            return x.right
        return nx[0] + (j if j < y.left else j - 1)

    def ycell(d: int, j: int) -> int:
        if d == 0:
            return y0(j)
        return (nx[d] if d < len(nx) else 0) + j

    counts = [(nx[d] if d < len(nx) else 0) + (ny[d] if d < len(ny) else 0)
              for d in range(levels)]
    counts[0] -= 1  # the glued basepoint
    src = []
    tgt = []
    for d in range(1, levels):
        s = [0] * counts[d]
        t = [0] * counts[d]
        for i in range(nx[d] if d < len(nx) else 0):
            s[i] = x.glob.src[d - 1][i]
            t[i] = x.glob.tgt[d - 1][i]
        for j in range(ny[d] if d < len(ny) else 0):
            s[ycell(d, j)] = ycell(d - 1, y.glob.src[d - 1][j])
            t[ycell(d, j)] = ycell(d - 1, y.glob.tgt[d - 1][j])
        src.append(tuple(s))
        tgt.append(tuple(t))
    w = GlobSet(tuple(counts), tuple(src), tuple(tgt))
    inl = GlobMorphism(x.glob, w, tuple(tuple(range(c)) for c in nx))
    inr = GlobMorphism(
        y.glob, w,
        tuple(tuple(ycell(d, j) for j in range(ny[d])) for d in range(len(ny))))
    return Bipointed(w, x.left, y0(y.right)), inl, inr


def wedge(x: Bipointed, y: Bipointed) -> Bipointed:
    """The wedge sum of two bipointed globular sets."""
    return wedge_with_injections(x, y)[0]


def wedge_morphism(fx: GlobMorphism, fy: GlobMorphism,
                   dom_x: Bipointed, dom_y: Bipointed,
                   cod_x: Bipointed, cod_y: Bipointed) -> GlobMorphism:
    """The induced map between wedges of basepoint-preserving morphisms."""
    dom, dinl, dinr = wedge_with_injections(dom_x, dom_y)
    cod, cinl, cinr = wedge_with_injections(cod_x, cod_y)
    maps = [[0] * c for c in dom.glob.counts]
    for cell in dom_x.glob.cells():
        d, i = dinl.apply(cell)
        maps[d][i] = cinl.apply(fx.apply(cell))[1]
    for cell in dom_y.glob.cells():
        d, i = dinr.apply(cell)
        maps[d][i] = cinr.apply(fy.apply(cell))[1]
    return GlobMorphism(dom.glob, cod.glob, tuple(tuple(m) for m in maps))


# --------------------------------------------------------------------------
# context extension

def extend_glob(x: GlobSet, a: tuple[int, int] | None, n: int) -> tuple[GlobSet, CellRef, GlobMorphism]:
    """Adjoin one fresh n-cell whose boundary is the (n-1)-sphere `a`.

    `a` is a pair of parallel (n-1)-cell ids, or None for n = 0.  Returns
    the extended set, the fresh cell, and the inclusion of x.
    """
    assert n >= 0
    if n == 0:
        assert a is None
    else:
        assert a is not None
        if n - 1 >= len(x.counts):
            raise NotParallel(f"no cells of dimension {n - 1}")
        s, t = a
        if not (0 <= s < x.counts[n - 1] and 0 <= t < x.counts[n - 1]):
            raise NotParallel(f"cell ids {a} out of range at dimension {n - 1}")
        if n >= 2:
            if x.src[n - 2][s] != x.src[n - 2][t] or x.tgt[n - 2][s] != x.tgt[n - 2][t]:
                raise NotParallel(f"cells {s} and {t} at dimension {n - 1} differ in boundary")
    if n > len(x.counts):
        raise NotParallel(f"cannot add an {n}-cell to a set of dimension {x.dim}")
    counts = list(x.counts) + [0] * (n + 1 - len(x.counts))
    src = [list(m) for m in x.src] + ([[]] if n == len(x.counts) and n >= 1 else [])
    tgt = [list(m) for m in x.tgt] + ([[]] if n == len(x.counts) and n >= 1 else [])
    fresh = counts[n]
    counts[n] += 1
    if n >= 1:
        src[n - 1].append(a[0])
        tgt[n - 1].append(a[1])
    bigger = make_globset(counts, src, tgt)
    incl = GlobMorphism(x, bigger, tuple(tuple(range(c)) for c in x.counts))
    return bigger, (n, fresh), incl


# --------------------------------------------------------------------------
# serialization

def globset_to_json(x: GlobSet) -> dict:
    return {
        "cells": list(x.counts),
        "src": [list(m) for m in x.src],
        "tgt": [list(m) for m in x.tgt],
    }


def globset_from_json(d: dict) -> GlobSet:
    return make_globset(d["cells"], d["src"], d["tgt"])
