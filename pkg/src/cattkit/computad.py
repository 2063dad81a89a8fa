"""Finite computads and the cells of the free omega-category they present.

A computad is a stratified table of generators with attaching spheres over
the lower strata.  Cells are intensional syntax trees built from the two
constructors `var` (a generator) and `coh` (a composite over a Batanin
tree, guarded by fullness of its sphere); equality of cells is structural.
The dimension ladder is one stratified structure with truncation as a
view, and the mutual induction of the definitions becomes mutual
recursion on dimension.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from itertools import permutations

from .batanin import BataninTree, dim_tree, format_tree, parse_tree, pos, src_pos, tgt_pos
from .errors import (
    DimensionViolation,
    DomainMismatch,
    InvalidCell,
    InvalidSphere,
    NotFull,
    NotParallel,
    UnknownGenerator,
)
from .globular import GlobSet


@dataclass(frozen=True)
class GenCell:
    dim: int
    gen: int


@dataclass(frozen=True)
class CohCell:
    """A composite cell: a tree of arity, a full sphere over the free
    computad on the tree's positions, and the map sending positions to
    cells of the ambient computad."""

    dim: int
    tree: BataninTree
    sphere: "Sphere"
    posmap: tuple  # tuple[tuple[Cell, ...], ...] indexed like positions


Cell = GenCell | CohCell


@dataclass(frozen=True)
class Sphere:
    """A parallel pair of n-cells; the unit sphere at dimension -1."""

    dim: int
    cells: tuple | None  # (Cell, Cell) | None

    def __post_init__(self):
        if self.dim == -1:
            assert self.cells is None
        else:
            assert self.cells is not None and len(self.cells) == 2


UNIT_SPHERE = Sphere(-1, None)


@dataclass(frozen=True)
class Computad:
    """gens[n] counts the n-generators; attach[n][v] is the attaching
    sphere of generator v, a sphere of dimension n-1 over the strata below."""

    gens: tuple[int, ...]
    attach: tuple[tuple[Sphere, ...], ...]


EMPTY_COMPUTAD = Computad((), ())


def truncate(c: Computad, n: int) -> Computad:
    """Forget the generators above dimension n."""
    if n < 0:
        return EMPTY_COMPUTAD
    gens = list(c.gens[: n + 1])
    while gens and gens[-1] == 0:
        gens.pop()
    return Computad(tuple(gens), c.attach[: len(gens)])


def make_computad(gens, attach) -> Computad:
    """Build and fully validate a computad."""
    gens = list(gens)
    attach = [tuple(level) for level in attach]
    while gens and gens[-1] == 0:
        gens.pop()
    attach = attach[: len(gens)]
    c = Computad(tuple(gens), tuple(attach))
    for n in range(len(c.gens)):
        if len(c.attach[n]) != c.gens[n]:
            raise InvalidSphere(f"dim {n}", "attaching table size mismatch")
        lower = truncate(c, n - 1)
        for v in range(c.gens[n]):
            s = c.attach[n][v]
            if s.dim != n - 1:
                raise InvalidSphere(f"gen ({n}, {v})", f"sphere dimension {s.dim}, expected {n - 1}")
            check_sphere(lower, s, path=f"gen ({n}, {v})")
    return c


# --------------------------------------------------------------------------
# boundaries, morphism action, support

def bdry(c: Computad, cell: Cell) -> Sphere:
    """Source and target of a cell, as a sphere one dimension down."""
    match cell:
        case GenCell(d, v):
            if d >= len(c.gens) or v >= c.gens[d]:
                raise UnknownGenerator(d, v)
            return c.attach[d][v]
        case CohCell(_, _, sphere, posmap):
            if sphere.dim == -1:
                return UNIT_SPHERE
            a, b = sphere.cells
            return Sphere(sphere.dim, (_apply_maps(posmap, a), _apply_maps(posmap, b)))
    raise TypeError(f"not a cell: {cell!r}")


def _apply_maps(maps, cell: Cell) -> Cell:
    match cell:
        case GenCell(d, v):
            if d >= len(maps) or v >= len(maps[d]):
                raise DomainMismatch(f"generator ({d}, {v}) outside the morphism domain")
            return maps[d][v]
        case CohCell(d, tree, sphere, posmap):
            return CohCell(
                d, tree, sphere,
                tuple(tuple(_apply_maps(maps, x) for x in level) for level in posmap))
    raise TypeError(f"not a cell: {cell!r}")


def _apply_sphere(maps, s: Sphere) -> Sphere:
    if s.dim == -1:
        return s
    a, b = s.cells
    return Sphere(s.dim, (_apply_maps(maps, a), _apply_maps(maps, b)))


@dataclass(frozen=True)
class CompMorphism:
    """Dimension-wise assignment of generators to same-dimension cells of
    the codomain, compatible with the attaching spheres."""

    dom: Computad
    cod: Computad
    maps: tuple  # tuple[tuple[Cell, ...], ...]

    def apply(self, cell: Cell) -> Cell:
        return _apply_maps(self.maps, cell)

    def apply_sphere(self, s: Sphere) -> Sphere:
        return _apply_sphere(self.maps, s)


def make_morphism(dom: Computad, cod: Computad, maps) -> CompMorphism:
    """Build and validate a morphism of computads."""
    maps = tuple(tuple(level) for level in maps)
    if len(maps) != len(dom.gens):
        raise DomainMismatch(f"{len(maps)} levels of maps for {len(dom.gens)} generator levels")
    for n in range(len(dom.gens)):
        if len(maps[n]) != dom.gens[n]:
            raise DomainMismatch(f"level {n} maps {len(maps[n])} generators, domain has {dom.gens[n]}")
        for v in range(dom.gens[n]):
            img = maps[n][v]
            if img.dim != n:
                raise DimensionViolation(f"map of ({n}, {v})", f"image has dimension {img.dim}")
            check_cell(cod, img, path=f"map of ({n}, {v})")
            if bdry(cod, img) != _apply_sphere(maps, dom.attach[n][v]):
                raise DomainMismatch(f"map of ({n}, {v}) does not respect the attaching sphere")
    return CompMorphism(dom, cod, maps)


def identity_morphism(c: Computad) -> CompMorphism:
    return CompMorphism(
        c, c, tuple(tuple(GenCell(n, v) for v in range(k)) for n, k in enumerate(c.gens)))


def apply_cell(g: CompMorphism, cell: Cell) -> Cell:
    """Action of a morphism on a cell of its domain's free omega-category."""
    return _apply_maps(g.maps, cell)


def compose(g: CompMorphism, f: CompMorphism) -> CompMorphism:
    """g after f."""
    if f.cod != g.dom:
        raise DomainMismatch("codomain of the first factor differs from the domain of the second")
    return CompMorphism(
        f.dom, g.cod,
        tuple(tuple(_apply_maps(g.maps, cell) for cell in level) for level in f.maps))


def support(cell: Cell) -> frozenset[int]:
    """Top-dimensional generators used by a cell (ids at the cell's own
    dimension)."""
    match cell:
        case GenCell(_, v):
            return frozenset((v,))
        case CohCell(d, _, _, posmap):
            out: frozenset[int] = frozenset()
            if d < len(posmap):
                for img in posmap[d]:
                    out |= support(img)
            return out
    raise TypeError(f"not a cell: {cell!r}")


def total_support(c: Computad, cell: Cell) -> frozenset:
    """All generators, of every dimension, that a cell depends on."""
    match cell:
        case GenCell(d, v):
            out = frozenset(((d, v),))
            s = bdry(c, cell)
            if s.dim >= 0:
                out |= total_support(c, s.cells[0]) | total_support(c, s.cells[1])
            return out
        case CohCell(_, _, _, posmap):
            out = frozenset()
            for level in posmap:
                for img in level:
                    out |= total_support(c, img)
            return out
    raise TypeError(f"not a cell: {cell!r}")


# --------------------------------------------------------------------------
# free computads and fullness

def free(x: GlobSet) -> Computad:
    """The computad with the cells of x as generators, attached along the
    source and target of x."""
    attach: list[tuple[Sphere, ...]] = []
    for n, k in enumerate(x.counts):
        if n == 0:
            attach.append(tuple(UNIT_SPHERE for _ in range(k)))
        else:
            attach.append(tuple(
                Sphere(n - 1, (GenCell(n - 1, x.src[n - 1][i]), GenCell(n - 1, x.tgt[n - 1][i])))
                for i in range(k)))
    return Computad(x.counts, tuple(attach))


@cache
def free_pos(b: BataninTree) -> Computad:
    return free(pos(b).card.glob)


def _incl_image(b: BataninTree, n: int, pick_right: bool) -> frozenset[int]:
    f = (tgt_pos if pick_right else src_pos)(b, n)
    if n >= len(f.maps):
        return frozenset()
    return frozenset(f.maps[n])


def is_full(b: BataninTree, s: Sphere) -> bool:
    """Fullness of a sphere over the free computad on the positions of b:
    the supports of the two cells are exactly the top positions in the
    image of the source and target inclusions, recursively down to the
    unit sphere."""
    if s.dim == -1:
        return True
    a, c = s.cells
    if support(a) != _incl_image(b, s.dim, pick_right=False):
        return False
    if support(c) != _incl_image(b, s.dim, pick_right=True):
        return False
    return is_full(b, bdry(free_pos(b), a))


# --------------------------------------------------------------------------
# validity

def check_cell(c: Computad, cell: Cell, path: str = "cell") -> None:
    """Recursively validate the constructor constraints of a cell."""
    match cell:
        case GenCell(d, v):
            if d < 0 or d >= len(c.gens) or v < 0 or v >= c.gens[d]:
                raise UnknownGenerator(d, v)
        case CohCell(n, tree, sphere, posmap):
            if n < 1:
                raise DimensionViolation(path, "composite cells exist only in positive dimension")
            if dim_tree(tree) > n:
                raise DimensionViolation(path, f"tree has dimension {dim_tree(tree)} > {n}")
            if sphere.dim != n - 1:
                raise InvalidSphere(path, f"sphere dimension {sphere.dim}, expected {n - 1}")
            fp = free_pos(tree)
            check_sphere(fp, sphere, path=f"{path}.sphere")
            if not is_full(tree, sphere):
                raise NotFull(f"{path}.sphere")
            counts = pos(tree).card.glob.counts
            if len(posmap) != len(counts) or any(len(level) != k for level, k in zip(posmap, counts)):
                raise InvalidCell(path, "position map has the wrong shape")
            for d, level in enumerate(posmap):
                for i, img in enumerate(level):
                    where = f"{path}.posmap[{d}][{i}]"
                    if img.dim != d:
                        raise DimensionViolation(where, f"image has dimension {img.dim}")
                    check_cell(c, img, path=where)
                    if d >= 1:
                        want = Sphere(d - 1, (
                            posmap[d - 1][pos(tree).card.glob.src[d - 1][i]],
                            posmap[d - 1][pos(tree).card.glob.tgt[d - 1][i]]))
                        if bdry(c, img) != want:
                            raise InvalidCell(where, "image does not respect the position boundary")
        case _:
            raise TypeError(f"not a cell: {cell!r}")


def check_sphere(c: Computad, s: Sphere, path: str = "sphere") -> None:
    if s.dim == -1:
        return
    a, b = s.cells
    if a.dim != s.dim or b.dim != s.dim:
        raise InvalidSphere(path, f"member dimensions {a.dim}, {b.dim} differ from {s.dim}")
    check_cell(c, a, path=f"{path}.src")
    check_cell(c, b, path=f"{path}.tgt")
    if bdry(c, a) != bdry(c, b):
        raise NotParallel(path)


# --------------------------------------------------------------------------
# context extension

def extend_comp(c: Computad, s: Sphere) -> tuple[Computad, int, CompMorphism]:
    """Adjoin one generator of dimension s.dim + 1 attached along s.

    Returns the extended computad, the fresh generator id and the
    inclusion of c.
    """
    try:
        check_sphere(c, s)
    except Exception as e:
        raise InvalidSphere("extension", str(e)) from e
    n = s.dim + 1
    gens = list(c.gens) + [0] * (n + 1 - len(c.gens))
    attach = [list(level) for level in c.attach] + [[] for _ in range(n + 1 - len(c.attach))]
    fresh = gens[n]
    gens[n] += 1
    attach[n].append(s)
    bigger = Computad(tuple(gens), tuple(tuple(level) for level in attach))
    incl = CompMorphism(
        c, bigger, tuple(tuple(GenCell(d, v) for v in range(k)) for d, k in enumerate(c.gens)))
    return bigger, fresh, incl


# --------------------------------------------------------------------------
# isomorphism search

def iso_computads(c: Computad, d: Computad) -> CompMorphism | None:
    """A dimension-preserving generator bijection commuting with the
    attaching spheres, as a morphism, or None.

    Backtracking over dimensions; candidates are pruned by matching the
    attaching sphere translated along the bijection fixed so far.
    """
    if c.gens != d.gens:
        return None
    depth = len(c.gens)
    sigma: list[tuple[int, ...]] = []

    def sigma_maps():
        return tuple(tuple(GenCell(n, w) for w in level) for n, level in enumerate(sigma))

    def go(n: int) -> bool:
        if n == depth:
            return True
        maps = sigma_maps()
        buckets: dict[Sphere, list[int]] = {}
        for v in range(c.gens[n]):
            buckets.setdefault(_apply_sphere(maps, c.attach[n][v]), []).append(v)
        targets: dict[Sphere, list[int]] = {}
        for w in range(d.gens[n]):
            targets.setdefault(d.attach[n][w], []).append(w)
        if set(buckets) != set(targets):
            return False
        if any(len(buckets[k]) != len(targets[k]) for k in buckets):
            return False
        keys = sorted(buckets, key=repr)

        def fill(ki: int, assignment: dict[int, int]) -> bool:
            if ki == len(keys):
                level = tuple(assignment[v] for v in range(c.gens[n]))
                sigma.append(level)
                if go(n + 1):
                    return True
                sigma.pop()
                return False
            key = keys[ki]
            for perm in permutations(targets[key]):
                for v, w in zip(buckets[key], perm):
                    assignment[v] = w
                if fill(ki + 1, assignment):
                    return True
            return False

        return fill(0, {})

    if go(0):
        return CompMorphism(c, d, sigma_maps())
    return None


# --------------------------------------------------------------------------
# serialization

def cell_to_json(cell: Cell) -> dict:
    match cell:
        case GenCell(d, v):
            return {"kind": "gen", "dim": d, "id": v}
        case CohCell(n, tree, sphere, posmap):
            return {
                "kind": "coh",
                "dim": n,
                "tree": format_tree(tree),
                "sphere": sphere_to_json(sphere),
                "posmap": [[cell_to_json(x) for x in level] for level in posmap],
            }
    raise TypeError(f"not a cell: {cell!r}")


def sphere_to_json(s: Sphere) -> dict:
    if s.dim == -1:
        return {"dim": -1}
    return {"dim": s.dim, "src": cell_to_json(s.cells[0]), "tgt": cell_to_json(s.cells[1])}


def computad_to_json(c: Computad) -> dict:
    return {
        "dims": [
            {"gens": list(range(c.gens[n])),
             "attach": [sphere_to_json(s) for s in c.attach[n]]}
            for n in range(len(c.gens))
        ]
    }


def cell_from_json(d: dict) -> Cell:
    if d["kind"] == "gen":
        return GenCell(d["dim"], d["id"])
    return CohCell(
        d["dim"], parse_tree(d["tree"]), sphere_from_json(d["sphere"]),
        tuple(tuple(cell_from_json(x) for x in level) for level in d["posmap"]))


def sphere_from_json(d: dict) -> Sphere:
    if d["dim"] == -1:
        return UNIT_SPHERE
    return Sphere(d["dim"], (cell_from_json(d["src"]), cell_from_json(d["tgt"])))


def computad_from_json(d: dict) -> Computad:
    gens = [len(level["gens"]) for level in d["dims"]]
    attach = [tuple(sphere_from_json(s) for s in level["attach"]) for level in d["dims"]]
    return make_computad(gens, attach)
