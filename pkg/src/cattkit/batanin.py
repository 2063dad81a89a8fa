"""Batanin trees, their positions, boundaries and inclusions, and the
linear zigzag encoding.

Positions are computed as iterated wedges of suspensions and then
relabelled so that position ids follow the total order of the cells: the
id of a d-position is its rank among the d-positions along the zigzag.
That makes the tree/zigzag/cardinal correspondences exact rather than
up-to-isomorphism.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cache

from .errors import NotSmooth
from .globular import (
    Bipointed,
    GlobCardinal,
    GlobMorphism,
    GlobSet,
    cardinal,
    disk,
    identity_glob,
    make_globset,
    sol_order,
    suspend,
    suspend_morphism,
    wedge,
    wedge_morphism,
)

Zigzag = tuple  # tuple[int, ...]


@dataclass(frozen=True)
class BataninTree:
    children: tuple[BataninTree, ...] = ()


def br(*children: BataninTree) -> BataninTree:
    return BataninTree(tuple(children))


LEAF = br()


def format_tree(b: BataninTree) -> str:
    return "br[" + ",".join(format_tree(c) for c in b.children) + "]"


def parse_tree(text: str) -> BataninTree:
    """Parse the textual syntax br[br[],...]; whitespace-insensitive."""
    s = "".join(text.split())
    pos = 0

    def node() -> BataninTree:
        nonlocal pos
        if not s.startswith("br[", pos):
            raise ValueError(f"expected 'br[' at offset {pos} in {text!r}")
        pos += 3
        children = []
        if s.startswith("]", pos):
            pos += 1
            return BataninTree(())
        while True:
            children.append(node())
            if s.startswith(",", pos):
                pos += 1
                continue
            if s.startswith("]", pos):
                pos += 1
                return BataninTree(tuple(children))
            raise ValueError(f"expected ',' or ']' at offset {pos} in {text!r}")

    out = node()
    if pos != len(s):
        raise ValueError(f"trailing input at offset {pos} in {text!r}")
    return out


def dim_tree(b: BataninTree) -> int:
    return max((dim_tree(c) + 1 for c in b.children), default=0)


def boundary_tree(b: BataninTree, k: int) -> BataninTree:
    if k == 0:
        return LEAF
    return BataninTree(tuple(boundary_tree(c, k - 1) for c in b.children))


def positions_count(b: BataninTree) -> int:
    return 1 + sum(positions_count(c) + 1 for c in b.children)


# --------------------------------------------------------------------------
# zigzag sequences

def check_zigzag(m: Zigzag) -> None:
    if not m:
        raise NotSmooth(m, "empty sequence")
    if m[0] != 0 or m[-1] != 0:
        raise NotSmooth(m, "must start and end at 0")
    for i in range(1, len(m)):
        if abs(m[i] - m[i - 1]) != 1:
            raise NotSmooth(m, f"step at index {i} is not unit")
        if m[i] < 0:
            raise NotSmooth(m, f"negative entry at index {i}")


def zig(x: GlobCardinal) -> Zigzag:
    """Cell dimensions along the total order."""
    return tuple(d for (d, _) in x.order)


def card(m: Zigzag) -> GlobCardinal:
    """The globular cardinal encoded by a smooth zigzag sequence.

    k-cells are the indices carrying k; the source of a cell is the
    nearest lower neighbour to the left, the target the nearest to the
    right.
    """
    check_zigzag(m)
    ids: dict[int, int] = {}
    per_dim: list[int] = [0] * (max(m) + 1)
    for i, d in enumerate(m):
        ids[i] = per_dim[d]
        per_dim[d] += 1
    src: list[list[int]] = [[] for _ in range(max(m))]
    tgt: list[list[int]] = [[] for _ in range(max(m))]
    for i, d in enumerate(m):
        if d == 0:
            continue
        s = max(j for j in range(i) if m[j] == d - 1)
        t = min(j for j in range(i + 1, len(m)) if m[j] == d - 1)
        src[d - 1].append(ids[s])
        tgt[d - 1].append(ids[t])
    x = cardinal(make_globset(per_dim, src, tgt))
    assert zig(x) == tuple(m)
    return x


def tree_of_zig(m: Zigzag) -> BataninTree:
    """Decode a smooth zigzag into the unique tree with that position code."""
    check_zigzag(m)
    children = []
    block: list[int] = []
    for v in m[1:]:
        if v == 0:
            children.append(tree_of_zig(tuple(x - 1 for x in block)))
            block = []
        else:
            block.append(v)
    return BataninTree(tuple(children))


def zig_of_tree(b: BataninTree) -> Zigzag:
    """Position code of a tree, by the recursion: suspend each child's code
    and concatenate, identifying endpoint zeros."""
    out: tuple[int, ...] = (0,)
    for c in b.children:
        out = out + tuple(v + 1 for v in zig_of_tree(c)) + (0,)
    return out


# --------------------------------------------------------------------------
# positions

@dataclass(frozen=True)
class PosSet:
    """The positions of a tree as a globular cardinal with canonical ids."""

    tree: BataninTree
    card: GlobCardinal

    def by_rank(self, r: int):
        return self.card.order[r]

    def rank(self, cell) -> int:
        return self.card.order.index(cell)


@cache
def _pos_raw(b: BataninTree) -> Bipointed:
    parts = [suspend(_pos_raw(c).glob) for c in b.children]
    if not parts:
        return Bipointed(disk(0), 0, 0)
    acc = parts[0]
    for p in parts[1:]:
        acc = wedge(acc, p)
    return acc


@cache
def _canon_iso(b: BataninTree) -> tuple[GlobCardinal, GlobMorphism]:
    """Canonical relabelling of the raw wedge-of-suspensions build."""
    raw = _pos_raw(b).glob
    order = sol_order(raw)
    maps = [[0] * c for c in raw.counts]
    per_dim = [0] * len(raw.counts)
    for d, i in order:
        maps[d][i] = per_dim[d]
        per_dim[d] += 1
    src = [[0] * c for c in raw.counts[1:]]
    tgt = [[0] * c for c in raw.counts[1:]]
    for n in range(1, len(raw.counts)):
        for i in range(raw.counts[n]):
            src[n - 1][maps[n][i]] = maps[n - 1][raw.src[n - 1][i]]
            tgt[n - 1][maps[n][i]] = maps[n - 1][raw.tgt[n - 1][i]]
    canon = make_globset(raw.counts, src, tgt)
    iso = GlobMorphism(raw, canon, tuple(tuple(m) for m in maps))
    return cardinal(canon), iso


@cache
def pos(b: BataninTree) -> PosSet:
    """The globular cardinal of positions of a tree."""
    c, _ = _canon_iso(b)
    assert zig(c) == zig_of_tree(b)
    return PosSet(b, c)


@cache
def _incl_raw(b: BataninTree, k: int, pick_right: bool) -> GlobMorphism:
    """Raw-build inclusion of the positions of the k-boundary."""
    if k == 0:
        bp = _pos_raw(b)
        basepoint = bp.right if pick_right else bp.left
        return GlobMorphism(disk(0), bp.glob, ((basepoint,),))
    if not b.children:
        return identity_glob(disk(0))
    fs = [suspend_morphism(_incl_raw(c, k - 1, pick_right)) for c in b.children]
    doms = [suspend(_pos_raw(boundary_tree(c, k - 1)).glob) for c in b.children]
    cods = [suspend(_pos_raw(c).glob) for c in b.children]
    acc_f, acc_dom, acc_cod = fs[0], doms[0], cods[0]
    for f, d, c in zip(fs[1:], doms[1:], cods[1:]):
        acc_f = wedge_morphism(acc_f, f, acc_dom, d, acc_cod, c)
        acc_dom = wedge(acc_dom, d)
        acc_cod = wedge(acc_cod, c)
    return acc_f


def _incl_pos(b: BataninTree, k: int, pick_right: bool) -> GlobMorphism:
    raw = _incl_raw(b, k, pick_right)
    _, iso_dom = _canon_iso(boundary_tree(b, k))
    _, iso_cod = _canon_iso(b)
    dom = pos(boundary_tree(b, k)).card.glob
    inv = [[0] * c for c in dom.counts]
    for d in range(len(dom.counts)):
        for i, j in enumerate(iso_dom.maps[d]):
            inv[d][j] = i
    maps = tuple(
        tuple(iso_cod.maps[d][raw.maps[d][inv[d][i]]] for i in range(dom.counts[d]))
        for d in range(len(dom.counts)))
    return GlobMorphism(dom, pos(b).card.glob, maps)


def src_pos(b: BataninTree, k: int) -> GlobMorphism:
    """Source inclusion of the k-boundary positions into the positions."""
    return _incl_pos(b, k, pick_right=False)


def tgt_pos(b: BataninTree, k: int) -> GlobMorphism:
    return _incl_pos(b, k, pick_right=True)


# --------------------------------------------------------------------------
# enumeration

def enumerate_zigzags(max_len: int) -> list[Zigzag]:
    """All smooth zigzag sequences of length at most max_len, ordered by
    length then lexicographically."""
    out: list[Zigzag] = []

    def go(prefix: list[int], length: int) -> None:
        if len(prefix) == length:
            if prefix[-1] == 0:
                out.append(tuple(prefix))
            return
        remaining = length - len(prefix)
        for step in (-1, 1):
            v = prefix[-1] + step
            if v < 0 or v > remaining - 1:
                continue
            prefix.append(v)
            go(prefix, length)
            prefix.pop()

    for length in range(1, max_len + 1, 2):
        go([0], length)
    return out


def enumerate_trees(max_positions: int) -> list[BataninTree]:
    """All Batanin trees with at most max_positions positions, without
    duplicates; generated through their zigzag codes."""
    return [tree_of_zig(m) for m in enumerate_zigzags(max_positions)]
