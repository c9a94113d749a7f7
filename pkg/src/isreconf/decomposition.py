"""Modular decomposition, modular-width, and twin-class partitions.

The decomposition here is the straightforward polynomial one: components
and co-components handle degenerate levels, and for a connected,
co-connected graph the maximal proper modules are recovered by partition
refinement plus splitter closure.  Deliberately not the linear-time
algorithm; desk-scale inputs tolerate a near-cubic bound and the simple
version is easy to validate against brute force.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError, InternalError
from .graph import Graph, bits, reserve_stack


@dataclass(frozen=True)
class MDNode:
    """One node of a modular decomposition tree."""

    kind: str                      # "leaf" | "parallel" | "series" | "prime"
    span: frozenset[int]
    children: tuple["MDNode", ...] = ()
    vertex: int | None = None      # set for leaves only

    def leaf_count(self) -> int:
        if self.kind == "leaf":
            return 1
        return sum(c.leaf_count() for c in self.children)


@dataclass(frozen=True)
class TwinClass:
    """A twin class; induces a clique or an edgeless graph."""

    members: frozenset[int]
    kind: str                      # "clique" | "independent"


def is_module(g: Graph, module: frozenset[int] | set[int]) -> bool:
    """True iff every member has the same neighbors outside the set."""
    m = g._mask(module)
    if m == 0:
        raise InputError("a module must be nonempty")
    outside = None
    for p in bits(m):
        nb = g._adj[p] & ~m
        if outside is None:
            outside = nb
        elif nb != outside:
            return False
    return True


def _min_module(g: Graph, seed: int) -> int:
    """Smallest module containing the seed mask (computed by splitter closure).

    A vertex outside the working set W splits W if it has both a neighbor
    and a non-neighbor inside; the closure adds all splitters until none
    remain.  Tracked incrementally: X collects vertices seeing a member,
    Y collects vertices missing a member.
    """
    live = g._vmask
    adj = g._adj
    w = seed
    x = 0
    y = 0
    pending = seed
    while True:
        for p in bits(pending):
            x |= adj[p]
            y |= live & ~adj[p] & ~(1 << p)
        splitters = x & y & live & ~w
        if not splitters:
            return w
        w |= splitters
        pending = splitters


def _prime_child_masks(g: Graph) -> list[int]:
    """Maximal proper modules of a connected, co-connected graph.

    Refining {v, N(v), rest} by every vertex as pivot yields exactly the
    maximal modules avoiding v; the one containing v is the union of the
    fragments whose closure with v stays proper.
    """
    live = g._vmask
    adj = g._adj
    vbit = live & -live
    vpos = vbit.bit_length() - 1
    parts = [vbit]
    nv = adj[vpos]
    rest = live & ~nv & ~vbit
    if nv:
        parts.append(nv)
    if rest:
        parts.append(rest)
    # worklist refinement: a pivot never splits its own part, so when a part
    # splits, its members regain splitting power and must be re-processed
    queue = list(bits(live))
    queued = live
    while queue:
        p = queue.pop()
        queued &= ~(1 << p)
        nb = adj[p]
        pb = 1 << p
        nxt = []
        for part in parts:
            if part & pb:
                nxt.append(part)
                continue
            inside = part & nb
            if inside and inside != part:
                nxt.append(inside)
                nxt.append(part & ~inside)
                revive = part & ~queued
                for q in bits(revive):
                    queue.append(q)
                queued |= revive
            else:
                nxt.append(part)
        parts = nxt

    home = vbit
    others = []
    for part in parts:
        if part == vbit:
            continue
        if _min_module(g, vbit | part) != live:
            home |= part
        else:
            others.append(part)
    children = [home] + others
    children.sort(key=lambda m: (m & -m))
    total = 0
    for c in children:
        if not is_module(g, g._idset(c)):
            raise InternalError("prime split produced a non-module part")
        total |= c
    if total != live or len(children) < 2:
        raise InternalError("prime split is not a partition")
    return children


def _root_child_masks(g: Graph) -> tuple[str, list[int]]:
    """Kind and child masks of the decomposition root; needs n >= 2."""
    cached = g._memo.get("root")
    if cached is not None:
        return cached
    comps = g._component_masks()
    if len(comps) > 1:
        result = ("parallel", comps)
    else:
        cocomps = g._co_component_masks()
        if len(cocomps) > 1:
            result = ("series", cocomps)
        else:
            result = ("prime", _prime_child_masks(g))
    g._memo["root"] = result
    return result


def md_tree(g: Graph) -> MDNode:
    """Modular decomposition tree of a nonempty graph."""
    if g.n == 0:
        raise InputError("modular decomposition needs a nonempty graph")
    reserve_stack(g.n)
    cached = g._memo.get("mdtree")
    if cached is not None:
        return cached
    if g.n == 1:
        v = g.ids[0]
        node = MDNode("leaf", frozenset((v,)), vertex=v)
    else:
        kind, masks = _root_child_masks(g)
        children = tuple(md_tree(g._derive(m)) for m in masks)
        node = MDNode(kind, g.vertices, children)
    g._memo["mdtree"] = node
    return node


def top_partition(g: Graph) -> list[frozenset[int]]:
    """Non-trivial partition of V into modules: the root's children.

    Prime roots give the maximal modular partition; parallel and series
    roots contribute their components and co-components.  Parts are
    ordered by smallest member ID.
    """
    if g.n < 2:
        raise InputError("top_partition needs at least two vertices")
    _, masks = _root_child_masks(g)
    return [g._idset(m) for m in masks]


def modular_width(g: Graph) -> int:
    """Minimum width of a recursive module-partition scheme for g.

    Equals the maximum child count over prime nodes of the decomposition
    tree; any graph with at least two vertices needs width 2 even when
    cograph operations suffice.
    """
    if g.n == 0:
        raise InputError("modular width of the empty graph is undefined")
    cached = g._memo.get("mw")
    if cached is not None:
        return cached

    def walk(node: MDNode) -> int:
        if node.kind == "leaf":
            return 1
        best = len(node.children) if node.kind == "prime" else 2
        for c in node.children:
            best = max(best, walk(c))
        return best

    width = 1 if g.n == 1 else max(2, walk(md_tree(g)))
    g._memo["mw"] = width
    return width


def nd_partition(g: Graph) -> list[TwinClass]:
    """Twin classes of g, each flagged clique or independent.

    Two vertices are twins when their neighborhoods agree outside the
    pair; the classes are the finest partition merging both false twins
    (equal open neighborhoods) and true twins (equal closed ones).  The
    class count is the neighborhood diversity of g.
    """
    if g.n == 0:
        raise InputError("twin partition needs a nonempty graph")
    cached = g._memo.get("nd")
    if cached is not None:
        return cached
    positions = list(bits(g._vmask))
    parent = {p: p for p in positions}

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(a: int, b: int) -> None:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)

    open_groups: dict[int, int] = {}
    closed_groups: dict[int, int] = {}
    for p in positions:
        key = g._adj[p]
        first = open_groups.setdefault(key, p)
        if first != p:
            union(first, p)
        key = g._adj[p] | (1 << p)
        first = closed_groups.setdefault(key, p)
        if first != p:
            union(first, p)

    grouped: dict[int, int] = {}
    for p in positions:
        root = find(p)
        grouped[root] = grouped.get(root, 0) | (1 << p)
    classes = []
    for mask in sorted(grouped.values(), key=lambda m: m & -m):
        members = g._idset(mask)
        if mask.bit_count() >= 2:
            first = mask & -mask
            second = (mask ^ first) & -(mask ^ first)
            kind = "clique" if g._adj[first.bit_length() - 1] & second else "independent"
        else:
            kind = "independent"
        classes.append(TwinClass(members, kind))
    g._memo["nd"] = classes
    return classes
