"""Immutable simple graphs over stable integer vertex IDs.

Adjacency is one Python-int bitmask per vertex.  Bit positions are fixed
when a root graph is built and are inherited by every derived subgraph,
so deleting vertices is a handful of mask ANDs, IDs are never renumbered
or reused, and sets can be moved between a graph and its subgraphs
without translation.  All values are immutable after construction and
every operation is a pure function returning a new value.
"""

from __future__ import annotations

import sys
from typing import Iterable, Iterator

from .errors import InputError


def bits(mask: int) -> Iterator[int]:
    """Yield set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def reserve_stack(n: int) -> None:
    """Raise the recursion limit for decomposition-deep inputs.

    Cograph-like graphs can nest n/2 decomposition levels, and the solvers
    recurse a few frames per level; the default limit of 1000 dies around
    800 vertices on such inputs.
    """
    need = min(4000 + 12 * n, 120_000)
    if sys.getrecursionlimit() < need:
        sys.setrecursionlimit(need)


class Graph:
    """Undirected simple graph; no loops, no multi-edges, no weights."""

    __slots__ = ("_uid", "_pos", "_adj", "_vmask", "_memo")

    def __init__(self, vertices: Iterable[int], edges: Iterable[tuple[int, int]] = ()):
        ids = sorted(set(vertices))
        self._uid = tuple(ids)                      # position -> external id
        self._pos = {v: i for i, v in enumerate(ids)}
        adj = [0] * len(ids)
        pos = self._pos
        for u, v in edges:
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            try:
                pu, pv = pos[u], pos[v]
            except KeyError as exc:
                raise InputError(f"edge endpoint {exc.args[0]} is not a vertex") from None
            adj[pu] |= 1 << pv
            adj[pv] |= 1 << pu
        self._adj = adj
        self._vmask = (1 << len(ids)) - 1
        self._memo: dict = {}

    # -- internal constructors -------------------------------------------

    @classmethod
    def _from_adj(cls, ids: list[int], adj: list[int]) -> "Graph":
        """Adopt prebuilt adjacency masks; ids must be sorted, masks symmetric."""
        g = object.__new__(cls)
        g._uid = tuple(ids)
        g._pos = {v: i for i, v in enumerate(ids)}
        g._adj = adj
        g._vmask = (1 << len(ids)) - 1
        g._memo = {}
        return g

    def _derive(self, vmask: int) -> "Graph":
        """Subgraph on the given position mask, sharing the position space."""
        key = ("sub", vmask)
        cached = self._memo.get(key)
        if cached is not None:
            return cached
        g = object.__new__(Graph)
        g._uid = self._uid
        g._pos = self._pos
        adj = [0] * len(self._uid)
        old = self._adj
        for p in bits(vmask):
            adj[p] = old[p] & vmask
        g._adj = adj
        g._vmask = vmask
        g._memo = {}
        self._memo[key] = g
        return g

    # -- mask helpers ------------------------------------------------------

    def _mask(self, vertices: Iterable[int]) -> int:
        m = 0
        pos = self._pos
        vmask = self._vmask
        for v in vertices:
            p = pos.get(v)
            if p is None or not (vmask >> p) & 1:
                raise InputError(f"unknown vertex id {v!r}")
            m |= 1 << p
        return m

    def _ids(self, mask: int) -> tuple[int, ...]:
        uid = self._uid
        return tuple(uid[p] for p in bits(mask))

    def _idset(self, mask: int) -> frozenset[int]:
        uid = self._uid
        return frozenset(uid[p] for p in bits(mask))

    # -- basic queries -----------------------------------------------------

    @property
    def n(self) -> int:
        return self._vmask.bit_count()

    @property
    def m(self) -> int:
        return sum(self._adj[p].bit_count() for p in bits(self._vmask)) // 2

    @property
    def vertices(self) -> frozenset[int]:
        return self._idset(self._vmask)

    @property
    def ids(self) -> tuple[int, ...]:
        """Live vertex IDs in ascending order."""
        return self._ids(self._vmask)

    def has_vertex(self, v: int) -> bool:
        p = self._pos.get(v)
        return p is not None and bool((self._vmask >> p) & 1)

    def has_edge(self, u: int, v: int) -> bool:
        m = self._mask((u, v))
        p = self._pos[u]
        return bool(self._adj[p] & m & ~(1 << p))

    def neighbors(self, v: int) -> frozenset[int]:
        p = self._pos.get(v)
        if p is None or not (self._vmask >> p) & 1:
            raise InputError(f"unknown vertex id {v!r}")
        return self._idset(self._adj[p])

    def degree(self, v: int) -> int:
        p = self._pos.get(v)
        if p is None or not (self._vmask >> p) & 1:
            raise InputError(f"unknown vertex id {v!r}")
        return self._adj[p].bit_count()

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield edges as (u, v) with u < v, ordered lexicographically."""
        uid = self._uid
        for p in bits(self._vmask):
            for q in bits(self._adj[p] >> (p + 1) << (p + 1)):
                yield uid[p], uid[q]

    # -- set operations ------------------------------------------------------

    def induced_subgraph(self, vertices: Iterable[int]) -> "Graph":
        """Subgraph induced by the given vertices; IDs are preserved."""
        return self._derive(self._mask(vertices))

    def delete_vertices(self, vertices: Iterable[int]) -> "Graph":
        """Graph with the given vertices (and incident edges) removed."""
        return self._derive(self._vmask & ~self._mask(vertices))

    def neighborhood(self, vertices: Iterable[int]) -> frozenset[int]:
        """Open neighborhood: union of members' neighbors, minus the set."""
        m = self._mask(vertices)
        nb = 0
        adj = self._adj
        for p in bits(m):
            nb |= adj[p]
        return self._idset(nb & ~m)

    def is_independent(self, vertices: Iterable[int]) -> bool:
        """True iff no edge joins two of the given vertices."""
        m = self._mask(vertices)
        adj = self._adj
        for p in bits(m):
            if adj[p] & m:
                return False
        return True

    def components(self) -> list[frozenset[int]]:
        """Connected components, ordered by smallest member ID."""
        return [self._idset(c) for c in self._component_masks()]

    def _component_masks(self) -> list[int]:
        cached = self._memo.get("comps")
        if cached is None:
            cached = []
            adj = self._adj
            todo = self._vmask
            while todo:
                start = todo & -todo
                comp = start
                frontier = start
                while frontier:
                    grown = 0
                    for p in bits(frontier):
                        grown |= adj[p]
                    frontier = grown & todo & ~comp
                    comp |= frontier
                cached.append(comp)
                todo &= ~comp
            self._memo["comps"] = cached
        return cached

    def _co_component_masks(self) -> list[int]:
        """Components of the complement graph, as position masks."""
        cached = self._memo.get("cocomps")
        if cached is None:
            cached = []
            adj = self._adj
            live = self._vmask
            todo = live
            while todo:
                start = todo & -todo
                comp = start
                frontier = start
                while frontier:
                    grown = 0
                    for p in bits(frontier):
                        grown |= live & ~adj[p] & ~(1 << p)
                    frontier = grown & todo & ~comp
                    comp |= frontier
                cached.append(comp)
                todo &= ~comp
            self._memo["cocomps"] = cached
        return cached

    # -- value semantics -------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.vertices == other.vertices and set(self.edges()) == set(other.edges())

    __hash__ = None  # graphs are compared by value, not used as keys

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"
