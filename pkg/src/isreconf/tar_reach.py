"""Reachability between independent sets under TAR and TJ.

Connected graphs are simplified one module at a time: either both sides
can vacate a module with internal edges (then the module shrinks to a
maximum independent set), or neither can (then the module's entire
neighborhood is unusable and is dropped).  Disconnected graphs normalize
both sides to their largest reachable sets and recurse per component.
Every yes answer carries a replayable witness sequence.
"""

from __future__ import annotations

from . import stats
from .decomposition import is_module, nd_partition, top_partition
from .errors import InputError, InternalError
from .graph import Graph, bits, reserve_stack
from .mis import alpha
from .moveseq import EMPTY, MoveRope, adds, removes
from .rules import Move, ReconfSequence, Rule, tj_threshold
from .tar_engine import lambda_single


class ReachAnswer:
    """Decision plus, for yes answers, a verifying move sequence."""

    __slots__ = ("reachable", "_rule", "_start", "_rope", "_seq")

    def __init__(self, reachable: bool, rule: Rule, start: frozenset[int], rope: MoveRope | None):
        self.reachable = reachable
        self._rule = rule
        self._start = start
        self._rope = rope
        self._seq = None

    @property
    def certificate(self) -> ReconfSequence | None:
        if not self.reachable:
            return None
        if self._seq is None:
            self._seq = ReconfSequence(self._rule, self._start, self._rope.flatten())
        return self._seq

    def __repr__(self) -> str:
        tail = f", moves={len(self._rope)}" if self.reachable else ""
        return f"ReachAnswer({'yes' if self.reachable else 'no'}{tail})"


def _trivial_rope(s: frozenset[int], t: frozenset[int]) -> MoveRope:
    # with no effective floor, tear down one side and build the other
    return MoveRope.cat(removes(s - t), adds(t - s))


def _empty_module_rope(g: Graph, seed: frozenset[int], module: frozenset[int],
                       k: int) -> tuple[frozenset[int], MoveRope] | None:
    if not seed & module:
        return seed, EMPTY
    h = g.delete_vertices(g.neighborhood(module))
    best = lambda_single(h, seed, max(k, 0))
    outside = best.reached - module
    if len(outside) < k:
        return None
    rope = MoveRope.cat(best._rope, removes(best.reached & module))
    return outside, rope


def empty_module(g: Graph, seed, module, k: int) -> tuple[frozenset[int], ReconfSequence] | None:
    """Vacate a module if possible: a reachable set avoiding it, plus moves.

    Works inside the subgraph that keeps only the module and its
    non-neighbors; any set reachable there while avoiding the module is
    reachable in the full graph, and conversely the largest reachable set
    in that subgraph witnesses impossibility.
    """
    seed = frozenset(seed)
    module = frozenset(module)
    if not is_module(g, module):
        raise InputError("given set is not a module")
    if not g.is_independent(seed):
        raise InputError("seed set is not independent")
    if len(seed) < k:
        raise InputError("seed is below the floor")
    out = _empty_module_rope(g, seed, module, k)
    if out is None:
        return None
    final, rope = out
    return final, ReconfSequence(Rule.tar(max(k, 0)), seed, rope.flatten())


def reduce_empty_module(g: Graph, module, s, t) -> Graph:
    """Shrink a module both sides avoid down to a maximum independent set."""
    module = frozenset(module)
    s = frozenset(s)
    t = frozenset(t)
    if not is_module(g, module):
        raise InputError("given set is not a module")
    if s & module or t & module:
        raise InputError("both sets must avoid the module")
    witness = alpha(g.induced_subgraph(module)).witness
    return g.delete_vertices(module - witness)


# -- twin-class reachability ----------------------------------------------------


def _aux_reach_rope(g: Graph, k: int, s: frozenset[int], t: frozenset[int]) -> MoveRope | None:
    """Reachability over twin-class-saturated sets; all classes edgeless."""
    classes = [cl.members for cl in nd_partition(g)]
    nc = len(classes)
    masks = [g._mask(c) for c in classes]
    sizes = [len(c) for c in classes]
    qadj = [0] * nc
    for i in range(nc):
        row = g._adj[(masks[i] & -masks[i]).bit_length() - 1]
        for j in range(nc):
            if i != j and row & masks[j]:
                qadj[i] |= 1 << j

    def saturate(side: frozenset[int]) -> tuple[int, int, list[Move]]:
        state = 0
        size = 0
        moves: list[Move] = []
        for i in range(nc):
            if classes[i] & side:
                state |= 1 << i
                size += sizes[i]
                moves.extend(Move.add(v) for v in sorted(classes[i] - side))
        return state, size, moves

    s_state, s_size, s_sat = saturate(s)
    t_state, _, t_sat = saturate(t)
    parent: dict[int, tuple[int, int] | None] = {s_state: None}
    state_size = {s_state: s_size}
    queue = [s_state]
    head = 0
    while head < len(queue) and t_state not in parent:
        state = queue[head]
        head += 1
        size = state_size[state]
        for i in range(nc):
            bit = 1 << i
            if state & bit:
                nsize = size - sizes[i]
                if nsize < k:
                    continue
                nxt = state ^ bit
            else:
                if qadj[i] & state:
                    continue
                nxt = state | bit
                nsize = size + sizes[i]
            if nxt not in parent:
                parent[nxt] = (state, i)
                state_size[nxt] = nsize
                queue.append(nxt)
    if t_state not in parent:
        return None
    hops = []
    at = t_state
    while parent[at] is not None:
        prev, i = parent[at]
        hops.append((at, i))
        at = prev
    path: list[Move] = []
    for state, i in reversed(hops):
        if state & (1 << i):
            path.extend(Move.add(v) for v in sorted(classes[i]))
        else:
            path.extend(Move.remove(v) for v in sorted(classes[i]))
    return MoveRope.cat(MoveRope.leaf(s_sat + path), MoveRope.rev(MoveRope.leaf(t_sat)))


def _reach_nd(g: Graph, k: int, s: frozenset[int], t: frozenset[int]) -> MoveRope | None:
    if k <= 0:
        return _trivial_rope(s, t)
    if s == t:
        return EMPTY
    target = None
    for cl in nd_partition(g):
        if cl.kind == "clique" and len(cl.members) >= 2:
            target = cl.members
            break
    if target is None:
        return _aux_reach_rope(g, k, s, t)

    es = _empty_module_rope(g, s, target, k)
    et = _empty_module_rope(g, t, target, k)
    if (es is None) != (et is None):
        return None
    if es is not None:
        s2, rs = es
        t2, rt = et
        keep = min(target)
        g2 = g.delete_vertices(target - {keep})
        stats.inc("nodes_deleted", len(target) - 1)
        sub = _reach_nd(g2, k, s2, t2)
        if sub is None:
            return None
        return MoveRope.cat(MoveRope.cat(rs, sub), MoveRope.rev(rt))
    # neither side can vacate a clique: the single token inside is pinned
    if s & target != t & target:
        return None
    closed = target | g.neighborhood(target)
    g2 = g.delete_vertices(closed)
    stats.inc("nodes_deleted", len(closed))
    return _reach_nd(g2, k - 1, s - target, t - target)


def reach_nd(g: Graph, k: int, s, t) -> ReachAnswer:
    """TAR(k) reachability, exponential only in the twin-class count."""
    s, t = _validated_pair(g, k, s, t)
    rope = _reach_nd(g, k, s, t)
    return ReachAnswer(rope is not None, Rule.tar(k), s, rope)


# -- the general TAR decision ---------------------------------------------------


def _validated_pair(g: Graph, k: int, s, t) -> tuple[frozenset[int], frozenset[int]]:
    s = frozenset(s)
    t = frozenset(t)
    if k < 0:
        raise InputError("the floor k must be non-negative")
    if not g.is_independent(s) or not g.is_independent(t):
        raise InputError("both sets must be independent")
    if min(len(s), len(t)) < k:
        raise InputError("both sets must have at least k tokens")
    return s, t


def _reach_tar(g: Graph, k: int, s: frozenset[int], t: frozenset[int]) -> MoveRope | None:
    if k <= 0:
        return _trivial_rope(s, t)
    if s == t:
        return EMPTY

    comp_masks = g._component_masks()
    if len(comp_masks) == 1:
        parts = top_partition(g)
        part_masks = [g._mask(p) for p in parts]
        pick = None
        for i, pm in enumerate(part_masks):
            for p in bits(pm):
                if g._adj[p] & pm:
                    pick = i
                    break
            if pick is not None:
                break
        if pick is None:
            return _reach_nd(g, k, s, t)
        module = parts[pick]
        es = _empty_module_rope(g, s, module, k)
        et = _empty_module_rope(g, t, module, k)
        if (es is None) != (et is None):
            return None
        if es is not None:
            s2, rs = es
            t2, rt = et
            witness = alpha(g._derive(part_masks[pick])).witness
            g2 = g.delete_vertices(module - witness)
            stats.inc("nodes_deleted", len(module) - len(witness))
            if g2.n >= g.n:
                raise InternalError("module reduction failed to shrink the graph")
            sub = _reach_tar(g2, k, s2, t2)
            if sub is None:
                return None
            return MoveRope.cat(MoveRope.cat(rs, sub), MoveRope.rev(rt))
        fence = g.neighborhood(module)
        g2 = g.delete_vertices(fence)
        stats.inc("nodes_deleted", len(fence))
        if g2.n >= g.n:
            raise InternalError("connected graph had a module with no neighborhood")
        return _reach_tar(g2, k, s, t)

    # disconnected: normalize both sides to largest reachable sets, then
    # token counts per component are conserved and components separate
    ls = lambda_single(g, s, k)
    lt = lambda_single(g, t, k)
    if ls.size != lt.size:
        return None
    s2 = g._mask(ls.reached)
    t2 = g._mask(lt.reached)
    ropes = []
    for cm in comp_masks:
        sc = (s2 & cm).bit_count()
        if sc != (t2 & cm).bit_count():
            return None
        sub = _reach_tar(g._derive(cm), k - (ls.size - sc),
                         g._idset(s2 & cm), g._idset(t2 & cm))
        if sub is None:
            return None
        ropes.append(sub)
    rope = ls._rope
    for sub in ropes:
        rope = MoveRope.cat(rope, sub)
    return MoveRope.cat(rope, MoveRope.rev(lt._rope))


def reach_tar(g: Graph, k: int, s, t) -> ReachAnswer:
    """Decide TAR(k) reachability; yes answers carry a witness sequence."""
    reserve_stack(g.n)
    s, t = _validated_pair(g, k, s, t)
    rope = _reach_tar(g, k, s, t)
    return ReachAnswer(rope is not None, Rule.tar(k), s, rope)


def reach_tj(g: Graph, s, t) -> ReachAnswer:
    """Decide TJ reachability via the TAR floor |s| - 1.

    The certificate is returned under that TAR rule; equal decisions are
    guaranteed, equal step shapes are not.
    """
    reserve_stack(g.n)
    s = frozenset(s)
    t = frozenset(t)
    if not g.is_independent(s) or not g.is_independent(t):
        raise InputError("both sets must be independent")
    k = tj_threshold(s)
    if len(s) != len(t):
        return ReachAnswer(False, Rule.tar(k), s, None)
    if s == t:
        return ReachAnswer(True, Rule.tar(k), s, EMPTY)
    rope = _reach_tar(g, k, s, t)
    return ReachAnswer(rope is not None, Rule.tar(k), s, rope)
