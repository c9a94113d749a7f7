"""Maximum independent set by dynamic programming over the decomposition tree."""

from __future__ import annotations

from dataclasses import dataclass

from .decomposition import MDNode, md_tree
from .errors import InternalError
from .graph import Graph, bits


@dataclass(frozen=True)
class AlphaResult:
    size: int
    witness: frozenset[int]


def alpha(g: Graph) -> AlphaResult:
    """Size and witness of a maximum independent set.

    Parallel nodes sum their children, series nodes keep the best child,
    and a prime node with r children tries every child subset that is
    independent in the quotient, so the cost is exponential only in the
    largest prime fanout of the decomposition.
    """
    cached = g._memo.get("alpha")
    if cached is not None:
        return cached
    if g.n == 0:
        result = AlphaResult(0, frozenset())
    else:
        result = _alpha_node(g, md_tree(g))
    g._memo["alpha"] = result
    return result


def _alpha_node(g: Graph, node: MDNode) -> AlphaResult:
    if node.kind == "leaf":
        return AlphaResult(1, node.span)
    parts = [_alpha_node(g, c) for c in node.children]
    if node.kind == "parallel":
        members: set[int] = set()
        for part in parts:
            members.update(part.witness)
        return AlphaResult(sum(p.size for p in parts), frozenset(members))
    if node.kind == "series":
        best = parts[0]
        for part in parts[1:]:
            if part.size > best.size:
                best = part
        return best
    return _alpha_prime(g, node, parts)


def _alpha_prime(g: Graph, node: MDNode, parts: list[AlphaResult]) -> AlphaResult:
    r = len(node.children)
    spans = [g._mask(c.span) for c in node.children]
    reps = [(m & -m).bit_length() - 1 for m in spans]
    # quotient adjacency over child indices; a module sees all or nothing
    qadj = [0] * r
    for i in range(r):
        row = g._adj[reps[i]]
        for j in range(r):
            if i != j and row & spans[j]:
                qadj[i] |= 1 << j
    best_size = -1
    best_mask = 0
    for mask in sorted(range(1, 1 << r), key=lambda m: (m.bit_count(), m)):
        ok = True
        total = 0
        for i in bits(mask):
            if qadj[i] & mask:
                ok = False
                break
            total += parts[i].size
        if ok and total > best_size:
            best_size = total
            best_mask = mask
    if best_size < 1:
        raise InternalError("prime quotient search found no independent set")
    members: set[int] = set()
    for i in bits(best_mask):
        members.update(parts[i].witness)
    return AlphaResult(best_size, frozenset(members))
