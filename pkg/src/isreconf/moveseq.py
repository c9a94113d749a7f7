"""Lazy move-sequence ropes.

Witness sequences are assembled from many per-module fragments, spliced,
and sometimes replayed backwards.  Eager concatenation would be quadratic
in the worst case, so builders work on small persistent trees with O(1)
concatenation and reversal, and only flatten once a result is inspected.
"""

from __future__ import annotations

from .rules import Move

_LEAF = 0
_CAT = 1
_REV = 2


class MoveRope:
    __slots__ = ("_kind", "_a", "_b", "length")

    def __init__(self, kind: int, a, b, length: int):
        self._kind = kind
        self._a = a
        self._b = b
        self.length = length

    @staticmethod
    def leaf(moves) -> "MoveRope":
        moves = tuple(moves)
        if not moves:
            return EMPTY
        return MoveRope(_LEAF, moves, None, len(moves))

    @staticmethod
    def cat(a: "MoveRope", b: "MoveRope") -> "MoveRope":
        if a.length == 0:
            return b
        if b.length == 0:
            return a
        return MoveRope(_CAT, a, b, a.length + b.length)

    @staticmethod
    def rev(a: "MoveRope") -> "MoveRope":
        if a.length == 0:
            return EMPTY
        return MoveRope(_REV, a, None, a.length)

    def __len__(self) -> int:
        return self.length

    def flatten(self) -> tuple[Move, ...]:
        out: list[Move] = []
        stack: list[tuple[MoveRope, bool]] = [(self, False)]
        while stack:
            node, flipped = stack.pop()
            if node.length == 0:
                continue
            if node._kind == _LEAF:
                if flipped:
                    out.extend(m.reversed() for m in reversed(node._a))
                else:
                    out.extend(node._a)
            elif node._kind == _CAT:
                if flipped:
                    stack.append((node._a, True))
                    stack.append((node._b, True))
                else:
                    stack.append((node._b, False))
                    stack.append((node._a, False))
            else:
                stack.append((node._a, not flipped))
        return tuple(out)


EMPTY = MoveRope(_LEAF, (), None, 0)


def adds(vertices) -> MoveRope:
    return MoveRope.leaf(Move.add(v) for v in sorted(vertices))


def removes(vertices) -> MoveRope:
    return MoveRope.leaf(Move.remove(v) for v in sorted(vertices))
