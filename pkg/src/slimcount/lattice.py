"""Finite lattices given by an explicit order, and property checks on them."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import ConsistencyError

__all__ = [
    "FiniteLattice", "chain", "boolean_lattice", "pentagon", "diamond",
    "join_irreducibles", "is_semimodular", "is_slim", "is_distributive",
    "to_json", "to_dot",
]


@dataclass(frozen=True, eq=False)
class FiniteLattice:
    """A lattice on ids ``0..size-1``.

    ``below[x]`` is a bitmask of all ``y <= x``. Ids must form a linear
    extension of the order (so 0 is the bottom and ``size - 1`` the top).
    ``labels`` optionally carries, per id, the grid elements it came from.
    """

    size: int
    below: tuple[int, ...]
    covers: tuple[tuple[int, int], ...] = field(repr=False)
    join: tuple[tuple[int, ...], ...] = field(repr=False)
    meet: tuple[tuple[int, ...], ...] = field(repr=False)
    labels: tuple[tuple[tuple[int, int], ...], ...] | None = field(default=None, repr=False)

    @classmethod
    def from_order(cls, size: int, leq_pairs: Iterable[tuple[int, int]], labels=None) -> "FiniteLattice":
        """Build from pairs ``(x, y)`` meaning ``x <= y``; the relation is
        closed reflexively and transitively, then checked to be a lattice."""
        below = [1 << x for x in range(size)]
        for x, y in leq_pairs:
            below[y] |= 1 << x
        # transitive closure: ids need not be a linear extension here
        changed = True
        while changed:
            changed = False
            for y in range(size):
                acc = below[y]
                rest = acc & ~(1 << y)
                while rest:
                    low = rest & -rest
                    acc |= below[low.bit_length() - 1]
                    rest ^= low
                if acc != below[y]:
                    below[y] = acc
                    changed = True
        return cls.from_below(below, labels)

    @classmethod
    def from_below(cls, below: Sequence[int], labels=None) -> "FiniteLattice":
        """Build from down-set bitmasks (reflexive and transitive already)."""
        size = len(below)
        if size == 0:
            raise ConsistencyError("a lattice needs at least one element")
        for x in range(size):
            for y in range(size):
                if x != y and below[x] >> y & 1 and below[y] >> x & 1:
                    raise ConsistencyError(f"order is not antisymmetric at {x}, {y}")
        # relabel to a linear extension: fewer elements below comes first
        order = sorted(range(size), key=lambda x: (bin(below[x]).count("1"), x))
        if order != list(range(size)):
            pos = {old: new for new, old in enumerate(order)}
            below = [_remap(below[old], pos) for old in order]
            if labels is not None:
                labels = [labels[old] for old in order]
        below = tuple(below)
        above = [0] * size
        for y in range(size):
            m = below[y]
            while m:
                low = m & -m
                above[low.bit_length() - 1] |= 1 << y
                m ^= low
        join = [[0] * size for _ in range(size)]
        meet = [[0] * size for _ in range(size)]
        for x in range(size):
            for y in range(x, size):
                ub = above[x] & above[y]
                lb = below[x] & below[y]
                if not ub or not lb:
                    raise ConsistencyError(f"{x} and {y} lack a common bound")
                j = (ub & -ub).bit_length() - 1  # least id among upper bounds
                if ub & ~above[j]:
                    raise ConsistencyError(f"{x} and {y} have no least upper bound")
                mt = lb.bit_length() - 1  # greatest id among lower bounds
                if lb & ~below[mt]:
                    raise ConsistencyError(f"{x} and {y} have no greatest lower bound")
                join[x][y] = join[y][x] = j
                meet[x][y] = meet[y][x] = mt
        covers = []
        for y in range(size):
            strict = below[y] & ~(1 << y)
            m = strict
            while m:
                low = m & -m
                x = low.bit_length() - 1
                # x is covered by y iff nothing strictly between
                if not any(strict >> z & 1 and below[z] >> x & 1 for z in range(x + 1, y)):
                    covers.append((x, y))
                m ^= low
        covers.sort()
        if labels is not None:
            labels = tuple(tuple(sorted(map(tuple, lab))) for lab in labels)
        return cls(size, below, tuple(covers), tuple(map(tuple, join)), tuple(map(tuple, meet)), labels)

    @property
    def bottom(self) -> int:
        return 0

    @property
    def top(self) -> int:
        return self.size - 1

    def leq(self, x: int, y: int) -> bool:
        return bool(self.below[y] >> x & 1)

    def lower_covers(self, y: int) -> list[int]:
        return [a for a, b in self.covers if b == y]

    def upper_covers(self, x: int) -> list[int]:
        return [b for a, b in self.covers if a == x]

    def heights(self) -> list[int]:
        """Length of the longest chain from the bottom to each element."""
        height = [0] * self.size
        for y in range(self.size):
            lows = [a for a, b in self.covers if b == y]
            height[y] = max((height[a] + 1 for a in lows), default=0)
        return height

    def length(self) -> int:
        return self.heights()[self.top]

    def __len__(self) -> int:
        return self.size


def _remap(mask: int, pos: dict[int, int]) -> int:
    out = 0
    while mask:
        low = mask & -mask
        out |= 1 << pos[low.bit_length() - 1]
        mask ^= low
    return out


def chain(length: int) -> FiniteLattice:
    return FiniteLattice.from_order(length + 1, [(x, x + 1) for x in range(length)])


def boolean_lattice(rank: int) -> FiniteLattice:
    size = 1 << rank
    return FiniteLattice.from_order(size, [(x, y) for x in range(size) for y in range(size) if x & y == x])


def pentagon() -> FiniteLattice:
    # 0 < a < b < 1 and 0 < c < 1, with c incomparable to a and b
    return FiniteLattice.from_order(5, [(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)])


def diamond() -> FiniteLattice:
    return FiniteLattice.from_order(5, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)])


def join_irreducibles(L: FiniteLattice) -> set[int]:
    """Elements with exactly one lower cover (the bottom has none)."""
    count = [0] * L.size
    for _, b in L.covers:
        count[b] += 1
    return {x for x in range(L.size) if count[x] == 1}


def is_semimodular(L: FiniteLattice) -> bool:
    """x covered-or-equal by y implies x v z covered-or-equal by y v z."""
    cover_set = set(L.covers)
    for x, y in L.covers:
        jx, jy = L.join[x], L.join[y]
        for z in range(L.size):
            a, b = jx[z], jy[z]
            if a != b and (a, b) not in cover_set:
                return False
    return True


def is_slim(L: FiniteLattice) -> bool:
    """No three pairwise incomparable join-irreducibles."""
    jirr = sorted(join_irreducibles(L))
    for ai, a in enumerate(jirr):
        for bi in range(ai + 1, len(jirr)):
            b = jirr[bi]
            if L.leq(a, b) or L.leq(b, a):
                continue
            for c in jirr[bi + 1:]:
                if not (L.leq(a, c) or L.leq(c, a) or L.leq(b, c) or L.leq(c, b)):
                    return False
    return True


def is_distributive(L: FiniteLattice) -> bool:
    """Cubic scan of x ^ (y v z) == (x ^ y) v (x ^ z)."""
    J, M = L.join, L.meet
    r = range(L.size)
    for x in r:
        mx = M[x]
        for y in r:
            jy = J[y]
            mxy = mx[y]
            for z in r:
                if mx[jy[z]] != J[mxy][mx[z]]:
                    return False
    return True


def to_json(L: FiniteLattice) -> str:
    """``{size, elements: [{id, grid_block}], covers}`` with sorted keys."""
    elements = []
    for x in range(L.size):
        block = [] if L.labels is None else [list(p) for p in L.labels[x]]
        elements.append({"id": x, "grid_block": block})
    doc = {"size": L.size, "elements": elements, "covers": [list(c) for c in L.covers]}
    return json.dumps(doc, sort_keys=True)


def to_dot(L: FiniteLattice, name: str = "lattice") -> str:
    """Hasse diagram as a DOT digraph; edges point up along covers and nodes
    of equal height share a rank."""
    heights = L.heights()
    lines = [f"digraph {name} {{", "  rankdir=BT;", "  node [shape=circle];"]
    for x in range(L.size):
        if L.labels is not None:
            tag = " ".join(f"({r},{c})" for r, c in L.labels[x])
            lines.append(f'  {x} [tooltip="{tag}"];')
        else:
            lines.append(f"  {x};")
    for level in sorted(set(heights)):
        members = " ".join(str(x) for x in range(L.size) if heights[x] == level)
        lines.append(f"  {{ rank=same; {members}; }}")
    for a, b in L.covers:
        lines.append(f"  {a} -> {b};")
    lines.append("}")
    return "\n".join(lines) + "\n"
