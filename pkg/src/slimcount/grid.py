"""Join-congruences of grids generated by 4-cells, and their quotient lattices.

A grid of type ``m x n`` is the product of the chains ``b_0 < ... < b_m`` and
``c_0 < ... < c_n``; the element ``(b_r, c_c)`` is written ``(r, c)``. The
4-cell ``(i, j)`` has top ``(i, j)`` and bottom ``(i - 1, j - 1)``.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from typing import NamedTuple

from . import kernels
from .errors import ConsistencyError, DimensionError
from .lattice import FiniteLattice
from .perm import PartialPermutation, Permutation, inversions, partial_inversions

__all__ = [
    "GridElement", "GridQuotient", "build_quotient", "quotient_size_formula",
    "build_lattice", "build_lattice_with_quotient", "source_cells",
    "check_rules", "check_cover_preserving",
]

DEBUG = os.environ.get("SLIMCOUNT_DEBUG", "") not in ("", "0")


class GridElement(NamedTuple):
    row: int
    col: int


@dataclass(frozen=True, eq=False)
class GridQuotient:
    """Partition of the ``(m+1) x (n+1)`` grid into congruence blocks."""

    m: int
    n: int
    source: PartialPermutation
    labels: tuple[int, ...]  # row-major, index r * (n + 1) + c
    block_count: int

    def block_of(self, r: int, c: int) -> int:
        if not (0 <= r <= self.m and 0 <= c <= self.n):
            raise DimensionError(f"({r}, {c}) is outside the {self.m}x{self.n} grid")
        return self.labels[r * (self.n + 1) + c]

    def same_block(self, x: tuple[int, int], y: tuple[int, int]) -> bool:
        return self.block_of(*x) == self.block_of(*y)

    def blocks(self) -> list[list[GridElement]]:
        """Members of each block, indexed by block id, in row-major order."""
        out: list[list[GridElement]] = [[] for _ in range(self.block_count)]
        w = self.n + 1
        for idx, lab in enumerate(self.labels):
            out[lab].append(GridElement(idx // w, idx % w))
        return out


def _as_partial(m: int, n: int, tau) -> PartialPermutation:
    if isinstance(tau, PartialPermutation):
        if (tau.rows, tau.cols) != (m, n):
            for i, j in tau:
                if not (1 <= i <= m and 1 <= j <= n):
                    raise DimensionError(f"pair ({i}, {j}) outside the {m}x{n} grid")
            return PartialPermutation._trusted(m, n, tau.pairs)
        return tau
    return PartialPermutation(m, n, tuple(tau))


def build_quotient(m: int, n: int, tau) -> GridQuotient:
    """Blocks of the join-congruence generated by collapsing the top of every
    4-cell ``(i, j)`` in ``tau``.

    Computed as the equivalence closure of the adjacent merges
    ``(x-1, t) ~ (x, t)`` for ``x = i_p, t >= j_p`` and
    ``(t, y-1) ~ (t, y)`` for ``y = j_p, t >= i_p``.
    """
    if m < 1 or n < 1:
        raise DimensionError(f"grid must be at least 1x1, got {m}x{n}")
    tau = _as_partial(m, n, tau)
    rows = [i for i, _ in tau]
    cols = [j for _, j in tau]
    labels, count = kernels.grid_blocks(m, n, rows, cols)
    return GridQuotient(m, n, tau, tuple(labels), count)


def quotient_size_formula(m: int, n: int, tau) -> int:
    """(m+1)(n+1) + inv(tau) - k(m+n+2) + sum of (i_s + j_s)."""
    if m < 1 or n < 1:
        raise DimensionError(f"grid must be at least 1x1, got {m}x{n}")
    tau = _as_partial(m, n, tau)
    k = len(tau)
    return (m + 1) * (n + 1) + partial_inversions(tau) - k * (m + n + 2) + sum(i + j for i, j in tau)


def source_cells(q: GridQuotient) -> PartialPermutation:
    """Cells whose top three elements share a block that misses the bottom."""
    pairs = []
    for i in range(1, q.m + 1):
        for j in range(1, q.n + 1):
            top = q.block_of(i, j)
            if (q.block_of(i - 1, j) == top and q.block_of(i, j - 1) == top
                    and q.block_of(i - 1, j - 1) != top):
                pairs.append((i, j))
    return PartialPermutation._trusted(q.m, q.n, tuple(pairs))


def _block_tops(q: GridQuotient) -> list[tuple[int, int]]:
    # a join-congruence block is closed under joins, so it has a largest element
    tops = [(-1, -1)] * q.block_count
    w = q.n + 1
    for idx, lab in enumerate(q.labels):
        r, c = divmod(idx, w)
        tr, tc = tops[lab]
        tops[lab] = (max(tr, r), max(tc, c))
    for lab, (r, c) in enumerate(tops):
        if q.block_of(r, c) != lab:
            raise ConsistencyError(f"block {lab} is not closed under joins")
    return tops


def _quotient_lattice(q: GridQuotient, check: bool) -> FiniteLattice:
    tops = _block_tops(q)
    B = q.block_count
    below = [0] * B
    for y, (yr, yc) in enumerate(tops):
        mask = 0
        for x, (xr, xc) in enumerate(tops):
            if q.block_of(max(xr, yr), max(xc, yc)) == y:
                mask |= 1 << x
        below[y] = mask
    if check:
        # the order must not depend on which representatives are used
        members = q.blocks()
        for y in range(B):
            for x in range(B):
                expect = bool(below[y] >> x & 1)
                for xr, xc in members[x]:
                    for yr, yc in members[y]:
                        if (q.block_of(max(xr, yr), max(xc, yc)) == y) != expect:
                            raise ConsistencyError(f"quotient order ill-defined between blocks {x} and {y}")
    labels = [tuple(block) for block in q.blocks()]
    return FiniteLattice.from_below(below, labels)


def build_lattice_with_quotient(pi: Permutation, check: bool | None = None) -> tuple[FiniteLattice, GridQuotient | None]:
    if check is None:
        check = DEBUG
    h = pi.degree
    if h == 0:
        return FiniteLattice.from_below([1], [((0, 0),)]), None
    q = build_quotient(h, h, pi.graph())
    L = _quotient_lattice(q, check)
    if check and L.size != h + 1 + inversions(pi):
        raise ConsistencyError(f"size {L.size} of the lattice of {pi} contradicts its inversion count")
    return L, q


def build_lattice(pi: Permutation, check: bool | None = None) -> FiniteLattice:
    """Slim, semimodular lattice encoded by ``pi``: the h x h grid modulo the
    join-congruence generated by the cells ``(s, pi(s))``.

    Element ids follow a linear extension; each id's ``labels`` entry lists
    the grid elements of its block.
    """
    return build_lattice_with_quotient(pi, check)[0]


def check_rules(q: GridQuotient) -> None:
    """Verify the three membership rules of the generated join-congruence by
    brute force over all pairs; raises :class:`ConsistencyError` on failure."""
    m, n = q.m, q.n
    row_of = {i: j for i, j in q.source}
    col_of = {j: i for i, j in q.source}
    # rule on vertical runs (b_r, c_t) ~ (b_s, c_t)
    for t in range(n + 1):
        for r in range(m + 1):
            for s in range(r + 1, m + 1):
                want = all(x in row_of and row_of[x] <= t for x in range(r + 1, s + 1))
                if q.same_block((r, t), (s, t)) != want:
                    raise ConsistencyError(f"vertical rule fails for ({r},{t}), ({s},{t})")
    # rule on horizontal runs (b_t, c_r) ~ (b_t, c_s)
    for t in range(m + 1):
        for r in range(n + 1):
            for s in range(r + 1, n + 1):
                want = all(y in col_of and col_of[y] <= t for y in range(r + 1, s + 1))
                if q.same_block((t, r), (t, s)) != want:
                    raise ConsistencyError(f"horizontal rule fails for ({t},{r}), ({t},{s})")
    # two elements are related iff both lie in the block of their join
    cells = [(r, c) for r in range(m + 1) for c in range(n + 1)]
    for a in cells:
        for b in cells:
            j = q.block_of(max(a[0], b[0]), max(a[1], b[1]))
            want = q.block_of(*a) == j and q.block_of(*b) == j
            if q.same_block(a, b) != want:
                raise ConsistencyError(f"join rule fails for {a}, {b}")


def check_cover_preserving(q: GridQuotient, L: FiniteLattice | None = None) -> None:
    """Every grid cover maps to an equality or a cover of the quotient."""
    if L is None:
        L = _quotient_lattice(q, False)
    # FiniteLattice ids may be a relabeling of block ids; map through labels
    id_of = {}
    for x, members in enumerate(L.labels):
        for r, c in members:
            id_of[(r, c)] = x
    cover_set = set(L.covers)
    for r in range(q.m + 1):
        for c in range(q.n + 1):
            for nr, nc in ((r + 1, c), (r, c + 1)):
                if nr > q.m or nc > q.n:
                    continue
                a, b = id_of[(r, c)], id_of[(nr, nc)]
                if a != b and (a, b) not in cover_set:
                    raise ConsistencyError(f"cover ({r},{c}) < ({nr},{nc}) is not preserved")
