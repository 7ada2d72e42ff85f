"""Brute-force ground truth for the count tables and the lattice builder.

Everything here works from definitions: permutations are enumerated
outright and classified by direct scans, so that agreement with the
recurrences in :mod:`slimcount.counting` is evidence rather than tautology.
"""
from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import permutations
from typing import Iterator

from .errors import ResourceGuardError
from .lattice import FiniteLattice
from .perm import BlockForm, Permutation, block_canonical

__all__ = [
    "Limits", "LIMITS", "CensusRow", "BruteCensus", "enumerate_permutations",
    "permutations_with_inversions", "brute_census", "brute_count_ssl",
    "brute_count_ssd", "lattices_isomorphic", "naive_inversions",
    "naive_contains_321", "naive_is_irreducible", "naive_is_involution",
    "block_by_definition",
]


@dataclass
class Limits:
    """Resource guards; raise them deliberately for extended runs."""

    max_degree: int = 9
    max_size: int = 12
    max_lattice: int = 14


LIMITS = Limits()


def _guard(value: int, limit: int, what: str) -> None:
    if value > limit:
        raise ResourceGuardError(f"{what} {value} exceeds the configured limit {limit}")


def enumerate_permutations(h: int, limit: int | None = None) -> Iterator[Permutation]:
    """All of S_h in lexicographic order of image tuples."""
    if h < 0:
        raise ValueError("degree must be nonnegative")
    _guard(h, LIMITS.max_degree if limit is None else limit, "degree")
    for img in permutations(range(1, h + 1)):
        yield Permutation._trusted(img)


def permutations_with_inversions(h: int, k: int) -> Iterator[Permutation]:
    """Permutations of degree h with exactly k inversions, via Lehmer codes.

    Code entry ``c_s`` (0 <= c_s <= h - s) counts later positions holding a
    smaller value, so the codes summing to k are exactly the permutations
    with k inversions.
    """
    if k < 0 or k > h * (h - 1) // 2:
        return
    code = [0] * h

    def rec(pos: int, left: int):
        if pos == h:
            pool = list(range(1, h + 1))
            yield Permutation._trusted(tuple(pool.pop(c) for c in code))
            return
        cap = h - 1 - pos
        rest = (h - 1 - pos) * (h - 2 - pos) // 2
        for c in range(max(0, left - rest), min(cap, left) + 1):
            code[pos] = c
            yield from rec(pos + 1, left - c)

    yield from rec(0, k)


def naive_inversions(img) -> int:
    h = len(img)
    return sum(1 for a in range(h) for b in range(a + 1, h) if img[a] > img[b])


def naive_contains_321(img) -> bool:
    h = len(img)
    return any(img[a] > img[b] > img[c]
               for a in range(h) for b in range(a + 1, h) for c in range(b + 1, h))


def naive_is_irreducible(img) -> bool:
    """No proper nonempty prefix {1..u} is mapped into itself."""
    h = len(img)
    return h >= 1 and not any(set(img[:u]) == set(range(1, u + 1)) for u in range(1, h))


def naive_is_involution(img) -> bool:
    return all(img[img[s] - 1] == s + 1 for s in range(len(img)))


def block_by_definition(pi: Permutation) -> frozenset[tuple[int, ...]]:
    """The block of ``pi`` as an explicit set of image tuples, following the
    head/body recursion literally (no canonical forms involved)."""
    img = pi.image
    if not img:
        return frozenset({()})
    u = next(u for u in range(1, len(img) + 1) if set(img[:u]) == set(range(1, u + 1)))
    head = img[:u]
    head_inv = [0] * u
    for s, x in enumerate(head, 1):
        head_inv[x - 1] = s
    heads = {head, tuple(head_inv)}
    bodies = block_by_definition(Permutation._trusted(tuple(x - u for x in img[u:])))
    return frozenset(hd + tuple(x + u for x in bd) for hd in heads for bd in bodies)


@dataclass
class CensusRow:
    p: int = 0
    i: int = 0
    t: int = 0
    it: int = 0
    b: int = 0


@dataclass
class BruteCensus:
    """Per-inversion-count classification of all of S_h."""

    h: int
    per_k: dict[int, CensusRow] = field(default_factory=dict)
    block_reps: dict[BlockForm, int] = field(default_factory=dict)

    def row(self, kind: str) -> list[int]:
        """Counts for ``k = 0..h(h-1)/2`` of one function (``p``, ``i``, ...)."""
        top = self.h * (self.h - 1) // 2
        return [getattr(self.per_k.get(k, CensusRow()), kind) for k in range(top + 1)]

    def merge(self, other: "BruteCensus") -> "BruteCensus":
        """Combine two partial censuses of the same degree."""
        if other.h != self.h:
            raise ValueError("cannot merge censuses of different degree")
        out = BruteCensus(self.h)
        for src in (self, other):
            for k, r in src.per_k.items():
                acc = out.per_k.setdefault(k, CensusRow())
                acc.p += r.p
                acc.i += r.i
                acc.t += r.t
                acc.it += r.it
            out.block_reps.update(src.block_reps)
        for r in out.per_k.values():
            r.b = 0
        for k in out.block_reps.values():
            out.per_k.setdefault(k, CensusRow()).b += 1
        return out


def _census_part(h: int, first: int | None) -> BruteCensus:
    census = BruteCensus(h)
    for pi in enumerate_permutations(h, limit=max(h, LIMITS.max_degree)):
        img = pi.image
        if first is not None and img[0] != first:
            continue
        k = naive_inversions(img)
        row = census.per_k.setdefault(k, CensusRow())
        row.p += 1
        irr = naive_is_irreducible(img)
        inv = naive_is_involution(img)
        row.i += irr
        row.t += inv
        row.it += irr and inv
        census.block_reps[block_canonical(pi)] = k
    for k in census.block_reps.values():
        census.per_k.setdefault(k, CensusRow()).b += 1
    return census


def brute_census(h: int, workers: int = 1) -> BruteCensus:
    """Classify every permutation of degree h; ``workers > 1`` splits the
    stream by first image value across processes."""
    if h < 0:
        raise ValueError("degree must be nonnegative")
    _guard(h, LIMITS.max_degree, "degree")
    if workers <= 1 or h < 2:
        return _census_part(h, None)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(_census_part, [h] * h, range(1, h + 1)))
    total = BruteCensus(h)
    for part in parts:
        total = total.merge(part)
    return total


def _lattice_perms(n: int):
    for h in range(n):
        yield from permutations_with_inversions(h, n - h - 1)


def _check_n(n: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"size must be a positive integer, got {n!r}")
    _guard(n, LIMITS.max_size, "size")


def brute_count_ssl(n: int) -> int:
    """Distinct blocks among permutations whose lattices have n elements."""
    _check_n(n)
    return len({block_canonical(pi) for pi in _lattice_perms(n)})


def brute_count_ssd(n: int) -> int:
    """Permutations whose lattices have n elements (no block merging)."""
    _check_n(n)
    return sum(1 for _ in _lattice_perms(n))


def _profile(L: FiniteLattice) -> list[tuple[int, int, int, int]]:
    heights = L.heights()
    down = Counter(a for a, _ in L.covers)
    up = Counter(b for _, b in L.covers)
    return [(heights[x], up[x], down[x], bin(L.below[x]).count("1")) for x in range(L.size)]


def lattices_isomorphic(L1: FiniteLattice, L2: FiniteLattice, limit: int | None = None) -> bool:
    """Order-isomorphism by backtracking, pruned by per-element profiles
    (height, number of lower and upper covers, down-set size)."""
    cap = LIMITS.max_lattice if limit is None else limit
    _guard(max(L1.size, L2.size), cap, "lattice size")
    if L1.size != L2.size or len(L1.covers) != len(L2.covers):
        return False
    p1, p2 = _profile(L1), _profile(L2)
    if sorted(p1) != sorted(p2):
        return False
    size = L1.size
    candidates = [[y for y in range(size) if p2[y] == p1[x]] for x in range(size)]
    image = [-1] * size
    used = [False] * size

    def extend(x: int) -> bool:
        if x == size:
            return True
        for y in candidates[x]:
            if used[y]:
                continue
            ok = True
            for a in range(x):
                fa = image[a]
                if L1.leq(a, x) != L2.leq(fa, y) or L1.leq(x, a) != L2.leq(y, fa):
                    ok = False
                    break
            if ok:
                image[x] = y
                used[y] = True
                if extend(x + 1):
                    return True
                used[y] = False
        image[x] = -1
        return False

    return extend(0)
