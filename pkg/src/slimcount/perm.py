"""Permutations, partial permutations and the segment/block calculus.

All public indices are 1-based: a permutation of degree ``h`` is stored as
its image tuple ``(pi(1), ..., pi(h))``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from . import kernels
from .errors import DimensionError, EmptyPermutationError, PermutationParseError

__all__ = [
    "Permutation", "PartialPermutation", "SegmentPartition", "BlockForm",
    "inversions", "partial_inversions", "inverse", "is_involution",
    "segments", "head_body", "compose_head_body", "is_irreducible",
    "block_canonical", "avoids_321",
]


@dataclass(frozen=True, order=True)
class Permutation:
    """A bijection of {1, ..., h}; ``Permutation(())`` is the empty one."""

    image: tuple[int, ...]

    def __post_init__(self):
        img = tuple(self.image)
        object.__setattr__(self, "image", img)
        _check_bijection(img)

    @classmethod
    def _trusted(cls, image: tuple[int, ...]) -> "Permutation":
        # skips validation; only for images produced by this package
        obj = object.__new__(cls)
        object.__setattr__(obj, "image", image)
        return obj

    @classmethod
    def identity(cls, h: int) -> "Permutation":
        return cls._trusted(tuple(range(1, h + 1)))

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        """Parse comma-separated 1-based images such as ``"2,7,6,4,1,8,3,5"``."""
        text = text.strip()
        if not text:
            return cls(())
        try:
            values = tuple(int(tok) for tok in text.split(","))
        except ValueError:
            raise PermutationParseError(f"not a comma-separated list of integers: {text!r}") from None
        return cls(values)

    @property
    def degree(self) -> int:
        return len(self.image)

    def __call__(self, s: int) -> int:
        if not 1 <= s <= len(self.image):
            raise IndexError(f"{s} is outside 1..{len(self.image)}")
        return self.image[s - 1]

    def __len__(self) -> int:
        return len(self.image)

    def __iter__(self) -> Iterator[int]:
        return iter(self.image)

    def __str__(self) -> str:
        return ",".join(map(str, self.image))

    def graph(self) -> "PartialPermutation":
        """The full partial permutation ``{(s, pi(s))}`` on the h x h grid."""
        h = self.degree
        return PartialPermutation._trusted(h, h, tuple(enumerate(self.image, 1)))


def _check_bijection(img: Sequence[int]) -> None:
    h = len(img)
    seen = [False] * (h + 1)
    for x in img:
        if not isinstance(x, int) or isinstance(x, bool):
            raise PermutationParseError(f"value {x!r} is not an integer")
        if not 1 <= x <= h:
            raise PermutationParseError(f"value {x} out of range 1..{h}")
        if seen[x]:
            raise PermutationParseError(f"value {x} repeated")
        seen[x] = True
    # with h entries all in range and none repeated, nothing can be missing


@dataclass(frozen=True)
class PartialPermutation:
    """Pairs ``(i_s, j_s)`` inside an ``rows x cols`` grid.

    Pairs are kept sorted by row; rows and columns are each pairwise distinct.
    """

    rows: int
    cols: int
    pairs: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        pairs = tuple(sorted((int(i), int(j)) for i, j in self.pairs))
        object.__setattr__(self, "pairs", pairs)
        if self.rows < 1 or self.cols < 1:
            raise DimensionError(f"grid must be at least 1x1, got {self.rows}x{self.cols}")
        for i, j in pairs:
            if not (1 <= i <= self.rows and 1 <= j <= self.cols):
                raise DimensionError(f"pair ({i}, {j}) outside the {self.rows}x{self.cols} grid")
        if len({i for i, _ in pairs}) != len(pairs):
            raise ValueError("rows of a partial permutation must be distinct")
        if len({j for _, j in pairs}) != len(pairs):
            raise ValueError("columns of a partial permutation must be distinct")

    @classmethod
    def _trusted(cls, rows, cols, pairs) -> "PartialPermutation":
        obj = object.__new__(cls)
        object.__setattr__(obj, "rows", rows)
        object.__setattr__(obj, "cols", cols)
        object.__setattr__(obj, "pairs", tuple(pairs))
        return obj

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.pairs)


@dataclass(frozen=True)
class SegmentPartition:
    """Segments of a permutation, left to right, as 1-based ``range`` objects."""

    intervals: tuple[range, ...]

    def __len__(self) -> int:
        return len(self.intervals)

    def __iter__(self) -> Iterator[range]:
        return iter(self.intervals)

    def as_sets(self) -> list[set[int]]:
        return [set(r) for r in self.intervals]

    def __str__(self) -> str:
        return "|".join("{" + ",".join(map(str, r)) + "}" for r in self.intervals)


@dataclass(frozen=True, order=True)
class BlockForm:
    """Canonical representative of a block; equal forms mean equal blocks."""

    canonical: Permutation

    def __str__(self) -> str:
        return str(self.canonical)


def inversions(pi: Permutation) -> int:
    return kernels.inversions(pi.image)


def partial_inversions(tau: PartialPermutation | Iterable[tuple[int, int]]) -> int:
    """Inverted pairs among the defined entries of a partial permutation."""
    pairs = sorted(tau)
    count = 0
    for a in range(len(pairs)):
        ja = pairs[a][1]
        for b in range(a + 1, len(pairs)):
            if ja > pairs[b][1]:
                count += 1
    return count


def inverse(pi: Permutation) -> Permutation:
    return Permutation._trusted(kernels.inverse(pi.image))


def is_involution(pi: Permutation) -> bool:
    return kernels.is_involution(pi.image)


def avoids_321(pi: Permutation) -> bool:
    return not kernels.contains_321(pi.image)


def _require_nonempty(pi: Permutation) -> None:
    if not pi.image:
        raise EmptyPermutationError("the empty permutation has no segments")


def _pieces(img: tuple[int, ...]) -> Iterator[tuple[int, tuple[int, ...]]]:
    # (offset, re-indexed restriction) for every segment, left to right
    start = 0
    for end in kernels.segment_cuts(img):
        yield start, tuple(x - start for x in img[start:end])
        start = end


def segments(pi: Permutation) -> SegmentPartition:
    _require_nonempty(pi)
    cuts = kernels.segment_cuts(pi.image)
    return SegmentPartition(tuple(range(lo + 1, hi + 1) for lo, hi in zip([0] + cuts, cuts)))


def head_body(pi: Permutation) -> tuple[Permutation, Permutation]:
    """Split into the restriction to the initial segment and to the rest.

    Both parts are re-indexed to start at 1; the body may be empty.
    """
    _require_nonempty(pi)
    u = kernels.segment_cuts(pi.image)[0]
    head = pi.image[:u]
    body = tuple(x - u for x in pi.image[u:])
    return Permutation._trusted(head), Permutation._trusted(body)


def compose_head_body(head: Permutation, body: Permutation) -> Permutation:
    u = head.degree
    return Permutation(head.image + tuple(x + u for x in body.image))


def is_irreducible(pi: Permutation) -> bool:
    _require_nonempty(pi)
    return kernels.segment_cuts(pi.image)[0] == pi.degree


def block_canonical(pi: Permutation) -> BlockForm:
    """Replace every segment by the lexicographically smaller of itself and
    its inverse."""
    out: list[int] = []
    for offset, piece in _pieces(pi.image):
        inv = kernels.inverse(piece)
        best = piece if piece <= inv else inv
        out.extend(x + offset for x in best)
    return BlockForm(Permutation._trusted(tuple(out)))
