"""Permutations of {1, ..., d} with an explicit degree.

Composition is left-to-right everywhere in this package: compose(a, b) sends
i to b(a(i)), i.e. a acts first.  Cycle decompositions are canonical: each
cycle is rotated to start at its minimum, cycles are sorted by minimum, and
fixed points appear as 1-cycles.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Sequence

# A cycle type is the multiset of cycle lengths (fixed points included),
# stored as a descending tuple summing to the degree.
CycleType = tuple[int, ...]


class DegreeMismatchError(ValueError):
    """Operands act on point sets of different sizes."""


class Permutation:
    """A bijection of {1, ..., d}, stored as its image sequence."""

    __slots__ = ("images",)

    def __init__(self, images: Sequence[int]):
        imgs = tuple(int(i) for i in images)
        d = len(imgs)
        if d == 0:
            raise ValueError("degree must be at least 1")
        if sorted(imgs) != list(range(1, d + 1)):
            raise ValueError(f"not a bijection of 1..{d}: {imgs}")
        self.images: tuple[int, ...] = imgs

    @classmethod
    def identity(cls, d: int) -> "Permutation":
        return cls(range(1, d + 1))

    @classmethod
    def from_cycles(cls, d: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        """Build from disjoint cycles; unmentioned points stay fixed."""
        images = list(range(1, d + 1))
        seen: set[int] = set()
        for cyc in cycles:
            cyc = [int(x) for x in cyc]
            if not cyc:
                raise ValueError("empty cycle")
            for x in cyc:
                if not 1 <= x <= d:
                    raise ValueError(f"point {x} outside 1..{d}")
                if x in seen:
                    raise ValueError(f"point {x} repeated across cycles")
                seen.add(x)
            for i, x in enumerate(cyc):
                images[x - 1] = cyc[(i + 1) % len(cyc)]
        return cls(images)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self) -> int:
        return hash(("Permutation", self.images))

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Left-to-right product: (self * other)(i) = other(self(i))."""
        if other.degree != self.degree:
            raise DegreeMismatchError(
                f"degrees differ: {self.degree} vs {other.degree}"
            )
        return Permutation(tuple(other.images[i - 1] for i in self.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, j in enumerate(self.images, start=1):
            inv[j - 1] = i
        return Permutation(inv)

    def conjugate(self, t: "Permutation") -> "Permutation":
        """t^-1 * self * t under the left-to-right convention."""
        return t.inverse() * self * t

    @property
    def is_identity(self) -> bool:
        return all(j == i for i, j in enumerate(self.images, start=1))

    def cycles(self) -> list[tuple[int, ...]]:
        """Canonical disjoint cycles, fixed points included."""
        out: list[tuple[int, ...]] = []
        seen = [False] * self.degree
        for start in range(1, self.degree + 1):
            if seen[start - 1]:
                continue
            cyc = [start]
            seen[start - 1] = True
            nxt = self(start)
            while nxt != start:
                cyc.append(nxt)
                seen[nxt - 1] = True
                nxt = self(nxt)
            out.append(tuple(cyc))
        return out

    def nontrivial_cycles(self) -> list[tuple[int, ...]]:
        return [c for c in self.cycles() if len(c) >= 2]

    def cycle_type(self) -> CycleType:
        return tuple(sorted((len(c) for c in self.cycles()), reverse=True))

    def num_cycles(self) -> int:
        return len(self.cycles())

    def cycle_string(self) -> str:
        if self.is_identity:
            return "()"
        return "".join(
            "(" + " ".join(str(x) for x in c) + ")" for c in self.cycles()
        )

    def to_json(self) -> list[list[int]]:
        return [list(c) for c in self.cycles()]

    @classmethod
    def from_json(cls, cycles: Iterable[Sequence[int]], d: int | None = None) -> "Permutation":
        cycles = [list(c) for c in cycles]
        points = [x for c in cycles for x in c]
        inferred = max(points) if points else 0
        if d is None:
            d = len(points)
            if inferred != d:
                raise ValueError("cycles must cover 1..d exactly once")
        return cls.from_cycles(d, cycles)

    def __repr__(self) -> str:
        return f"Permutation({self.cycle_string()!r}, d={self.degree})"


def compose(a: Permutation, b: Permutation) -> Permutation:
    """Left-to-right product: i -> b(a(i))."""
    return a * b


def conjugate(p: Permutation, t: Permutation) -> Permutation:
    return p.conjugate(t)


def cycle_decomposition(p: Permutation) -> list[tuple[int, ...]]:
    return p.cycles()


def is_transitive(perms: Sequence[Permutation]) -> bool:
    """Whether the generated group has a single orbit on 1..d.

    Breadth-first orbit closure of the point 1 under the generators and
    their inverses.
    """
    if not perms:
        raise ValueError("need at least one generator")
    d = perms[0].degree
    if any(p.degree != d for p in perms):
        raise DegreeMismatchError("generators act on different point sets")
    gens = list(perms) + [p.inverse() for p in perms]
    seen = {1}
    queue = deque([1])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = g(x)
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return len(seen) == d
