"""Permutations on labeled points, cycle notation, and cycle types.

Points are 0-indexed internally; cycle notation (the only textual interface)
is 1-indexed.  Composition convention: (a * b)(x) = a(b(x)), i.e. b acts
first.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

from .errors import DomainError

# An edge is an unordered pair of distinct points, normalized as (min, max).
Edge = tuple[int, int]


def make_edge(u: int, v: int) -> Edge:
    if u == v:
        raise DomainError("invalid_edge", f"edge endpoints must be distinct, got {u} and {v}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Permutation:
    """A bijection on {0, ..., n-1} in one-line notation."""

    images: tuple[int, ...]

    def __post_init__(self):
        n = len(self.images)
        if sorted(self.images) != list(range(n)):
            raise DomainError("not_bijection", f"images {self.images} are not a bijection on 0..{n - 1}")

    @staticmethod
    def identity(n: int) -> "Permutation":
        return Permutation(tuple(range(n)))

    @property
    def degree(self) -> int:
        return len(self.images)

    def apply(self, x: int) -> int:
        return self.images[x]

    def apply_edge(self, e: Edge) -> Edge:
        return make_edge(self.images[e[0]], self.images[e[1]])

    def __mul__(self, other: "Permutation") -> "Permutation":
        if other.degree != self.degree:
            raise DomainError("degree_mismatch", "cannot compose permutations of different degrees")
        return Permutation(tuple(self.images[i] for i in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def fixed_points(self) -> tuple[int, ...]:
        return tuple(i for i, j in enumerate(self.images) if i == j)

    def cycles(self) -> list[tuple[int, ...]]:
        """Non-trivial cycles, each starting at its smallest point, sorted."""
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cyc = [start]
            seen[start] = True
            x = self.images[start]
            while x != start:
                seen[x] = True
                cyc.append(x)
                x = self.images[x]
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def order(self) -> int:
        return math.lcm(1, *(len(c) for c in self.cycles()))

    def cycle_string(self) -> str:
        """1-indexed cycle notation; the identity renders as "()"."""
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join("(" + " ".join(str(x + 1) for x in c) + ")" for c in cycs)

    def __repr__(self) -> str:
        return f"Permutation[{self.degree}] {self.cycle_string()}"


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, n: int) -> Permutation:
    """Parse 1-indexed disjoint-cycle notation, e.g. "(1 2 3)(4 5)".

    An empty or all-whitespace string (and "()") is the identity.  Points may
    be separated by spaces or commas.
    """
    if n < 1:
        raise DomainError("bad_degree", "degree must be at least 1")
    stripped = _CYCLE_RE.sub("", text)
    if stripped.strip():
        raise DomainError("malformed_cycles", f"unexpected text outside cycles: {stripped.strip()!r}")
    images = list(range(n))
    used: set[int] = set()
    for body in _CYCLE_RE.findall(text):
        points = []
        for tok in body.replace(",", " ").split():
            try:
                p = int(tok)
            except ValueError:
                raise DomainError("malformed_cycles", f"not a point: {tok!r}") from None
            if not 1 <= p <= n:
                raise DomainError("point_out_of_range", f"point {p} outside 1..{n}")
            points.append(p - 1)
        if len(set(points)) != len(points) or used & set(points):
            raise DomainError("repeated_point", f"repeated point in cycles: {text!r}")
        used.update(points)
        for a, b in zip(points, points[1:] + points[:1]):
            images[a] = b
    return Permutation(tuple(images))


@dataclass(frozen=True)
class CycleType:
    """Multiset of non-trivial cycle lengths; fixed points counted apart."""

    lengths: tuple[tuple[int, int], ...]  # (cycle length, count), sorted by length
    fixed_points: int

    @property
    def degree(self) -> int:
        return self.fixed_points + sum(length * count for length, count in self.lengths)

    def as_dict(self) -> dict[int, int]:
        return dict(self.lengths)


def cycle_type(p: Permutation) -> CycleType:
    counts: dict[int, int] = {}
    for c in p.cycles():
        counts[len(c)] = counts.get(len(c), 0) + 1
    return CycleType(tuple(sorted(counts.items())), len(p.fixed_points()))
