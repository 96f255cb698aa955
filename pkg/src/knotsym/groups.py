"""Finitely generated permutation groups with eagerly materialized elements.

Everything downstream treats a group as its full element set: orbits,
stabilizers, and refinements are plain filters.  Subgroup enumeration and
isomorphism testing are brute-force oracles guarded by an order cap.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations, product

import numpy as np

from .errors import DomainError, VerificationError
from .perms import Edge, Permutation, make_edge

GENERATE_CAP = 1_000_000
ORACLE_CAP = 2000


@dataclass(frozen=True)
class PermGroup:
    degree: int
    generators: tuple[Permutation, ...]
    elements: frozenset[Permutation] = field(compare=False)

    @property
    def order(self) -> int:
        return len(self.elements)

    @classmethod
    def generate(cls, gens, degree: int | None = None, cap: int = GENERATE_CAP) -> "PermGroup":
        """Close the generators under composition (breadth-first products)."""
        gens = tuple(gens)
        if degree is None:
            if not gens:
                raise DomainError("bad_degree", "degree required for an empty generating set")
            degree = gens[0].degree
        if any(g.degree != degree for g in gens):
            raise DomainError("degree_mismatch", "generators must share one degree")
        if cap < 1:
            raise DomainError("bad_cap", "cap must be at least 1")
        ident = Permutation.identity(degree)
        elements = {ident}
        frontier = deque([ident])
        while frontier:
            a = frontier.popleft()
            for g in gens:
                b = a * g
                if b not in elements:
                    elements.add(b)
                    if len(elements) > cap:
                        raise DomainError("cap_exceeded", f"group closure exceeds cap {cap}")
                    frontier.append(b)
        return cls(degree, gens, frozenset(elements))

    @classmethod
    def trivial(cls, degree: int) -> "PermGroup":
        return cls(degree, (), frozenset({Permutation.identity(degree)}))

    @classmethod
    def from_elements(cls, degree: int, elements, generators=None) -> "PermGroup":
        """Wrap an already-closed element set; finds small generators if none given."""
        elements = frozenset(elements)
        if generators is None:
            generators = _small_generating_set(degree, elements)
        return cls(degree, tuple(generators), elements)

    def __contains__(self, p: Permutation) -> bool:
        return p in self.elements

    def sorted_elements(self) -> list[Permutation]:
        return sorted(self.elements, key=lambda p: p.images)

    def same_elements(self, other: "PermGroup") -> bool:
        return self.degree == other.degree and self.elements == other.elements

    def is_subgroup_of(self, other: "PermGroup") -> bool:
        return self.degree == other.degree and self.elements <= other.elements

    def small_generating_set(self) -> tuple[Permutation, ...]:
        return _small_generating_set(self.degree, self.elements)

    def orbit_point(self, x: int) -> frozenset[int]:
        if not 0 <= x < self.degree:
            raise DomainError("point_out_of_range", f"point {x} outside 0..{self.degree - 1}")
        return frozenset(p.apply(x) for p in self.elements)

    def orbit_edge(self, e: Edge) -> frozenset[Edge]:
        e = self._check_edge(e)
        return frozenset(p.apply_edge(e) for p in self.elements)

    def orbit(self, x):
        """Orbit of a point (int) or an edge (pair of points)."""
        if isinstance(x, int):
            return self.orbit_point(x)
        return self.orbit_edge(make_edge(*x))

    def edge_pointwise_stabilizer(self, e: Edge) -> "PermGroup":
        """Elements fixing both endpoints individually; inverters excluded."""
        e = self._check_edge(e)
        u, v = e
        kept = frozenset(p for p in self.elements if p.apply(u) == u and p.apply(v) == v)
        return PermGroup.from_elements(self.degree, kept)

    def inverts_edge(self, e: Edge) -> bool:
        """True iff some element maps e to itself swapping its endpoints."""
        e = self._check_edge(e)
        u, v = e
        return any(p.apply(u) == v and p.apply(v) == u for p in self.elements)

    def _check_edge(self, e: Edge) -> Edge:
        u, v = e
        if not (0 <= u < self.degree and 0 <= v < self.degree):
            raise DomainError("invalid_edge", f"edge {e} outside 0..{self.degree - 1}")
        return make_edge(u, v)


def _small_generating_set(degree: int, elements: frozenset[Permutation]) -> tuple[Permutation, ...]:
    if len(elements) == 1:
        return ()
    by_pref = sorted(elements, key=lambda p: (-p.order(), p.images))
    gens: list[Permutation] = []
    closure = {Permutation.identity(degree)}
    for cand in by_pref:
        if cand in closure:
            continue
        gens.append(cand)
        closure = set(PermGroup.generate(gens, degree=degree).elements)
        if len(closure) == len(elements):
            break
    return tuple(gens)


class _CayleyTable:
    """Integer-indexed multiplication table for a materialized group."""

    def __init__(self, group: PermGroup):
        self.elems = group.sorted_elements()
        self.index = {p: i for i, p in enumerate(self.elems)}
        k = len(self.elems)
        table = np.empty((k, k), dtype=np.int32)
        for i, a in enumerate(self.elems):
            table[i] = [self.index[a * b] for b in self.elems]
        self.table = table
        self.identity_idx = self.index[Permutation.identity(group.degree)]

    def closure(self, seed: frozenset[int]) -> frozenset[int]:
        arr = np.fromiter(sorted(seed | {self.identity_idx}), dtype=np.int32)
        while True:
            prods = np.unique(self.table[np.ix_(arr, arr)])
            if prods.size == arr.size:
                return frozenset(int(i) for i in prods)
            arr = prods

    def cyclic(self, i: int) -> frozenset[int]:
        out = {self.identity_idx}
        x = i
        while x != self.identity_idx:
            out.add(x)
            x = int(self.table[x, i])
        return frozenset(out)


def enumerate_subgroups(g: PermGroup, cap: int = ORACLE_CAP) -> list[PermGroup]:
    """Every subgroup of g, by cyclic-seed + extend-and-close fixpoint.

    Complete because any subgroup is reached from a cyclic seed by repeatedly
    adjoining one more of its elements and closing.
    """
    if g.order > cap:
        raise DomainError("order_guard", f"group order {g.order} exceeds guard {cap}")
    ct = _CayleyTable(g)
    cyclic_by_set: dict[frozenset[int], int] = {}
    for i in range(len(ct.elems)):
        cyc = ct.cyclic(i)
        cyclic_by_set.setdefault(cyc, i)
    reps = list(cyclic_by_set.values())

    subs: set[frozenset[int]] = {frozenset({ct.identity_idx})} | set(cyclic_by_set)
    work = deque(subs)
    while work:
        current = work.popleft()
        for rep in reps:
            if rep in current:
                continue
            extended = ct.closure(current | {rep})
            if extended not in subs:
                subs.add(extended)
                work.append(extended)

    ordered = sorted(subs, key=lambda s: (len(s), sorted(s)))
    return [
        PermGroup.from_elements(g.degree, frozenset(ct.elems[i] for i in s))
        for s in ordered
    ]


@dataclass(frozen=True)
class GroupFingerprint:
    order: int
    abelian: bool
    order_histogram: tuple[tuple[int, int], ...]  # element order -> count
    center_order: int
    derived_order: int


def _derived_subgroup(g: PermGroup) -> frozenset[Permutation]:
    gens = g.small_generating_set()
    if not gens:
        return frozenset({Permutation.identity(g.degree)})
    seeds = {a * b * a.inverse() * b.inverse() for a, b in product(gens, repeat=2)}
    while True:
        closed = PermGroup.generate(tuple(seeds), degree=g.degree).elements
        conjugates = {x * d * x.inverse() for x in gens for d in closed}
        if conjugates <= closed:
            return closed
        seeds = set(closed) | conjugates


def fingerprint(g: PermGroup) -> GroupFingerprint:
    gens = g.small_generating_set()
    abelian = all(a * b == b * a for a, b in combinations(gens, 2))
    hist: dict[int, int] = {}
    for p in g.elements:
        o = p.order()
        hist[o] = hist.get(o, 0) + 1
    if abelian:
        center_order = g.order
        derived_order = 1
    else:
        center_order = sum(1 for z in g.elements if all(z * x == x * z for x in gens))
        derived_order = len(_derived_subgroup(g))
    return GroupFingerprint(g.order, abelian, tuple(sorted(hist.items())), center_order, derived_order)


def _try_generator_images(
    g_elems: list[Permutation],
    gens: tuple[Permutation, ...],
    h: PermGroup,
    images: tuple[Permutation, ...],
) -> bool:
    degree_g = gens[0].degree if gens else None
    mapping = {Permutation.identity(degree_g): Permutation.identity(h.degree)}
    frontier = deque(mapping)
    while frontier:
        a = mapping_key = frontier.popleft()
        fa = mapping[mapping_key]
        for gi, hi in zip(gens, images):
            b = a * gi
            fb = fa * hi
            known = mapping.get(b)
            if known is None:
                mapping[b] = fb
                frontier.append(b)
            elif known != fb:
                return False
    if len(mapping) != len(g_elems):
        return False
    values = set(mapping.values())
    return len(values) == len(g_elems) and values <= h.elements


def isomorphic(g: PermGroup, h: PermGroup, cap: int = ORACLE_CAP) -> bool:
    """Abstract-group isomorphism by fingerprint, then generator-image search."""
    if g.order > cap or h.order > cap:
        raise DomainError("order_guard", f"order exceeds guard {cap}")
    if g.order != h.order:
        return False
    if fingerprint(g) != fingerprint(h):
        return False
    if g.order == 1:
        return True
    gens = g.small_generating_set()
    g_elems = g.sorted_elements()
    h_by_order: dict[int, list[Permutation]] = {}
    for p in h.sorted_elements():
        h_by_order.setdefault(p.order(), []).append(p)
    candidate_pools = [h_by_order.get(gen.order(), []) for gen in gens]
    for images in product(*candidate_pools):
        if _try_generator_images(g_elems, gens, h, images):
            return True
    return False


def assert_closed(elements, degree: int) -> None:
    """Raise unless the element set is a genuine subgroup."""
    elems = set(elements)
    ident = Permutation.identity(degree)
    if ident not in elems:
        raise VerificationError("element set lacks the identity")
    for a in elems:
        if a.inverse() not in elems:
            raise VerificationError("element set not closed under inverse", witness=a)
        for b in elems:
            if a * b not in elems:
                raise VerificationError("element set not closed under composition", witness=(a, b))
