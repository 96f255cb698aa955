"""Realizability pipeline for complete graphs.

Checks which single automorphisms and which group shapes can be symmetry
groups of an embedded complete graph, finds witness edges with trivial
pointwise stabilizer, and assembles knot-labeling certificates that realize
a chosen subgroup as the refined symmetry group.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations

from .dihedral import Family, cyclic_group, dihedral_group, reference_group
from .errors import DomainError, VerificationError
from .graphs import Graph, embeds_in_circle, fixed_subgraph, is_three_connected
from .groups import ORACLE_CAP, PermGroup, isomorphic
from .labels import LabeledEmbedding, PrimeKnot
from .perms import CycleType, Edge, Permutation, cycle_type, make_edge

DEFAULT_NONINVERTIBLE = ("8_17", "9_32", "9_33", "10_79", "10_81", "10_88", "10_92")
DEFAULT_INVERTIBLE = ("3_1", "4_1", "5_1", "5_2", "6_1", "6_2", "7_1")


def default_alphabet() -> tuple[PrimeKnot, ...]:
    knots = [PrimeKnot(sym, False) for sym in DEFAULT_NONINVERTIBLE]
    knots += [PrimeKnot(sym, True) for sym in DEFAULT_INVERTIBLE]
    return tuple(knots)


@dataclass(frozen=True)
class RealizabilityVerdict:
    realizable: bool
    condition: int | None  # 1..4, or None
    m: int
    cycles: CycleType
    is_identity: bool = False


def check_automorphism(n: int, p: Permutation) -> RealizabilityVerdict:
    """Decide whether a single automorphism of the complete graph on n > 6
    vertices is induced by an orientation-preserving diffeomorphism of some
    embedding, by the four-condition criterion."""
    if n <= 6:
        raise DomainError("n_too_small", f"the realizability criterion requires n > 6, got {n}")
    if p.degree != n:
        raise DomainError("degree_mismatch", f"permutation degree {p.degree} != n = {n}")
    ct = cycle_type(p)
    m = p.order()
    if p.is_identity():
        return RealizabilityVerdict(True, None, 1, ct, is_identity=True)
    lengths = ct.as_dict()
    fixed = ct.fixed_points
    if m % 2 == 0 and m > 2 and set(lengths) == {m} and fixed == 0:
        return RealizabilityVerdict(True, 1, m, ct)
    if m == 2 and set(lengths) == {2} and fixed <= 2:
        return RealizabilityVerdict(True, 2, m, ct)
    if m % 2 == 1 and set(lengths) == {m} and fixed <= 3:
        return RealizabilityVerdict(True, 3, m, ct)
    if (
        m % 2 == 1
        and m % 3 == 0
        and fixed == 0
        and lengths.get(3) == 1
        and set(lengths) <= {m, 3}
        and lengths.get(m, 0) >= 1
    ):
        return RealizabilityVerdict(True, 4, m, ct)
    return RealizabilityVerdict(False, None, m, ct)


@dataclass(frozen=True)
class ShapeVerdict:
    realizable_shape: bool
    family: str | None


def _odd_divisors_ge3(n: int) -> list[int]:
    return [d for d in range(3, n + 1, 2) if n % d == 0]


def check_group_realizable_shape(h: PermGroup, cap: int = ORACLE_CAP) -> ShapeVerdict:
    """Match h's isomorphism type against the families that occur as symmetry
    groups of embedded complete graphs: cyclic, dihedral, subgroup of an odd
    dihedral square, or A4 / S4 / A5."""
    if h.order > cap:
        raise DomainError("order_guard", f"order {h.order} exceeds guard {cap}")
    order = h.order
    if max(p.order() for p in h.elements) == order:
        return ShapeVerdict(True, "cyclic")
    if order % 2 == 0:
        k = order // 2
        if k == 2:
            ref = reference_group(Family.D2)
        elif k >= 3:
            ref = dihedral_group(k)
        else:
            ref = None
        if ref is not None and isomorphic(h, ref, cap=cap):
            return ShapeVerdict(True, "dihedral")
    candidates: list[tuple[Family, int, int | None]] = []
    if order % 2 == 1:
        for r in _odd_divisors_ge3(order):
            s = order // r
            if s >= 3 and s % 2 == 1 and s <= r:
                candidates.append((Family.ZRXZS, r, s))
    if order % 2 == 0:
        half = order // 2
        for r in _odd_divisors_ge3(half):
            s = half // r
            if s >= 3 and s % 2 == 1:
                candidates.append((Family.DRXZS, r, s))
                if s <= r:
                    candidates.append((Family.SEMIDIRECT, r, s))
    if order % 4 == 0:
        quarter = order // 4
        for r in _odd_divisors_ge3(quarter):
            s = quarter // r
            if s >= 3 and s % 2 == 1 and s <= r:
                candidates.append((Family.DRXDS, r, s))
    for family, r, s in candidates:
        if isomorphic(h, reference_group(family, r, s), cap=cap):
            return ShapeVerdict(True, "dihedral_product_subgroup")
    if order == 12 and isomorphic(h, _alternating(4), cap=cap):
        return ShapeVerdict(True, "A4")
    if order == 24 and isomorphic(h, _symmetric(4), cap=cap):
        return ShapeVerdict(True, "S4")
    if order == 60 and isomorphic(h, _alternating(5), cap=cap):
        return ShapeVerdict(True, "A5")
    return ShapeVerdict(False, None)


def _symmetric(n: int) -> PermGroup:
    cycle = Permutation(tuple(list(range(1, n)) + [0]))
    swap = Permutation(tuple([1, 0] + list(range(2, n))))
    return PermGroup.generate([cycle, swap], degree=n)


def _alternating(n: int) -> PermGroup:
    three = Permutation(tuple([1, 2, 0] + list(range(3, n))))
    if n % 2 == 1:
        cycle = Permutation(tuple(list(range(1, n)) + [0]))
    else:
        cycle = Permutation(tuple([0] + list(range(2, n)) + [1]))
    return PermGroup.generate([three, cycle], degree=n)


@dataclass(frozen=True)
class HypothesisResult:
    holds: bool
    witness: Permutation | None


def subgroup_theorem_hypothesis(
    g: PermGroup, h: PermGroup, graph: Graph, edges: list[Edge]
) -> HypothesisResult:
    """Check the edge-set hypothesis: any ambient element pointwise fixing the
    first edge and preserving every h-orbit of the picked edges must pointwise
    fix a subgraph not embeddable in the circle (or be the identity)."""
    if not h.is_subgroup_of(g):
        raise DomainError("not_subgroup", "h must be a subgroup of g")
    if g.degree != graph.n:
        raise DomainError("degree_mismatch", "group degree must equal the vertex count")
    if not is_three_connected(graph):
        raise DomainError("not_three_connected", "the hypothesis applies to 3-connected graphs")
    if not edges:
        raise DomainError("no_edges", "at least one edge is required")
    edges = [make_edge(*e) for e in edges]
    for e in edges:
        if not graph.has_edge(e):
            raise DomainError("edge_not_in_graph", f"edge {e} is not a graph edge")
    orbits = [h.orbit_edge(e) for e in edges]
    for i, j in combinations(range(len(edges)), 2):
        if orbits[i] == orbits[j]:
            raise DomainError("duplicate_orbit", f"edges {edges[i]} and {edges[j]} share an h-orbit")
    u, v = edges[0]
    for phi in g.sorted_elements():
        if phi.apply(u) != u or phi.apply(v) != v:
            continue
        if any(frozenset(phi.apply_edge(e) for e in orbit) != orbit for orbit in orbits):
            continue
        if phi.is_identity():
            continue
        if embeds_in_circle(fixed_subgraph(graph, phi)):
            return HypothesisResult(False, phi)
    return HypothesisResult(True, None)


def find_free_edge(g: PermGroup, graph: Graph) -> Edge | None:
    """Lexicographically first edge whose pointwise stabilizer in g is trivial."""
    if g.degree != graph.n:
        raise DomainError("degree_mismatch", "group degree must equal the vertex count")
    for e in graph.sorted_edges():
        if g.edge_pointwise_stabilizer(e).order == 1:
            return e
    return None


def _assert_free(g: PermGroup, e: Edge, context: str) -> None:
    stab = g.edge_pointwise_stabilizer(e)
    if stab.order != 1:
        offender = next(p for p in stab.sorted_elements() if not p.is_identity())
        raise VerificationError(
            f"{context}: witness edge {e} pointwise fixed by {offender.cycle_string()}",
            witness=offender,
        )


def prop1_witness(
    g: PermGroup, alpha: Permutation, graph: Graph, beta: Permutation | None = None
) -> Edge:
    """Witness edge for a cyclic or dihedral symmetry group: the edge from a
    full-cycle vertex to its image, with the special four-vertex search when
    both generators are involutions."""
    if g.degree != graph.n:
        raise DomainError("degree_mismatch", "group degree must equal the vertex count")
    if alpha not in g:
        raise DomainError("not_in_group", "alpha must be an element of g")
    m = alpha.order()
    if beta is not None:
        if beta not in g:
            raise DomainError("not_in_group", "beta must be an element of g")
        if beta.order() != 2:
            raise DomainError("bad_parameter", "beta must have order 2")
        if alpha * beta != beta * alpha.inverse():
            raise DomainError("bad_parameter", "generators must satisfy the dihedral relation")
    if m == 2 and beta is not None:
        for v in range(graph.n):
            av, bv = alpha.apply(v), beta.apply(v)
            if av == v or bv == v or av == bv:
                continue
            abv = alpha.apply(bv)
            if len({v, av, bv, abv}) != 4:
                continue
            e = make_edge(v, av)
            _assert_free(g, e, "involution-pair witness")
            return e
        raise DomainError("no_witness_vertex", "no vertex moved by both generators with distinct images")
    for v in range(graph.n):
        if len({_pow_apply(alpha, v, i) for i in range(m)}) == m:
            e = make_edge(v, alpha.apply(v))
            _assert_free(g, e, "full-cycle witness")
            return e
    raise DomainError("no_full_cycle", f"alpha has no cycle of its full order {m}")


def _pow_apply(p: Permutation, v: int, k: int) -> int:
    for _ in range(k):
        v = p.apply(v)
    return v


def prop2_witness(g: PermGroup, alpha: Permutation, beta: Permutation, graph: Graph) -> Edge:
    """Witness edge for groups containing an odd-by-odd torus of rotations:
    search for a vertex whose alpha- and beta-orbits meet only in itself."""
    if g.degree != graph.n:
        raise DomainError("degree_mismatch", "group degree must equal the vertex count")
    for p in (alpha, beta):
        if p not in g:
            raise DomainError("not_in_group", "alpha and beta must be elements of g")
    r, s = alpha.order(), beta.order()
    if r < 3 or r % 2 == 0 or s < 3 or s % 2 == 0:
        raise DomainError("bad_parameter", f"orders must be odd and >= 3, got {r} and {s}")
    if alpha * beta != beta * alpha:
        raise DomainError("bad_parameter", "alpha and beta must commute")
    powers_alpha = {_perm_power(alpha, i) for i in range(r)}
    powers_beta = {_perm_power(beta, j) for j in range(s)}
    if len(powers_alpha & powers_beta) != 1:
        raise DomainError("bad_parameter", "the cyclic groups of alpha and beta must intersect trivially")
    for v in range(graph.n):
        orbit_a = {_pow_apply(alpha, v, i) for i in range(r)}
        orbit_b = {_pow_apply(beta, v, j) for j in range(s)}
        if len(orbit_a) == r and len(orbit_b) == s and orbit_a & orbit_b == {v}:
            e = make_edge(v, alpha.apply(beta.apply(v)))
            _assert_free(g, e, "torus witness")
            return e
    raise DomainError("no_witness_vertex", "no vertex with trivially intersecting full orbits")


def _perm_power(p: Permutation, k: int) -> Permutation:
    out = Permutation.identity(p.degree)
    for _ in range(k):
        out = out * p
    return out


@dataclass(frozen=True)
class Certificate:
    ambient: PermGroup
    target: PermGroup
    picks: tuple[tuple[Edge, PrimeKnot], ...]
    embedding: LabeledEmbedding
    refined: PermGroup
    verified: bool
    notes: tuple[str, ...]


def realize_subgroup(
    g: PermGroup,
    h: PermGroup,
    graph: Graph,
    alphabet: tuple[PrimeKnot, ...] | None = None,
    max_edge_set: int = 3,
) -> Certificate:
    """Build a knot labeling whose refinement of the ambient group is exactly h.

    Tries the single-free-edge route first, then bounded edge-set search under
    the orbit-preservation hypothesis.  Verification is element-by-element.
    """
    if alphabet is None:
        alphabet = default_alphabet()
    if g.degree != graph.n:
        raise DomainError("degree_mismatch", "ambient group degree must equal the vertex count")
    if not h.is_subgroup_of(g):
        raise DomainError("not_subgroup", "target must be a subgroup of the ambient group")
    if not is_three_connected(graph):
        raise DomainError("not_three_connected", "realization requires a 3-connected graph")
    notes: list[str] = ["certificate is relative to the supplied ambient group"]
    edge_list = None
    free = find_free_edge(g, graph)
    if free is not None:
        edge_list = [free]
        notes.append(f"free edge route via edge {_edge_str(free)}")
    else:
        edge_list = _search_edge_sets(g, h, graph, max_edge_set)
        if edge_list is None:
            raise DomainError(
                "no_witness_edges",
                f"no edge set of size <= {max_edge_set} satisfies the hypothesis",
            )
        notes.append("hypothesis route via edges " + ", ".join(_edge_str(e) for e in edge_list))
    emb = LabeledEmbedding(graph, g)
    picks = []
    used: set[str] = set()
    for e in edge_list:
        inverted = h.inverts_edge(e)
        knot = next(
            (k for k in alphabet if k.invertible == inverted and k.symbol not in used), None
        )
        if knot is None:
            kind = "invertible" if inverted else "non-invertible"
            raise DomainError("alphabet_exhausted", f"no unused {kind} knot in the alphabet")
        used.add(knot.symbol)
        picks.append((e, knot))
    labeled = emb.with_added_knots(h, picks)
    refined = labeled.refine()
    verified = refined.same_elements(h)
    if not verified:
        extra = sorted(set(refined.elements) - set(h.elements), key=lambda p: p.images)
        for phi in extra:
            if not embeds_in_circle(fixed_subgraph(graph, phi)):
                notes.append(
                    f"contradiction: surviving {phi.cycle_string()} pointwise fixes a "
                    "subgraph not embeddable in the circle"
                )
            else:
                notes.append(f"unexpected surviving element {phi.cycle_string()}")
    return Certificate(g, h, tuple(picks), labeled, refined, verified, tuple(notes))


def _edge_str(e: Edge) -> str:
    return f"{{{e[0] + 1},{e[1] + 1}}}"


def _search_edge_sets(g: PermGroup, h: PermGroup, graph: Graph, max_size: int):
    edges = graph.sorted_edges()
    for size in range(1, max_size + 1):
        for combo in combinations(edges, size):
            orbits = [h.orbit_edge(e) for e in combo]
            if len(set(orbits)) != len(orbits):
                continue
            for ordering in permutations(combo):
                result = subgroup_theorem_hypothesis(g, h, graph, list(ordering))
                if result.holds:
                    return list(ordering)
    return None
