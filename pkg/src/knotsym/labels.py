"""Symbolic knot labels on graph edges and the refinement they induce.

A label is a multiset of prime-knot symbols with orientation signs; an
automorphism of the underlying graph survives refinement iff it transports
every label onto the label of the image edge.  Knot identity is purely
symbolic: equality of symbols, plus an invertibility flag.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .errors import DomainError, VerificationError
from .graphs import Graph, is_three_connected
from .groups import PermGroup
from .perms import Edge, Permutation, make_edge

PLUS = 1
MINUS = -1


@dataclass(frozen=True)
class PrimeKnot:
    symbol: str
    invertible: bool


@dataclass(frozen=True)
class KnotLabel:
    """Connected-sum multiset of (prime knot, orientation sign) factors.

    Signs are relative to the edge's chosen direction; factors on invertible
    knots are normalized to sign +.
    """

    factors: tuple[tuple[PrimeKnot, int], ...]

    EMPTY: "KnotLabel" = None  # assigned below

    @staticmethod
    def of(factors) -> "KnotLabel":
        normalized = []
        for knot, sign in factors:
            if sign not in (PLUS, MINUS):
                raise DomainError("bad_sign", f"orientation sign must be +1 or -1, got {sign}")
            normalized.append((knot, PLUS if knot.invertible else sign))
        normalized.sort(key=lambda f: (f[0].symbol, f[1]))
        return KnotLabel(tuple(normalized))

    def is_empty(self) -> bool:
        return not self.factors

    @property
    def invertible(self) -> bool:
        # Schubert: a sum with a non-invertible prime factor is non-invertible.
        return all(knot.invertible for knot, _ in self.factors)

    def symbols(self) -> set[str]:
        return {knot.symbol for knot, _ in self.factors}

    def with_factor(self, knot: PrimeKnot, sign: int) -> "KnotLabel":
        return KnotLabel.of(self.factors + ((knot, sign),))

    def flipped(self) -> "KnotLabel":
        """The label seen from the reversed edge direction."""
        return KnotLabel.of(
            (knot, sign if knot.invertible else -sign) for knot, sign in self.factors
        )


KnotLabel.EMPTY = KnotLabel(())


class LabeledEmbedding:
    """An abstract graph, a base symmetry group, and per-edge knot labels.

    The symbolic stand-in for a re-embedding obtained by tying local knots:
    the base group is the symmetry group of the unlabeled embedding, and
    `refine` computes the subgroup preserving all labels.
    """

    def __init__(self, graph: Graph, base_group: PermGroup, labels=None, orientations=None):
        if base_group.degree != graph.n:
            raise DomainError("degree_mismatch", "base group degree must equal the vertex count")
        labels = dict(labels or {})
        orientations = dict(orientations or {})
        self.graph = graph
        self.base_group = base_group
        self._labels: dict[Edge, KnotLabel] = {}
        self._orientations: dict[Edge, tuple[int, int]] = {}
        for e, label in labels.items():
            e = make_edge(*e)
            if not graph.has_edge(e):
                raise DomainError("edge_not_in_graph", f"labeled edge {e} is not a graph edge")
            if label.is_empty():
                continue
            self._labels[e] = label
        for e, (tail, head) in orientations.items():
            e = make_edge(*e)
            if make_edge(tail, head) != e:
                raise DomainError("bad_orientation", f"orientation ({tail}, {head}) does not match edge {e}")
            self._orientations[e] = (tail, head)
        for e, label in self._labels.items():
            if label.invertible and e in self._orientations:
                raise DomainError("bad_orientation", f"invertible-labeled edge {e} must not carry an orientation")
            if not label.invertible and e not in self._orientations:
                raise DomainError("missing_orientation", f"non-invertible-labeled edge {e} needs an orientation")
        for e in self._orientations:
            if e not in self._labels:
                raise DomainError("bad_orientation", f"orientation on unlabeled edge {e}")

    def label_of(self, e: Edge) -> KnotLabel:
        return self._labels.get(make_edge(*e), KnotLabel.EMPTY)

    def orientation_of(self, e: Edge) -> tuple[int, int] | None:
        return self._orientations.get(make_edge(*e))

    @property
    def labeled_edges(self) -> list[Edge]:
        return sorted(self._labels)

    def all_symbols(self) -> set[str]:
        out: set[str] = set()
        for label in self._labels.values():
            out |= label.symbols()
        return out

    def admissible(self, p: Permutation) -> bool:
        """True iff p transports every edge label onto the image edge's label."""
        if p not in self.base_group:
            raise DomainError("not_in_base_group", "permutation is not an element of the base group")
        q = p.inverse()
        candidates = set(self._labels) | {q.apply_edge(e) for e in self._labels}
        for e in candidates:
            f = p.apply_edge(e)
            label_e = self.label_of(e)
            label_f = self.label_of(f)
            if not label_e.invertible:
                tail, head = self._orientations[e]
                pushed = (p.apply(tail), p.apply(head))
                if f == e and pushed != (tail, head):
                    return False  # inverting a non-invertible label
                stored = self._orientations.get(f)
                if stored is None:
                    return False
                transported = label_e if pushed == stored else label_e.flipped()
            else:
                transported = label_e
            if transported != label_f:
                return False
        return True

    def refine(self) -> PermGroup:
        """The subgroup of the base group preserving all labels and orientations."""
        kept = [p for p in self.base_group.sorted_elements() if self.admissible(p)]
        kept_set = set(kept)
        for a, b in product(kept, repeat=2):
            if a * b not in kept_set:
                raise VerificationError("refined element set is not closed", witness=(a, b))
        return PermGroup.from_elements(self.base_group.degree, frozenset(kept))

    def inversion_conflicts(self) -> list[Permutation]:
        """Base-group elements inverting a non-invertibly-labeled edge.

        Such elements cannot preserve the embedding's own knots; they are
        excluded by refine and surfaced here rather than silently dropped.
        """
        out = []
        noninv_edges = [e for e, label in self._labels.items() if not label.invertible]
        for p in self.base_group.sorted_elements():
            for u, v in noninv_edges:
                if p.apply(u) == v and p.apply(v) == u:
                    out.append(p)
                    break
        return out

    def with_added_knots(self, h: PermGroup, picks, reverse_orientation_choice: bool = False) -> "LabeledEmbedding":
        """Add one fresh prime knot per h-orbit of picked edges.

        `reverse_orientation_choice` flips the deterministic tail choice for
        newly oriented edges; refinement results must not depend on it.
        """
        if not is_three_connected(self.graph):
            raise DomainError("not_three_connected", "knot addition requires a 3-connected graph")
        if not h.is_subgroup_of(self.base_group):
            raise DomainError("not_subgroup", "h must be a subgroup of the base group")
        refined = {p for p in self.base_group.elements if self.admissible(p)}
        bad = sorted(set(h.elements) - refined, key=lambda p: p.images)
        if bad:
            raise DomainError(
                "h_not_admissible",
                "h contains elements that do not preserve the existing labels",
                witness=bad[0].cycle_string(),
            )
        picks = [(make_edge(*e), knot) for e, knot in picks]
        for e, _ in picks:
            if not self.graph.has_edge(e):
                raise DomainError("edge_not_in_graph", f"picked edge {e} is not a graph edge")
        orbits = [h.orbit_edge(e) for e, _ in picks]
        for i, j in product(range(len(picks)), repeat=2):
            if i < j and orbits[i] == orbits[j]:
                raise DomainError("duplicate_orbit", f"picked edges {picks[i][0]} and {picks[j][0]} share an orbit")
        used = self.all_symbols()
        for _, knot in picks:
            if knot.symbol in used:
                raise DomainError("knot_reuse", f"knot {knot.symbol} already present in the labeling")
            used.add(knot.symbol)
        labels = dict(self._labels)
        orientations = dict(self._orientations)
        for (e, knot), orbit in zip(picks, orbits):
            inverted = h.inverts_edge(e)
            if knot.invertible != inverted:
                want = "invertible" if inverted else "non-invertible"
                raise DomainError(
                    "invertibility_mismatch",
                    f"edge {e} requires a {want} knot, got {knot.symbol}",
                )
            if knot.invertible:
                for f in orbit:
                    labels[f] = labels.get(f, KnotLabel.EMPTY).with_factor(knot, PLUS)
                continue
            tail, head = e if not reverse_orientation_choice else (e[1], e[0])
            for phi in h.elements:
                f = phi.apply_edge(e)
                pushed = (phi.apply(tail), phi.apply(head))
                stored = orientations.get(f)
                if stored is None:
                    orientations[f] = pushed
                    sign = PLUS
                else:
                    sign = PLUS if pushed == stored else MINUS
                current = labels.get(f, KnotLabel.EMPTY)
                if knot.symbol not in current.symbols():
                    labels[f] = current.with_factor(knot, sign)
        return LabeledEmbedding(self.graph, self.base_group, labels, orientations)
