"""Pydantic request/response models and 1-indexed JSON converters.

All textual and JSON interfaces are 1-indexed: vertices are 1..n, edges are
two-element lists, permutations are cycle strings.  The library itself is
0-indexed; conversion happens here and only here.
"""

from __future__ import annotations

from pydantic import BaseModel, Field

from .errors import DomainError
from .graphs import Graph, complete_graph
from .groups import PermGroup
from .labels import KnotLabel, LabeledEmbedding, PrimeKnot
from .perms import Edge, Permutation, parse_cycles


def edge_to_json(e: Edge) -> list[int]:
    return [e[0] + 1, e[1] + 1]


def edge_from_json(pair: list[int], n: int) -> Edge:
    if len(pair) != 2:
        raise DomainError("invalid_edge", f"an edge is a two-element list, got {pair}")
    u, v = pair
    if not (1 <= u <= n and 1 <= v <= n):
        raise DomainError("invalid_edge", f"edge {pair} outside 1..{n}")
    if u == v:
        raise DomainError("invalid_edge", f"edge endpoints must be distinct, got {pair}")
    return (min(u, v) - 1, max(u, v) - 1)


def group_from_json(gens: list[str], n: int) -> PermGroup:
    return PermGroup.generate([parse_cycles(text, n) for text in gens], degree=n)


def group_to_json(g: PermGroup) -> dict:
    return {
        "degree": g.degree,
        "order": g.order,
        "generators": [p.cycle_string() for p in g.generators],
    }


def graph_from_json(n: int, edges: list[list[int]] | None) -> Graph:
    if edges is None:
        return complete_graph(n)
    return Graph.of(n, [edge_from_json(e, n) for e in edges])


class FactorIn(BaseModel):
    symbol: str
    invertible: bool
    sign: int = 1


class EdgeLabelIn(BaseModel):
    edge: list[int]
    factors: list[FactorIn]
    orientation: list[int] | None = None


class CheckAutomorphismRequest(BaseModel):
    n: int
    perm: str


class CheckAutomorphismResponse(BaseModel):
    realizable: bool
    condition: int | None
    m: int
    cycle_lengths: list[list[int]]
    fixed_points: int
    identity: bool


class ClassifyRequest(BaseModel):
    m: int
    gens: list[str]


class ClassifyResponse(BaseModel):
    family: str
    r: int | None
    s: int | None
    order: int
    swapped_factors: bool


class ShapeRequest(BaseModel):
    n: int
    gens: list[str]


class ShapeResponse(BaseModel):
    realizable_shape: bool
    family: str | None


class RealizeRequest(BaseModel):
    n: int
    graph_edges: list[list[int]] | None = None
    ambient_gens: list[str]
    target_gens: list[str] = Field(default_factory=list)
    alphabet: list[FactorIn] | None = None
    max_edge_set: int = 3


class CertificateEdge(BaseModel):
    edge: list[int]
    knot: str
    invertible: bool
    orbit: list[list[int]]


class CertificateResponse(BaseModel):
    ambient: dict
    target: dict
    edges: list[CertificateEdge]
    verified: bool
    refine_order: int
    notes: list[str]


class OrbitsRequest(BaseModel):
    n: int
    gens: list[str]
    point: int | None = None
    edge: list[int] | None = None


class OrbitsResponse(BaseModel):
    orbit_points: list[int] | None = None
    orbit_edges: list[list[int]] | None = None


class StabilizerRequest(BaseModel):
    n: int
    gens: list[str]
    edge: list[int]


class StabilizerResponse(BaseModel):
    order: int
    elements: list[str]


class SubgroupsRequest(BaseModel):
    n: int
    gens: list[str]


class SubgroupEntry(BaseModel):
    order: int
    generators: list[str]


class SubgroupsResponse(BaseModel):
    count: int
    subgroups: list[SubgroupEntry]


class VerifyLemma2Request(BaseModel):
    m: int


class VerifyLemma2Response(BaseModel):
    m: int
    subgroup_count: int
    census: dict[str, int]
    ok: bool
    mismatches: list[str]


class HypothesisRequest(BaseModel):
    n: int
    graph_edges: list[list[int]] | None = None
    ambient_gens: list[str]
    target_gens: list[str] = Field(default_factory=list)
    edges: list[list[int]]


class HypothesisResponse(BaseModel):
    holds: bool
    witness: str | None


class FreeEdgeRequest(BaseModel):
    n: int
    graph_edges: list[list[int]] | None = None
    gens: list[str]


class FreeEdgeResponse(BaseModel):
    edge: list[int] | None


class Prop1Request(BaseModel):
    n: int
    alpha: str
    beta: str | None = None
    gens: list[str] | None = None


class Prop2Request(BaseModel):
    n: int
    alpha: str
    beta: str
    gens: list[str] | None = None


class WitnessEdgeResponse(BaseModel):
    edge: list[int]
    stabilizer_order: int


class RefineRequest(BaseModel):
    n: int
    graph_edges: list[list[int]] | None = None
    gens: list[str]
    labels: list[EdgeLabelIn] = Field(default_factory=list)


class RefineResponse(BaseModel):
    order: int
    elements: list[str]
    inversion_conflicts: list[str]


def alphabet_from_json(entries: list[FactorIn] | None) -> tuple[PrimeKnot, ...] | None:
    if entries is None:
        return None
    return tuple(PrimeKnot(f.symbol, f.invertible) for f in entries)


def embedding_from_json(
    graph: Graph, base_group: PermGroup, labels: list[EdgeLabelIn]
) -> LabeledEmbedding:
    label_map = {}
    orient_map = {}
    for item in labels:
        e = edge_from_json(item.edge, graph.n)
        label_map[e] = KnotLabel.of(
            (PrimeKnot(f.symbol, f.invertible), f.sign) for f in item.factors
        )
        if item.orientation is not None:
            tail, head = item.orientation
            if not (1 <= tail <= graph.n and 1 <= head <= graph.n):
                raise DomainError("bad_orientation", f"orientation {item.orientation} outside 1..{graph.n}")
            orient_map[e] = (tail - 1, head - 1)
    return LabeledEmbedding(graph, base_group, label_map, orient_map)
