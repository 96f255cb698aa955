"""HTTP service exposing every library operation as a JSON endpoint.

Domain errors map to 400 with a machine-readable body
{"error": {"code", "message", "witness"?}}; flagged contradictions map to 500
with the same shape and code "contradiction".
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from . import schemas as sc
from .dihedral import build_dihedral_product, classify_subgroup, verify_classification
from .errors import DomainError, VerificationError
from .graphs import complete_graph
from .groups import PermGroup, enumerate_subgroups
from .perms import parse_cycles
from .realize import (
    Certificate,
    check_automorphism,
    check_group_realizable_shape,
    find_free_edge,
    prop1_witness,
    prop2_witness,
    realize_subgroup,
    subgroup_theorem_hypothesis,
)

app = FastAPI(title="knotsym", version="0.1.0")


def _error_body(code: str, message: str, witness=None) -> dict:
    err: dict = {"code": code, "message": message}
    if witness is not None:
        err["witness"] = str(witness)
    return {"error": err}


@app.exception_handler(DomainError)
async def _domain_error(_: Request, exc: DomainError):
    return JSONResponse(status_code=400, content=_error_body(exc.code, exc.message, exc.witness))


@app.exception_handler(VerificationError)
async def _verification_error(_: Request, exc: VerificationError):
    return JSONResponse(status_code=500, content=_error_body("contradiction", exc.message, exc.witness))


@app.post("/check-automorphism", response_model=sc.CheckAutomorphismResponse)
def post_check_automorphism(req: sc.CheckAutomorphismRequest):
    p = parse_cycles(req.perm, req.n) if req.n >= 1 else None
    if p is None:
        raise DomainError("bad_degree", "n must be at least 1")
    v = check_automorphism(req.n, p)
    return sc.CheckAutomorphismResponse(
        realizable=v.realizable,
        condition=v.condition,
        m=v.m,
        cycle_lengths=[[length, count] for length, count in v.cycles.lengths],
        fixed_points=v.cycles.fixed_points,
        identity=v.is_identity,
    )


@app.post("/classify", response_model=sc.ClassifyResponse)
def post_classify(req: sc.ClassifyRequest):
    dp = build_dihedral_product(req.m)
    g = sc.group_from_json(req.gens, 2 * req.m)
    cls = classify_subgroup(dp, g)
    return sc.ClassifyResponse(
        family=cls.family.value, r=cls.r, s=cls.s, order=cls.order, swapped_factors=cls.swapped_factors
    )


@app.post("/shape", response_model=sc.ShapeResponse)
def post_shape(req: sc.ShapeRequest):
    g = sc.group_from_json(req.gens, req.n)
    verdict = check_group_realizable_shape(g)
    return sc.ShapeResponse(realizable_shape=verdict.realizable_shape, family=verdict.family)


def certificate_to_response(cert: Certificate) -> sc.CertificateResponse:
    edges = []
    for e, knot in cert.picks:
        orbit = sorted(cert.target.orbit_edge(e))
        edges.append(
            sc.CertificateEdge(
                edge=sc.edge_to_json(e),
                knot=knot.symbol,
                invertible=knot.invertible,
                orbit=[sc.edge_to_json(f) for f in orbit],
            )
        )
    return sc.CertificateResponse(
        ambient=sc.group_to_json(cert.ambient),
        target=sc.group_to_json(cert.target),
        edges=edges,
        verified=cert.verified,
        refine_order=cert.refined.order,
        notes=list(cert.notes),
    )


@app.post("/realize", response_model=sc.CertificateResponse)
def post_realize(req: sc.RealizeRequest):
    graph = sc.graph_from_json(req.n, req.graph_edges)
    g = sc.group_from_json(req.ambient_gens, req.n)
    h = sc.group_from_json(req.target_gens, req.n)
    alphabet = sc.alphabet_from_json(req.alphabet)
    cert = realize_subgroup(g, h, graph, alphabet=alphabet, max_edge_set=req.max_edge_set)
    return certificate_to_response(cert)


@app.post("/orbits", response_model=sc.OrbitsResponse)
def post_orbits(req: sc.OrbitsRequest):
    g = sc.group_from_json(req.gens, req.n)
    if (req.point is None) == (req.edge is None):
        raise DomainError("bad_request", "provide exactly one of point or edge")
    if req.point is not None:
        if not 1 <= req.point <= req.n:
            raise DomainError("point_out_of_range", f"point {req.point} outside 1..{req.n}")
        orbit = sorted(g.orbit_point(req.point - 1))
        return sc.OrbitsResponse(orbit_points=[x + 1 for x in orbit])
    e = sc.edge_from_json(req.edge, req.n)
    orbit = sorted(g.orbit_edge(e))
    return sc.OrbitsResponse(orbit_edges=[sc.edge_to_json(f) for f in orbit])


@app.post("/stabilizer", response_model=sc.StabilizerResponse)
def post_stabilizer(req: sc.StabilizerRequest):
    g = sc.group_from_json(req.gens, req.n)
    stab = g.edge_pointwise_stabilizer(sc.edge_from_json(req.edge, req.n))
    return sc.StabilizerResponse(
        order=stab.order, elements=[p.cycle_string() for p in stab.sorted_elements()]
    )


@app.post("/subgroups", response_model=sc.SubgroupsResponse)
def post_subgroups(req: sc.SubgroupsRequest):
    g = sc.group_from_json(req.gens, req.n)
    subs = enumerate_subgroups(g)
    return sc.SubgroupsResponse(
        count=len(subs),
        subgroups=[
            sc.SubgroupEntry(
                order=s.order, generators=[p.cycle_string() for p in s.small_generating_set()]
            )
            for s in subs
        ],
    )


@app.post("/verify-lemma2", response_model=sc.VerifyLemma2Response)
def post_verify_lemma2(req: sc.VerifyLemma2Request):
    dp = build_dihedral_product(req.m)
    report = verify_classification(dp)
    return sc.VerifyLemma2Response(
        m=report.m,
        subgroup_count=report.subgroup_count,
        census=dict(report.census),
        ok=report.ok,
        mismatches=list(report.mismatches),
    )


@app.post("/hypothesis", response_model=sc.HypothesisResponse)
def post_hypothesis(req: sc.HypothesisRequest):
    graph = sc.graph_from_json(req.n, req.graph_edges)
    g = sc.group_from_json(req.ambient_gens, req.n)
    h = sc.group_from_json(req.target_gens, req.n)
    edges = [sc.edge_from_json(e, req.n) for e in req.edges]
    result = subgroup_theorem_hypothesis(g, h, graph, edges)
    return sc.HypothesisResponse(
        holds=result.holds,
        witness=result.witness.cycle_string() if result.witness else None,
    )


@app.post("/free-edge", response_model=sc.FreeEdgeResponse)
def post_free_edge(req: sc.FreeEdgeRequest):
    graph = sc.graph_from_json(req.n, req.graph_edges)
    g = sc.group_from_json(req.gens, req.n)
    e = find_free_edge(g, graph)
    return sc.FreeEdgeResponse(edge=sc.edge_to_json(e) if e else None)


@app.post("/prop1", response_model=sc.WitnessEdgeResponse)
def post_prop1(req: sc.Prop1Request):
    alpha = parse_cycles(req.alpha, req.n)
    beta = parse_cycles(req.beta, req.n) if req.beta else None
    gens = [alpha] + ([beta] if beta else [])
    if req.gens:
        gens += [parse_cycles(t, req.n) for t in req.gens]
    g = PermGroup.generate(gens, degree=req.n)
    e = prop1_witness(g, alpha, complete_graph(req.n), beta=beta)
    return sc.WitnessEdgeResponse(
        edge=sc.edge_to_json(e), stabilizer_order=g.edge_pointwise_stabilizer(e).order
    )


@app.post("/prop2", response_model=sc.WitnessEdgeResponse)
def post_prop2(req: sc.Prop2Request):
    alpha = parse_cycles(req.alpha, req.n)
    beta = parse_cycles(req.beta, req.n)
    gens = [alpha, beta]
    if req.gens:
        gens += [parse_cycles(t, req.n) for t in req.gens]
    g = PermGroup.generate(gens, degree=req.n)
    e = prop2_witness(g, alpha, beta, complete_graph(req.n))
    return sc.WitnessEdgeResponse(
        edge=sc.edge_to_json(e), stabilizer_order=g.edge_pointwise_stabilizer(e).order
    )


@app.post("/refine", response_model=sc.RefineResponse)
def post_refine(req: sc.RefineRequest):
    graph = sc.graph_from_json(req.n, req.graph_edges)
    g = sc.group_from_json(req.gens, req.n)
    emb = sc.embedding_from_json(graph, g, req.labels)
    refined = emb.refine()
    return sc.RefineResponse(
        order=refined.order,
        elements=[p.cycle_string() for p in refined.sorted_elements()],
        inversion_conflicts=[p.cycle_string() for p in emb.inversion_conflicts()],
    )
