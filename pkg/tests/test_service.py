import warnings

import pytest

with warnings.catch_warnings():
    warnings.simplefilter("ignore")
    from fastapi.testclient import TestClient

from knotsym.service import app


@pytest.fixture(scope="module")
def client():
    return TestClient(app, raise_server_exceptions=False)


def test_check_automorphism_endpoint(client):
    resp = client.post("/check-automorphism", json={"n": 7, "perm": "(1 2 3 4 5 6 7)"})
    assert resp.status_code == 200
    body = resp.json()
    assert body["realizable"] is True and body["condition"] == 3
    assert body["cycle_lengths"] == [[7, 1]] and body["fixed_points"] == 0


def test_domain_error_shape(client):
    resp = client.post("/check-automorphism", json={"n": 6, "perm": "(1 2)"})
    assert resp.status_code == 400
    err = resp.json()["error"]
    assert err["code"] == "n_too_small" and "message" in err


def test_classify_endpoint(client):
    resp = client.post("/classify", json={"m": 3, "gens": ["(1 2 3)(4 5 6)"]})
    assert resp.status_code == 200
    assert resp.json() == {"family": "Zr", "r": 3, "s": None, "order": 3, "swapped_factors": False}
    resp = client.post("/classify", json={"m": 4, "gens": []})
    assert resp.status_code == 400


def test_realize_endpoint_certificate_format(client):
    resp = client.post(
        "/realize",
        json={"n": 7, "ambient_gens": ["(1 2 3 4 5 6 7)"], "target_gens": ["(1 2 3 4 5 6 7)"]},
    )
    assert resp.status_code == 200
    body = resp.json()
    assert body["verified"] is True and body["refine_order"] == 7
    assert set(body["edges"][0]) == {"edge", "knot", "invertible", "orbit"}
    assert len(body["edges"][0]["orbit"]) == 7
    assert body["ambient"]["order"] == 7 and body["target"]["order"] == 7
    assert any("ambient group" in note for note in body["notes"])


def test_realize_not_subgroup_error(client):
    resp = client.post(
        "/realize", json={"n": 7, "ambient_gens": ["(1 2 3 4 5 6 7)"], "target_gens": ["(1 2)"]}
    )
    assert resp.status_code == 400
    assert resp.json()["error"]["code"] == "not_subgroup"


def test_orbits_endpoint(client):
    resp = client.post("/orbits", json={"n": 6, "gens": ["(1 2 3)"], "point": 1})
    assert resp.json()["orbit_points"] == [1, 2, 3]
    resp = client.post("/orbits", json={"n": 6, "gens": ["(1 2 3)"], "edge": [4, 5]})
    assert resp.json()["orbit_edges"] == [[4, 5]]
    resp = client.post("/orbits", json={"n": 6, "gens": ["(1 2 3)"]})
    assert resp.status_code == 400


def test_stabilizer_endpoint(client):
    resp = client.post("/stabilizer", json={"n": 7, "gens": ["(3 4)"], "edge": [1, 2]})
    assert resp.json() == {"order": 2, "elements": ["()", "(3 4)"]}


def test_subgroups_endpoint(client):
    resp = client.post("/subgroups", json={"n": 3, "gens": ["(1 2 3)", "(1 2)"]})
    body = resp.json()
    assert body["count"] == 6
    assert body["subgroups"][0] == {"order": 1, "generators": []}


def test_verify_lemma2_endpoint(client):
    resp = client.post("/verify-lemma2", json={"m": 3})
    body = resp.json()
    assert body["ok"] is True and body["subgroup_count"] == 60
    assert body["census"]["DrxDs"] == 1


def test_hypothesis_endpoint(client):
    resp = client.post(
        "/hypothesis", json={"n": 4, "ambient_gens": ["(3 4)"], "edges": [[1, 2]]}
    )
    assert resp.json() == {"holds": False, "witness": "(3 4)"}


def test_free_edge_endpoint(client):
    resp = client.post("/free-edge", json={"n": 7, "gens": ["(3 4)"]})
    assert resp.json()["edge"] == [1, 3]


def test_prop_endpoints(client):
    resp = client.post("/prop1", json={"n": 7, "alpha": "(1 2 3 4 5 6 7)"})
    assert resp.json() == {"edge": [1, 2], "stabilizer_order": 1}
    resp = client.post(
        "/prop2",
        json={"n": 9, "alpha": "(1 2 3)(4 5 6)(7 8 9)", "beta": "(1 4 7)(2 5 8)(3 6 9)"},
    )
    assert resp.json() == {"edge": [1, 5], "stabilizer_order": 1}


def test_refine_endpoint_triangle(client):
    label = {"symbol": "8_17", "invertible": False, "sign": 1}
    resp = client.post(
        "/refine",
        json={
            "n": 3,
            "gens": ["(1 2 3)", "(2 3)"],
            "labels": [
                {"edge": [1, 2], "factors": [label], "orientation": [1, 2]},
                {"edge": [2, 3], "factors": [label], "orientation": [2, 3]},
                {"edge": [1, 3], "factors": [label], "orientation": [3, 1]},
            ],
        },
    )
    body = resp.json()
    assert body["order"] == 3
    assert body["elements"] == ["()", "(1 2 3)", "(1 3 2)"]
    assert len(body["inversion_conflicts"]) == 3


def test_shape_endpoint(client):
    resp = client.post("/shape", json={"n": 6, "gens": ["(1 2 3 4 5 6)"]})
    assert resp.json() == {"realizable_shape": True, "family": "cyclic"}
