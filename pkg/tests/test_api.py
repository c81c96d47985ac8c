from fastapi.testclient import TestClient

from loopcalc.app import app

client = TestClient(app)


def test_health():
    r = client.get("/health")
    assert r.status_code == 200
    assert r.json() == {"status": "ok"}


def test_decompose_endpoint():
    r = client.post(
        "/decompose",
        json={"spec": {"type": "four_manifold", "k": 2}, "cap": 6, "emit": ["series"]},
    )
    assert r.status_code == 200
    assert r.json() == {"series": [1, 2, 3, 4, 5, 6, 7]}


def test_decompose_default_sections():
    r = client.post("/decompose", json={"spec": {"type": "four_manifold", "k": 1}})
    assert r.status_code == 200
    got = r.json()
    assert set(got) == {"tree", "factors", "series", "ranks"}
    assert got["factors"]["circles"] == 1
    assert got["ranks"]["ranks"] == {"2": 1, "5": 1}


def test_validation_error_maps_to_400():
    r = client.post("/decompose", json={"spec": {"type": "wall", "n": 4, "k": 3}})
    assert r.status_code == 400
    assert r.json()["error"]["code"] == "excluded_case"


def test_low_cap_maps_to_400():
    r = client.post(
        "/decompose", json={"spec": {"type": "four_manifold", "k": 1}, "cap": 0}
    )
    assert r.status_code == 400
    assert r.json()["error"]["code"] == "usage"


def test_equivalent_endpoint():
    r = client.post(
        "/equivalent",
        json={
            "a": {"type": "four_manifold", "k": 4},
            "b": {"type": "four_manifold", "k": 4},
        },
    )
    assert r.status_code == 200
    assert r.json() == {"equivalent": True}


def test_equivalent_incomparable_maps_to_400():
    r = client.post(
        "/equivalent",
        json={"a": {"type": "four_manifold", "k": 1}, "b": {"type": "wall", "n": 5, "k": 2}},
    )
    assert r.status_code == 400
    assert r.json()["error"]["code"] == "usage"


def test_verify_endpoint():
    r = client.post("/verify", json={"suite": "series", "seed": 2})
    assert r.status_code == 200
    got = r.json()
    assert got["ok"] is True
    assert got["failures"] == 0
    assert got["suite"] == "series"


def test_verify_unknown_suite_maps_to_400():
    r = client.post("/verify", json={"suite": "nonsense"})
    assert r.status_code == 400
    assert r.json()["error"]["code"] == "usage"
