from fastapi.testclient import TestClient

from charvar.service import app

from test_problems import GENUS2, HANDLEBODY
from test_reports import Z2_TRIVIAL

client = TestClient(app)


def test_health():
    response = client.get("/health")
    assert response.status_code == 200
    assert response.json() == {"status": "ok"}


def test_analyze_endpoint():
    response = client.post("/analyze", json={"problem": GENUS2})
    assert response.status_code == 200
    body = response.json()
    assert body["z1_dim"] == 9
    assert body["b1_dim"] == 3
    assert body["h1_dim"] == 6
    assert body["burnside_verdict"] == "irreducible"
    assert body["scheme_smooth_dimension_level"] is True
    assert "z1_dim = 9" in body["report"]
    assert "z1_dim = 9" in body["machine"].splitlines()


def test_analyze_word_cap():
    response = client.post("/analyze", json={"problem": GENUS2, "word_cap": 2})
    assert response.status_code == 200
    assert response.json()["word_cap"] == 2


def test_analyze_rejects_bad_word_cap():
    response = client.post("/analyze", json={"problem": GENUS2, "word_cap": 99})
    assert response.status_code == 422  # request model validation


def test_parse_error_detail():
    response = client.post("/analyze",
                           json={"problem": GENUS2.replace("[0,1]]", "[0,1]", 1)})
    assert response.status_code == 400
    detail = response.json()["detail"]
    assert detail["kind"] == "parse"
    assert detail["line"] == 10
    assert detail["col"] >= 6


def test_validation_error_detail():
    bad = GENUS2.replace("a1 = [[1,1],[0,1]]", "a1 = [[2,0],[0,1]]")
    response = client.post("/analyze", json={"problem": bad})
    assert response.status_code == 400
    detail = response.json()["detail"]
    assert detail["kind"] == "validation"
    assert any("member" in v for v in detail["violations"])


def test_scheme_endpoint():
    response = client.post("/scheme", json={"problem": Z2_TRIVIAL,
                                            "include_equations": True})
    assert response.status_code == 200
    body = response.json()
    assert body["jacobian_rank"] == 2
    assert body["tangent_dim"] == 6
    assert body["cross_check_pass"] is True
    assert "x1*x4 - x2*x3 - 1 = 0" in body["equations"]
    assert "x1*x4 - x2*x3 - 1 = 0" in body["report"]


def test_scheme_unsupported_detail():
    so = Z2_TRIVIAL.replace("family = SL 2", "family = SO 2")
    response = client.post("/scheme", json={"problem": so})
    assert response.status_code == 400
    assert response.json()["detail"]["kind"] == "unsupported"


def test_lagrangian_endpoint():
    response = client.post("/lagrangian", json={"problem": HANDLEBODY})
    assert response.status_code == 200
    body = response.json()
    assert body["image_dim"] == 3
    assert body["half_h1"] == 3
    assert body["lagrangian"] is True


def test_omega_endpoint():
    response = client.post("/omega", json={"problem": GENUS2})
    assert response.status_code == 200
    body = response.json()
    assert body["omega_rank"] == 6
    assert body["antisymmetric"] is True
    assert len(body["rows"]) == 6


def test_responses_deterministic():
    first = client.post("/omega", json={"problem": GENUS2}).json()
    second = client.post("/omega", json={"problem": GENUS2}).json()
    assert first == second
