def test_run_endpoint(client):
    response = client.post("/api/v1/experiments/run", json={"algo": "floyd", "n": 20, "r": 5, "trials": 3})
    assert response.status_code == 200
    body = response.json()
    assert body["failures"] == 0
    assert body["points"][0]["n"] == 20
    assert body["fit"] is None


def test_run_endpoint_refuses_output(client):
    response = client.post("/api/v1/experiments/run", json={"n": 10, "r": 2, "trials": 2, "out": "x.csv"})
    assert response.status_code == 400
    assert response.json()["detail"]["error"] == "ExperimentConfigError"


def test_run_endpoint_refuses_large_work(client):
    response = client.post("/api/v1/experiments/run", json={"n": 100000, "r": 10, "trials": 100})
    assert response.status_code == 400
    assert response.json()["detail"]["details"]["limit"] == 2_000_000


def test_run_endpoint_validates_body(client):
    response = client.post("/api/v1/experiments/run", json={"n": 3, "r": 9})
    assert response.status_code == 422
