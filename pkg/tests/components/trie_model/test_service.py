def test_predict_endpoint_two_strings(client):
    response = client.post("/api/v1/trie/predict", json={"strings": ["ab", "ac"], "trials": 4, "seed": 1})
    assert response.status_code == 200
    body = response.json()
    assert body["prediction"] == "2"
    assert body["nodes"] == 4
    assert body["reduced_nodes"] == 2
    assert body["measured_mean"] == 2.0
    assert body["relative_error"] == 0.0


def test_predict_endpoint_prediction_only(client):
    body = client.post("/api/v1/trie/predict", json={"strings": ["x"]}).json()
    assert body["prediction"] == "0"
    assert body["measured_mean"] is None


def test_predict_endpoint_rejects_duplicates(client):
    response = client.post("/api/v1/trie/predict", json={"strings": ["ab", "ab"]})
    assert response.status_code == 400
    assert response.json()["detail"]["error"] == "CorpusError"
