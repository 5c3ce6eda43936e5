import pytest

from app.components.base.exceptions import DomainError
from app.components.uniformity_lab.census import census_binomial_popmax
from app.components.uniformity_lab.models import VerifyRequest
from app.components.uniformity_lab.service import UniformityLabService


@pytest.fixture
def service():
    return UniformityLabService()


@pytest.mark.parametrize(
    "check,n",
    [
        ("buildheap-uniform", 4),
        ("binomial-build-uniform", 4),
        ("binomial-pop-uniform", 4),
        ("preservation", 32),
        ("normalization", 30),
        ("crossing", 12),
        ("c-monotone", 60),
        ("binomial-ratio", 32),
    ],
)
def test_exact_checks_pass(service, check, n):
    response = service.run(VerifyRequest(check=check, n=n))
    assert response.passed, response.summary
    assert response.check == check


def test_buildheap_rows_carry_counts(service):
    response = service.run(VerifyRequest(check="buildheap-uniform", n=3))
    assert response.summary["heap_count"] == 2
    assert response.summary["multiplicity"] == 3
    assert len(response.rows) == 2


def test_pop_uniformity_is_informational(service):
    response = service.run(VerifyRequest(check="binomial-pop-uniform", n=5))
    assert response.passed
    assert response.summary["informational"] is True
    assert response.summary["preserves_uniformity"] == census_binomial_popmax(5).preserves_uniformity


def test_alt_split_runs_with_trials(service):
    response = service.run(VerifyRequest(check="alt-split", n=6, trials=5000, seed=9))
    assert response.summary["trials"] == 5000
    assert response.passed


def test_alt_split_needs_two(service):
    with pytest.raises(DomainError):
        service.run(VerifyRequest(check="alt-split", n=1))


def test_unknown_check(service):
    with pytest.raises(DomainError) as info:
        service.run(VerifyRequest(check="nonsense", n=3))
    assert "preservation" in info.value.details["known"]


def test_verify_endpoint(client):
    response = client.post("/api/v1/verify/preservation", params={"n": 5})
    assert response.status_code == 200
    assert response.json()["passed"] is True


def test_verify_endpoint_unknown(client):
    response = client.post("/api/v1/verify/bogus", params={"n": 5})
    assert response.status_code == 400
    assert response.json()["detail"]["error"] == "DomainError"
