import asyncio

import pytest

from app.components.base.exceptions import DomainError
from app.components.combinatorics.models import TABLE_NAMES, TableRequest
from app.components.combinatorics.service import CombinatoricsService


@pytest.fixture
def service():
    return CombinatoricsService()


@pytest.mark.parametrize("name", TABLE_NAMES)
def test_every_table_builds(service, name):
    table = service.build(name, 6)
    assert len(table) > 0
    assert all(row["table"] == table.name for row in table.rows())


def test_heap_count_rows(service):
    response = asyncio.run(service.process(TableRequest(name="heap_count", max=7)))
    assert response.exact
    assert response.rows[-1] == {"table": "heap_count", "index": "7", "value": "80"}


def test_unknown_table(service):
    with pytest.raises(DomainError):
        service.build("fibonacci", 4)


def test_exact_tables_are_capped(service, lab_settings):
    with pytest.raises(DomainError):
        service.build("c_exact", lab_settings.exact_table_cap + 1)


def test_table_endpoint(client):
    response = client.get("/api/v1/tables/alt_split", params={"max": 4})
    assert response.status_code == 200
    rows = response.json()["rows"]
    assert {"table": "alt_split", "index": "4,1", "value": "3/8"} in rows


def test_table_endpoint_unknown_name(client):
    response = client.get("/api/v1/tables/nope")
    assert response.status_code == 400
    assert response.json()["detail"]["error"] == "DomainError"
