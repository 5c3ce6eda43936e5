import pytest

from app.components.base.exceptions import ExperimentConfigError
from app.components.experiments.models import ALGORITHMS, build_config


def test_defaults():
    cfg = build_config(n=10, r=3)
    assert cfg.algo == "modified"
    assert cfg.red_offset(3) == 7
    assert cfg.jobs == 1


def test_explicit_offset():
    assert build_config(n=10, r=3, lo=2).red_offset(3) == 2


@pytest.mark.parametrize(
    "values",
    [
        {"n": 3, "r": 5},
        {"n": 10, "r": 2, "algo": "bogosort"},
        {"n": 10, "r": 4, "lo": 8},
        {"n": 10, "r": 2, "r_sweep": [2, 11]},
        {"n": 10, "r": 2, "trials": 0},
        {"n": -1, "r": 0},
    ],
)
def test_invalid_configs(values):
    with pytest.raises(ExperimentConfigError) as info:
        build_config(**values)
    assert info.value.details["errors"]


def test_algorithm_names():
    assert ALGORITHMS == ("classic", "floyd", "modified", "binomial", "quicksort-strings")
