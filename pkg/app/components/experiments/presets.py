from functools import lru_cache
from pathlib import Path
from typing import Any, Dict

import yaml

from app.components.base.exceptions import ExperimentConfigError


@lru_cache()
def load_presets(path: str) -> Dict[str, Dict[str, Any]]:
    try:
        with open(path, "r") as f:
            data = yaml.safe_load(f) or {}
    except OSError as e:
        raise ExperimentConfigError(f"Cannot read presets: {e.strerror}", component="experiments", details={"path": path})
    return data.get("presets", {})


def get_preset(name: str, path: str) -> Dict[str, Any]:
    presets = load_presets(str(Path(path)))
    if name not in presets:
        raise ExperimentConfigError(
            f"Unknown preset {name!r}",
            component="experiments",
            details={"known": sorted(presets)},
        )
    return dict(presets[name])
