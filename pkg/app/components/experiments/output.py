"""CSV emission. Identical rows give identical bytes."""

from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

import pandas as pd

from app.components.base.exceptions import OutputError


def write_csv(
    rows: Sequence[Dict[str, Any]],
    path: Path,
    columns: Optional[List[str]] = None,
    decimals: int = 6,
) -> Path:
    path = Path(path)
    frame = pd.DataFrame(list(rows), columns=columns)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        frame.to_csv(path, index=False, float_format=f"%.{decimals}f", lineterminator="\n")
    except OSError as e:
        raise OutputError(f"Cannot write {path}: {e.strerror}", component="experiments", details={"path": str(path)})
    return path


def summary_path(out: Path) -> Path:
    """`results.csv` -> `results_summary.csv`."""
    out = Path(out)
    return out.with_name(f"{out.stem}_summary{out.suffix or '.csv'}")
