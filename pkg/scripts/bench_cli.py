#!/usr/bin/env python3
"""Launcher for the lab command line (see app/cli.py)."""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent))

from app.cli import main


if __name__ == "__main__":
    sys.exit(main())
