#!/usr/bin/env python3
"""
poset-scaffolds - Main Application Entry Point

Runs the command-line front end: scaffolds, limits, colimits, generalized
ranks, first Betti supports and benchmarks.
"""

import sys
from pathlib import Path

# Add the src directory to the Python path
sys.path.append(str(Path(__file__).parent / "src"))

from poset_scaffolds.cli.main import main  # noqa: E402

if __name__ == "__main__":
    sys.exit(main())
