#!/usr/bin/env python3
"""
Entry point for the packcover command line.

Usage:
    python run_packcover.py solve-lp --instance runs/triangle.json
    python run_packcover.py minsum --instance runs/triangle.json --iterations 3
    python run_packcover.py sweep --config sweep.json --out results/sweep.csv
"""

import sys
from pathlib import Path

# Add project root to path
sys.path.insert(0, str(Path(__file__).parent))

from harness.cli import main


if __name__ == "__main__":
    sys.exit(main())
