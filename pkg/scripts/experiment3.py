#!/usr/bin/env python3
"""FIM5 at u in {0.7, 0.85, 0.95}, s = c = 0.05 (thin wrapper over ``ubifim bench``)."""

import sys
from pathlib import Path

from ubifim.cli import main

if __name__ == "__main__":
    out = sys.argv[1] if len(sys.argv) > 1 else "results/experiment3.csv"
    Path(out).parent.mkdir(parents=True, exist_ok=True)
    sys.exit(main([
        "bench", "--preset", "FIM5", "--transactions", "10000", "--seed", "0",
        "--ubiquitousness", "0.7,0.85,0.95", "--supports", "0.05", "--confidence", "0.05",
        "--repeat", "3", "--out", out,
    ]))
