#!/usr/bin/env python3
"""Re-run the bundled verification experiments end to end through the CLI.

Each run is paired with the exit code it must produce: negative verdicts
(the broken fixture, the d = -17 division-closure counterexample) are
expected outcomes here, not failures of the reproduction.
"""

import sys
from pathlib import Path

from latlift.cli import main

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

RUNS = [
    (["check-lattice", str(FIXTURES / "l6.json")], 0),
    (["check-lattice", str(FIXTURES / "two.json")], 0),
    (["check-lattice", str(FIXTURES / "l6_broken.json")], 1),
    (["lift", str(FIXTURES / "l6.json"), "--wire", "0,a,b,c,1"], 0),
    (["lift", str(FIXTURES / "l6.json"), "--m-wires-only"], 0),
    (["lift", str(FIXTURES / "two.json"), "--all-wires"], 0),
    (["corpus", "--max-n", "4"], 0),
    (["quad", "division-closure", "--d", "-17", "--bound", "50"], 1),
    (["quad", "division-closure", "--d", "-5", "--bound", "10000"], 0),
    (["quad", "verdict", "--d", "-17", "--bound", "50"], 1),
    (["quad", "verdict", "--d", "-5", "--bound", "10000"], 0),
    (["quad", "s-wire", "--d", "-5", "--prime-bound", "200", "--search-bound", "100000"], 0),
    (["quad", "s-wire", "--d", "-17", "--prime-bound", "200", "--search-bound", "100000"], 0),
]


def run_all() -> int:
    failures = 0
    for argv, expected in RUNS:
        print(f"\n$ latlift {' '.join(argv)}")
        code = main(list(argv))
        if code != expected:
            print(f"!! expected exit {expected}, got {code}")
            failures += 1
    print(f"\n{len(RUNS) - failures}/{len(RUNS)} runs matched their expected exit codes")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(run_all())
