#!/usr/bin/env python3
"""Sweep the enumerated lattice corpus and tabulate per-size statistics.

Usage: python scripts/corpus_sweep.py [max_n] [limit_per_n]
"""

import sys
import time

from latlift import (
    check_finitary_embedding,
    check_liftability,
    check_m_wire_ideal_equivalence,
    enumerate_small_lattices,
)


def sweep(max_n: int, limit: int | None) -> int:
    bad = 0
    print(f"{'n':>2} {'lattices':>9} {'wires':>6} {'m-wires':>8} {'violations':>11} {'secs':>7}")
    for n in range(1, max_n + 1):
        started = time.perf_counter()
        lattices = wires = m_wires = violations = 0
        for lat in enumerate_small_lattices(n, limit=limit):
            lattices += 1
            equivalence = check_m_wire_ideal_equivalence(lat)
            liftability = check_liftability(lat)
            embedding = check_finitary_embedding(lat)
            wires += equivalence.wires_checked
            m_wires += equivalence.m_wires
            if equivalence.violations or liftability.findings or not embedding.ok:
                violations += 1
        bad += violations
        print(f"{n:>2} {lattices:>9} {wires:>6} {m_wires:>8} {violations:>11} "
              f"{time.perf_counter() - started:>7.2f}")
    print("all clean" if bad == 0 else f"{bad} lattices with violations")
    return 1 if bad else 0


if __name__ == "__main__":
    max_n = int(sys.argv[1]) if len(sys.argv) > 1 else 5
    limit = int(sys.argv[2]) if len(sys.argv) > 2 else None
    sys.exit(sweep(max_n, limit))
