#!/usr/bin/env python3
"""Reconstruction experiment over seeded random downsets.

For each instance: canonical primary decomposition (union-checked), the
irreducible family, and exact reconstruction.  Prints a timing table and a
summary line.  Seeds come from STAIRCASE_SEED (base offset) so runs are
reproducible.

Usage: fuzz_reconstruction.py [count-n2] [count-n3]
"""

import os
import sys
import time

from staircase import (
    equals,
    irreducible_family,
    primary_decomposition,
    random_downset,
    reconstruct,
)


def main(argv: list[str]) -> int:
    count2 = int(argv[1]) if len(argv) > 1 else 25
    count3 = int(argv[2]) if len(argv) > 2 else 5
    base = int(os.environ.get("STAIRCASE_SEED", "0"))
    rows = []
    failures = 0
    for n, count, budget in ((2, count2, 8), (3, count3, 5)):
        for k in range(count):
            seed = base + k + (0 if n == 2 else 10_000)
            start = time.perf_counter()
            d = random_downset(seed, n, budget)
            decomposition = primary_decomposition(d)
            family = irreducible_family(d, table=decomposition.table)
            ok = equals(reconstruct(family, d), d.carrier)
            elapsed = time.perf_counter() - start
            failures += 0 if ok else 1
            rows.append((n, seed, len(d.carrier.cells), len(decomposition.components), ok, elapsed))
    print(f"{'n':>2} {'seed':>7} {'cells':>5} {'comps':>5} {'ok':>3} {'sec':>7}")
    for n, seed, cells, comps, ok, elapsed in rows:
        print(f"{n:>2} {seed:>7} {cells:>5} {comps:>5} {str(ok):>3} {elapsed:>7.2f}")
    total = sum(r[-1] for r in rows)
    print(f"total {total:.1f}s over {len(rows)} instances, failures: {failures}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main(sys.argv))
