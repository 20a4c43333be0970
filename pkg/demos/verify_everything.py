"""Run every verification layer in one sitting: reference tables, polynomial
relations, span structure, and the dimension formula.

Run after installing the package:  python3 demos/verify_everything.py
(takes on the order of ten seconds)
"""
import time

from qsiegel.cli import verify_tables
from qsiegel.dims import dimension_report
from qsiegel.ring import (GeneratorSet, verify_chi5_square_relations,
                          verify_polynomial_relations, verify_structure)

t0 = time.time()
PREC = 12

checked, failures = verify_tables(PREC, None)
print("[tables]     %d tabulated values, %d mismatches" % (checked, len(failures)))

gens = GeneratorSet.build(PREC)
print("[build]      all generators to grade %d  (%.1fs)" % (PREC, time.time() - t0))

for rep in verify_chi5_square_relations(gens) + verify_polynomial_relations(gens):
    print("[relations]  %-26s %s" % (rep.name, "ok" if rep.ok else "FAIL"))

structure = verify_structure(20, gens)
print("[structure]  weights 0..20 ranks vs dimensions: %s"
      % ("all equal" if all(r.ok for r in structure.rows) else "MISMATCH"))
for name, (got, want) in sorted(structure.augmentations.items()):
    print("[structure]  %-22s rank %2d / %2d" % (name, got, want))

dims = dimension_report(100)
bad = [row for row in dims.rows if not row[4]]
print("[dims]       dimension vs generating function, k <= 100: %d mismatches"
      % len(bad))

ok = (not failures and structure.ok and dims.ok)
print("\neverything verified" if ok else "\nTHERE WERE FAILURES")
print("total %.1fs" % (time.time() - t0))
