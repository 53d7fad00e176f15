"""
Crossed products of general inputs
==================================

Any finitely generated K-theory is a sum of building blocks.  The answer
collects one diagonal term per block and one Kunneth cross term per pair.
"""

from flipk import KData, assemble, canonicalize, decompose, flip_crossed

A = KData(canonicalize(1, [2]), canonicalize(0, [6]))
report = flip_crossed(A)

print("input:", A)
print("blocks:", [str(b) for b in report.blocks])
for c in report.contributions:
    print(f"  {c.label:40s} {c.kdata}")
print("total:", report.total)

# dual action on the total, in its canonical generators
for d in (0, 1):
    print(f"K{d} action:", report.total_dual_action[d].matrix.tolist())

# splitting Z/6 into Z/2 + Z/3 gives different blocks, same answer
k = KData(canonicalize(0, [6]))
print(flip_crossed(k).total, "==", assemble(decompose(k, primary=True)).total)
