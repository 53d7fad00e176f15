"""
Kunneth cross terms and the self-checks
=======================================

Cross terms are K-theory of tensor products.  The oracles in
``flipk.verify`` recompute tensor and Tor from presentations.
"""

from flipk import KData, cyclic, kunneth, tensor, tor
from flipk.verify import oracle_tensor, oracle_tor, selfcheck

z2, z3, z6 = cyclic(2), cyclic(3), cyclic(6)
print(kunneth(KData(z2), KData(z2)))       # Tor lands in degree 1
print(kunneth(KData(z3), KData(k1=z6)))

print(tensor(cyclic(4), z6), oracle_tensor(cyclic(4), z6))
print(tor(cyclic(4), z6), oracle_tor(cyclic(4), z6))

for r in selfcheck(max_n=200, seed=0):
    print(r.summary())
