"""
Elementary divisors of the flip matrix
======================================

Both torsion building blocks reduce to the cokernel of one 2x2 integer
matrix.  Its Smith form is (n, n) for odd n and (n/2, 2n) for even n.
"""

from flipk import cokernel, elementary_divisors, flip_matrix, snf

# the matrix itself, for a few values of n
for n in range(1, 7):
    print(n, flip_matrix(n).tolist())

# Smith normal form with the transformation matrices
res = snf(flip_matrix(6))
print("u =", res.u.tolist())
print("s =", res.s.tolist())
print("v =", res.v.tolist())
assert res.u @ flip_matrix(6) @ res.v == res.s

# the divisor pattern, checked far out
for n in (1, 2, 3, 4, 99, 100, 10**12 + 1, 10**12):
    print(n, elementary_divisors(flip_matrix(n)))

# the cokernel as an abelian group in invariant-factor form
for n in range(1, 9):
    print(n, cokernel(flip_matrix(n)).group)
