# Smith normal forms, cokernels and kernels over the integers.
#
# Everything is exact: entries are Python ints, so nothing overflows no
# matter how large the intermediate values get.

from toricg0 import IntMatrix, cokernel, determinant, kernel_basis, smith_normal_form

A = IntMatrix.from_rows([[2, 4], [6, 8]])
s = smith_normal_form(A)
print("A =\n", A, sep="")
print("U A V = D with D =\n", s.D, sep="")
print("invariant factors:", s.invariant_factors)
assert s.U @ A @ s.V == s.D

# The product of the invariant factors of a square matrix is |det|.
print("|det A| =", abs(determinant(A)))

# Cokernels are read as Z^rows / (column span). The divisor map of the cone
# spanned by (1,0,0), (1,2,0), (1,2,4) has those vectors as its rows.
alpha = IntMatrix.from_rows([[1, 0, 0], [1, 2, 0], [1, 2, 4]])
print("Z^3 / image =", cokernel(alpha))

# Integer kernels come back as lattice bases.
print("kernel of [2 4]:", kernel_basis([[2, 4]]).columns())

# Large entries are fine.
B = IntMatrix.from_rows([[2**70 + 3, 5**40], [7**33, 11**25 + 1]])
print("invariant factors of a big matrix:", smith_normal_form(B).invariant_factors)
