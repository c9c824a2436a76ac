"""Hochschild and cyclic cohomology of truncated polynomial algebras, split by Hodge index.

Run: python demos/02_hodge_splitting.py
"""
from infty.cycliccomplex import cyclic_window
from infty.fixtures import dual_numbers, field, truncated_polynomial
from infty.hodge import decompose_cyclic, decompose_hochschild, harrison_I_behaviour
from infty.homcomplex import harrison_window, hochschild_b

S = dual_numbers()
H = hochschild_b(S, range(0, 5), cap=6)
print("HH^n(Q[x]/x^2, dual) for n = 0..4:", [H.cohomology(n) for n in range(0, 5)])

T = decompose_hochschild(S, range(0, 5), cap=6)
print("block diagonal:", T.block_diagonal)
for n in range(0, 5):
    print("  n =", n, "summands", [T.dim(n, j) for j in range(0, n + 2)], "total", T.totals[n])

# the j = 1 summand is Harrison cohomology
R = harrison_window(S, range(0, 5), cap=6)
print("Harrison:", [R.cohomology(n) for n in range(0, 5)],
      "j=1 row:", [T.dim(n, 1) for n in range(0, 5)])

# cyclic cohomology of x^3 and its splitting
S3 = truncated_polynomial(3)
C = cyclic_window(S3, range(0, 5), cap=7)
print("HC^n(Q[x]/x^3) for n = 0..4:", [C.cohomology(n) for n in range(0, 5)])
D = decompose_cyclic(S3, range(0, 5), cap=7)
for n in range(0, 5):
    print("  n =", n, "cyclic summands", [D.dim(n, j) for j in range(0, n + 2)])

# the field: cyclic Harrison is one-dimensional in a single spot
F = decompose_cyclic(field(), range(0, 5), cap=7)
print("field, cyclic j = 1 row:", [F.dim(n, 1) for n in range(0, 5)])

# how the periodicity map I behaves on the Harrison part for x^3
rep = harrison_I_behaviour(S3, range(0, 6), cap=8)
print("I on Harrison summands:", rep)
