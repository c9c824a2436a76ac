"""The shuffle operator s on words and its eigenspace projectors.

Run: python demos/01_shuffle_spectrum.py
"""

from infty.cyclicshuffle import apply_e, eigen_dim, shuffle_s
from infty.gradedspace import LinComb
from infty.verify import spectral_identities

A, B = 0, 1
degrees = [2, 2]  # two even letters, so e(1) picks out the free Lie algebra

# s sums over the ways of splitting a word into a prefix and suffix, then shuffling them back
w = LinComb({(A, B, A): 1})
print("s(ABA) =", shuffle_s(w, degrees))

# e(1) applied to a word gives its Lie part
print("e(1)(AB) =", apply_e(1, LinComb({(A, B): 1}), degrees))

# the eigenspace dims per weight; j = 1 gives the Witt numbers 2, 1, 2, 3, 6, 9
for n in range(1, 7):
    row = [eigen_dim(j, n, degrees) for j in range(1, n + 1)]
    print("weight", n, "dims by j:", row, "total", sum(row), "= 2^n:", sum(row) == 2 ** n)

# the full identity suite, as exact integer matrices on each content block
rep = spectral_identities((1, 2, 0), 5)
print("spectral identities for degrees (1, 2, 0) up to weight 5:", "PASS" if rep.passed else rep.failures)
for row in rep.info["rows"]:
    print("  ", row)
