#!/usr/bin/env python3
"""Walk through the character computations behind the rank result.

The rank of the degree-n cycle matrix equals the sum of squared dimensions
of the irreducible modules whose character is nonzero on the class of
n-cycles.  Those are exactly the hook shapes, their dimensions are binomial
coefficients, and the squares sum to the central binomial coefficient.
"""

from math import comb, factorial

from permrank import (
    character,
    character_at_full_cycle,
    character_table,
    class_size,
    is_hook,
    partitions,
    specht_dim,
    syt_count,
)

n = 5
shapes = partitions(n)
print(f"partitions of {n}: {shapes}")

# The full character table; column 0 is the identity class, so it lists
# the module dimensions (= standard tableau counts).
print("\ncharacter table (rows: shapes, columns: classes, identity first)")
classes = list(reversed(shapes))
print("shape".ljust(12), *(str(mu).ljust(12) for mu in classes))
for lam, row in zip(shapes, character_table(n)):
    print(str(lam).ljust(12), *(str(v).ljust(12) for v in row))

print("\nfull-cycle column: nonzero exactly on hook shapes")
for lam in shapes:
    value = character_at_full_cycle(lam)
    marker = "hook" if is_hook(lam) else "    "
    print(f"  {str(lam):12} {marker}  value {value:2d}")
    assert value == character(lam, (n,))

# Dimensions: hooks with leg k-1 have dimension C(n-1, k-1), and the sum of
# ALL squared dimensions recovers the group order.
dims = [specht_dim(lam) for lam in shapes]
print(f"\ndimensions {dims}, sum of squares = {sum(d * d for d in dims)} = {n}! = {factorial(n)}")

hook_square_sum = sum(
    specht_dim(lam) ** 2 for lam in shapes if is_hook(lam)
)
print(
    f"sum over hooks of dim^2 = {hook_square_sum} = C({2 * n - 2},{n - 1}) = "
    f"{comb(2 * n - 2, n - 1)}  <- the matrix rank"
)

# Orthogonality of weighted character rows, the standard sanity check.
sizes = [class_size(mu) for mu in classes]
table = character_table(n)
for i in range(len(shapes)):
    for j in range(len(shapes)):
        dot = sum(s * a * b for s, a, b in zip(sizes, table[i], table[j]))
        assert dot == (factorial(n) if i == j else 0)
print("row orthogonality verified")

# The tableau-count formula agrees with brute-force enumeration.
from permrank import standard_tableaux

for lam in shapes:
    assert syt_count(lam) == len(standard_tableaux(lam))
print("hook length formula matches explicit tableau enumeration")
