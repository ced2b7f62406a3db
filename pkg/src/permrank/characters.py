"""Irreducible characters of the symmetric group.

Characters are computed by the Murnaghan-Nakayama recursion over rim hooks:
the value of the character indexed by shape ``lam`` on the class of cycle
type ``alpha`` is the signed sum, over rim hooks of ``lam`` with as many
cells as the largest part of ``alpha``, of the character of the reduced
shape on the reduced cycle type.  The recursion removes the largest part
first and bottoms out at the empty shape with value 1.

All values are exact integers.  The memo cache is shared; entries are pure
functions of their key, so concurrent use can at worst duplicate work.
"""

from __future__ import annotations

from functools import cache
from math import factorial

from .young import Partition, check_partition, is_hook, partitions, rim_hooks, syt_count

#: Cap for full character tables (p(10) = 42 rows/columns).
MAX_TABLE_DEGREE = 10


@cache
def character(lam: Partition, alpha: Partition) -> int:
    """Character of shape ``lam`` at cycle type ``alpha``, both partitions of n.

    >>> character((2, 1), (1, 1, 1))
    2
    >>> character((2, 1), (3,))
    -1
    """
    lam = check_partition(lam)
    alpha = check_partition(alpha)
    if sum(lam) != sum(alpha):
        raise ValueError(f"weight mismatch: {lam} vs {alpha}")
    if not lam:
        return 1
    largest, rest = alpha[0], alpha[1:]
    return sum(h.sign * character(h.remainder, rest) for h in rim_hooks(lam, largest))


def character_at_full_cycle(lam: Partition) -> int:
    """Character value on the class of single n-cycles, in closed form.

    Zero unless ``lam`` is hook-shaped; on a hook the unique rim hook is the
    whole diagram, giving (-1)**(rows - 1).  Agrees with the recursion.
    """
    lam = check_partition(lam)
    if not lam:
        raise ValueError("weight must be positive")
    if not is_hook(lam):
        return 0
    return -1 if (len(lam) - 1) % 2 else 1


def specht_dim(lam: Partition) -> int:
    """Dimension of the irreducible module indexed by ``lam``.

    Equals the number of standard Young tableaux of that shape, and also
    the character value at the identity class.
    """
    lam = check_partition(lam)
    if not lam:
        raise ValueError("weight must be positive")
    return syt_count(lam)


def class_size(mu: Partition) -> int:
    """Size of the conjugacy class with cycle type ``mu``.

    n! divided by the centralizer order, which is the product over distinct
    part sizes i of i**m_i * m_i! for multiplicity m_i.
    """
    mu = check_partition(mu)
    if not mu:
        raise ValueError("weight must be positive")
    n = sum(mu)
    centralizer = 1
    for size in set(mu):
        m = mu.count(size)
        centralizer *= size**m * factorial(m)
    return factorial(n) // centralizer


def character_table(n: int) -> list[list[int]]:
    """Full character table of degree ``n``.

    Rows are shapes in reverse-lexicographic order, (n) first (trivial row
    on top); columns are cycle types in the reversed order, identity class
    first, so column 0 lists the dimensions.
    """
    if not 1 <= n <= MAX_TABLE_DEGREE:
        raise ValueError(f"degree must be in 1..{MAX_TABLE_DEGREE}, got {n}")
    shapes = partitions(n)
    classes = list(reversed(shapes))
    return [[character(lam, mu) for mu in classes] for lam in shapes]
