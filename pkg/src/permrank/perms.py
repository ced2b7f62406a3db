"""Permutations of {1..n} as tuples in one-line notation.

A permutation is stored as a tuple of 0-based images: ``p[i]`` is the image
of point ``i``.  All user-facing I/O (JSON, CLI, docs) is 1-based; use
:func:`from_one_based` / :func:`to_one_based` at the boundary.

Composition is right-to-left: ``compose(s, p)`` applies ``p`` first, so
``compose(s, p)(i) == s(p(i))``.

>>> compose((1, 2, 0), (1, 0, 2))
(2, 1, 0)
>>> cycle_type((1, 0, 3, 2))
(2, 2)
"""

from __future__ import annotations

import itertools
from math import factorial
from typing import Sequence

Perm = tuple[int, ...]

#: Degree cap for whole-group enumeration (8! = 40320 permutations).
MAX_ENUM_DEGREE = 8


def identity(n: int) -> Perm:
    """The identity permutation of degree ``n``."""
    return tuple(range(n))


def is_perm(images: Sequence[int]) -> bool:
    """True if ``images`` is a bijection of {0..n-1}."""
    n = len(images)
    return n >= 1 and sorted(images) == list(range(n))


def _check_degrees(a: Perm, b: Perm) -> None:
    if len(a) != len(b):
        raise ValueError(f"degree mismatch: {len(a)} vs {len(b)}")


def compose(s: Perm, p: Perm) -> Perm:
    """Apply ``p`` first, then ``s``: the permutation i -> s(p(i))."""
    _check_degrees(s, p)
    return tuple(s[p[i]] for i in range(len(p)))


def inverse(p: Perm) -> Perm:
    """The inverse permutation.

    >>> inverse((2, 0, 1))
    (1, 2, 0)
    """
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


def conjugate(x: Perm, p: Perm) -> Perm:
    """x . p . x^-1; preserves cycle structure."""
    _check_degrees(x, p)
    return compose(compose(x, p), inverse(x))


def cycle_type(p: Perm) -> tuple[int, ...]:
    """Cycle lengths of ``p`` in weakly decreasing order.

    The result is a partition of the degree.
    """
    seen = [False] * len(p)
    lengths = []
    for start in range(len(p)):
        if seen[start]:
            continue
        length = 0
        i = start
        while not seen[i]:
            seen[i] = True
            i = p[i]
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths, reverse=True))


def is_cyclic(p: Perm) -> bool:
    """True if ``p`` is a single cycle through all points.

    The identity of degree 1 counts as cyclic.
    """
    n = len(p)
    length = 1
    i = p[0]
    while i != 0:
        i = p[i]
        length += 1
    return length == n


def all_perms(n: int) -> list[Perm]:
    """All n! permutations of degree ``n`` in lexicographic order.

    This order is the canonical basis order used by every matrix
    constructor in the package; ranks from :func:`perm_rank` index into it.
    """
    if not 1 <= n <= MAX_ENUM_DEGREE:
        raise ValueError(f"degree must be in 1..{MAX_ENUM_DEGREE}, got {n}")
    return list(itertools.permutations(range(n)))


def perm_rank(p: Perm) -> int:
    """Position of ``p`` in the lexicographic order of its degree.

    Computed through the Lehmer code, so ranking is O(n^2) without
    enumerating the group.

    >>> perm_rank((2, 1, 0))
    5
    """
    n = len(p)
    r = 0
    for i in range(n):
        smaller_right = sum(1 for j in range(i + 1, n) if p[j] < p[i])
        r += smaller_right * factorial(n - 1 - i)
    return r


def perm_unrank(n: int, r: int) -> Perm:
    """Inverse of :func:`perm_rank`: the permutation at position ``r``.

    >>> perm_unrank(3, 5)
    (2, 1, 0)
    """
    if not 0 <= r < factorial(n):
        raise ValueError(f"rank {r} out of range for degree {n}")
    available = list(range(n))
    images = []
    for i in range(n):
        f = factorial(n - 1 - i)
        idx, r = divmod(r, f)
        images.append(available.pop(idx))
    return tuple(images)


def cyclic_perms(n: int) -> list[Perm]:
    """The (n-1)! permutations consisting of a single n-cycle.

    Generated directly: each arrangement of {1..n-1} defines the cycle
    0 -> a_1 -> ... -> a_{n-1} -> 0.
    """
    if n < 1:
        raise ValueError("degree must be positive")
    out = []
    for arrangement in itertools.permutations(range(1, n)):
        images = [0] * n
        prev = 0
        for a in arrangement:
            images[prev] = a
            prev = a
        images[prev] = 0
        out.append(tuple(images))
    return out


def from_cycles(n: int, *cycles: Sequence[int]) -> Perm:
    """Build a permutation of degree ``n`` from 1-based cycles.

    >>> from_cycles(3, (1, 2, 3))
    (1, 2, 0)
    """
    images = list(range(n))
    for cycle in cycles:
        for a, b in zip(cycle, cycle[1:] + type(cycle)((cycle[0],))):
            images[a - 1] = b - 1
    if not is_perm(images):
        raise ValueError(f"cycles {cycles} do not define a permutation")
    return tuple(images)


def from_one_based(images: Sequence[int]) -> Perm:
    """Parse a 1-based image sequence, e.g. the JSON form [2, 3, 1]."""
    p = tuple(i - 1 for i in images)
    if not is_perm(p):
        raise ValueError(f"{list(images)} is not a permutation of 1..{len(p)}")
    return p


def to_one_based(p: Perm) -> list[int]:
    """1-based image list, the JSON serialization of a permutation."""
    return [i + 1 for i in p]
