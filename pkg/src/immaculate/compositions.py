"""Integer compositions and partitions, with the two orderings used downstream.

A composition of n is a tuple of positive integers summing to n; a partition
is a composition with weakly decreasing parts.  The empty tuple is the unique
composition (and partition) of 0.  Everything here works on plain tuples.
"""

from itertools import combinations

Composition = tuple[int, ...]

VERTICAL_RANK = 0
HORIZONTAL_RANK = 1
GENERIC_RANK = 2


def is_composition(alpha) -> bool:
    return isinstance(alpha, tuple) and all(isinstance(p, int) and p >= 1 for p in alpha)


def is_partition(lam) -> bool:
    if not is_composition(lam):
        return False
    return all(lam[i] >= lam[i + 1] for i in range(len(lam) - 1))


def compositions_of(n: int) -> list[Composition]:
    """All 2^(n-1) compositions of n (one for n=0), in lexicographic order."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if n == 0:
        return [()]
    out = []
    for first in range(1, n + 1):
        out.extend((first,) + rest for rest in compositions_of(n - first))
    return out


def partitions_of(n: int) -> list[Composition]:
    """All partitions of n, largest-first ((n,) down to (1,)*n)."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")

    def gen(remaining, cap):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, cap), 0, -1):
            for rest in gen(remaining - first, first):
                yield (first,) + rest

    return list(gen(n, n))


def lex_compare(a: Composition, b: Composition) -> int:
    """Lexicographic comparison; a proper prefix precedes its extensions.

    Returns -1, 0 or 1.
    """
    if a < b:
        return -1
    if a > b:
        return 1
    return 0


def is_vertical(alpha: Composition) -> bool:
    """True iff alpha = (1, 1, ..., 1)."""
    if not alpha:
        raise ValueError("empty composition has no shape type")
    return all(p == 1 for p in alpha)


def is_horizontal(alpha: Composition) -> bool:
    """True iff alpha is a single part (n,)."""
    if not alpha:
        raise ValueError("empty composition has no shape type")
    return len(alpha) == 1


def triangle_key(alpha: Composition):
    """Sort key realizing the order: (1^n) first, then (n), then lex.

    For n = 1 the single composition (1,) is both vertical and horizontal and
    compares equal to itself under any rank, so the vertical rank wins.
    """
    if is_vertical(alpha):
        return (VERTICAL_RANK, alpha)
    if is_horizontal(alpha):
        return (HORIZONTAL_RANK, alpha)
    return (GENERIC_RANK, alpha)


def triangle_compare(a: Composition, b: Composition) -> int:
    """Compare compositions of one fixed n: (1^n), then (n), then lex order."""
    if sum(a) != sum(b):
        raise ValueError(f"cannot compare compositions of different sizes: {a} vs {b}")
    ka, kb = triangle_key(a), triangle_key(b)
    if ka < kb:
        return -1
    if ka > kb:
        return 1
    return 0


def subsets_of_range(limit: int, size: int) -> list[tuple[int, ...]]:
    """All size-element subsets of {1, ..., limit} as sorted tuples."""
    return list(combinations(range(1, limit + 1), size))
