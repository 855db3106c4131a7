"""The dimension sequences a(n), b(n) and the enumerated algebra dimension.

a(n) is OEIS A101514: a(0) = 1 and a(n) = sum over k < n of C(n-1, k)^2 a(k).
b(n) uses the same template with C(n-1, k)^2 replaced by (n-1)!/k! and comes
out to n! on the nose.  dim_immaculate_algebra recomputes the a-values by a
completely different route (explicit tableau enumeration), which is the whole
point: the agreement of the two routes is a theorem, not a tautology.
"""

from math import comb, factorial

from immaculate.compositions import compositions_of
from immaculate.tableaux import g_count


def a_sequence(max_n: int) -> list[int]:
    """a(0..max_n), computed by the defining recurrence with exact binomials."""
    if max_n < 0:
        raise ValueError(f"max_n must be nonnegative, got {max_n}")
    values = [1]
    for n in range(1, max_n + 1):
        values.append(sum(comb(n - 1, k) ** 2 * values[k] for k in range(n)))
    return values


def b_sequence(max_n: int) -> list[int]:
    """b(0..max_n): the factorial analogue of the a-recurrence (b(n) = n!)."""
    if max_n < 0:
        raise ValueError(f"max_n must be nonnegative, got {max_n}")
    values = [1]
    for n in range(1, max_n + 1):
        values.append(sum(factorial(n - 1) // factorial(k) * values[k] for k in range(n)))
    return values


def dim_immaculate_algebra(n: int) -> int:
    """Sum of g(alpha)^2 over all compositions alpha of n, by direct enumeration.

    Deliberately independent of a_sequence: the tableaux are generated and
    counted shape by shape.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return sum(g_count(alpha) ** 2 for alpha in compositions_of(n))
