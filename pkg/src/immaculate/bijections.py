"""The two constructive bijections behind the tableau/immacutation count.

``phi`` grows a pair of same-shape standard immaculate tableaux by one bottom
row: the two sets pick (after an upward shift by 1) the labels that join the
new bottom row next to a fresh 1-cell, and the old tableaux are relabelled
order-preservingly into whatever labels remain.  ``phi_inverse`` peels that
bottom row back off.  Iterating the peeling step and recording the shifted-
down label sets turns a tableau pair into an immacutation; folding ``phi``
over the class from the innermost part outward turns it back.
"""

from immaculate.compositions import Composition
from immaculate.immacutations import Immacutation, class_for_shape, validate
from immaculate.tableaux import (
    Rows,
    is_standard_immaculate,
    tableau_shape,
    tableau_size,
)

Quadruple = tuple[Rows, Rows, tuple[int, ...], tuple[int, ...]]
TableauPair = tuple[Rows, Rows]


def _relabel(rows: Rows, mapping: dict[int, int]) -> Rows:
    return tuple(tuple(mapping[v] for v in row) for row in rows)


def _rank_relabel(rows: Rows) -> Rows:
    """Order-preserving relabelling onto 1..k (j-th smallest label becomes j)."""
    labels = sorted(v for row in rows for v in row)
    mapping = {v: j + 1 for j, v in enumerate(labels)}
    return _relabel(rows, mapping)


def _check_pair(first: Rows, second: Rows) -> None:
    if tableau_shape(first) != tableau_shape(second):
        raise ValueError(
            f"tableaux must have equal shapes: {tableau_shape(first)} vs {tableau_shape(second)}"
        )
    for rows in (first, second):
        if not is_standard_immaculate(rows):
            raise ValueError(f"not a standard immaculate tableau: {rows!r}")


def phi(t1: Rows, t2: Rows, s1, s2, n: int) -> TableauPair:
    """Extend a k-cell pair to an (n+1)-cell pair using two (n-k)-subsets of {1..n}.

    The degenerate n = 0 case takes the empty quadruple to the pair of
    single-cell tableaux; it is what the innermost step of the reconstruction
    uses.
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    _check_pair(t1, t2)
    k = tableau_size(t1)
    if k > n:
        raise ValueError(f"tableaux have {k} cells, more than n = {n}")
    sets = []
    for s in (s1, s2):
        s = tuple(sorted(s))
        if len(set(s)) != len(s) or len(s) != n - k:
            raise ValueError(f"need a set of exactly {n - k} distinct labels, got {s!r}")
        if any(not 1 <= v <= n for v in s):
            raise ValueError(f"set members must lie in 1..{n}: {s!r}")
        sets.append(s)
    out = []
    for t, s in zip((t1, t2), sets):
        shifted = [v + 1 for v in s]
        bottom = (1, *shifted)
        rest = sorted(set(range(2, n + 2)) - set(shifted))
        mapping = {j + 1: rest[j] for j in range(k)}
        out.append((bottom,) + _relabel(t, mapping))
    return out[0], out[1]


def phi_inverse(first: Rows, second: Rows) -> Quadruple:
    """Peel the bottom rows off an (n+1)-cell pair, recovering (T1, T2, S1, S2)."""
    _check_pair(first, second)
    if not first:
        raise ValueError("cannot invert on empty tableaux")
    out_tabs = []
    out_sets = []
    for rows in (first, second):
        out_sets.append(tuple(v - 1 for v in rows[0][1:]))
        out_tabs.append(_rank_relabel(rows[1:]))
    return out_tabs[0], out_tabs[1], out_sets[0], out_sets[1]


def tableaux_to_immacutation(first: Rows, second: Rows) -> Immacutation:
    """Map a same-shape pair of standard immaculate tableaux to its immacutation.

    Repeatedly strips the bottom rows, recording the shifted-down sets of
    labels sitting right of each 1-cell, until the tableaux are exhausted.
    """
    _check_pair(first, second)
    n = tableau_size(first)
    if n < 1:
        raise ValueError("tableaux must be nonempty")
    shape = tableau_shape(first)
    entries = []
    while first:
        first, second, s1, s2 = phi_inverse(first, second)
        entries.append(s1)
        entries.append(s2)
    return Immacutation(n, class_for_shape(shape), tuple(entries))


def immacutation_to_tableaux(t: Immacutation) -> TableauPair:
    """Rebuild the unique tableau pair mapping to t, by folding phi outward."""
    if not validate(t):
        raise ValueError(f"invalid immacutation: {t!r}")
    first: Rows = ()
    second: Rows = ()
    depth = len(t.klass)
    for i in range(depth - 1, -1, -1):
        step_n = (t.klass[i - 1] if i > 0 else t.order) - 1
        first, second = phi(first, second, t.entries[2 * i], t.entries[2 * i + 1], step_n)
    return first, second


def pair_shape(pair: TableauPair) -> Composition:
    return tableau_shape(pair[0])
