"""Immaculate tableaux, standard immaculate tableaux, and standard Young tableaux.

A tableau is stored as a tuple of rows in French notation: rows[0] is the
bottom row, and the shape is the tuple of row lengths.  An immaculate tableau
of shape alpha and content beta has beta[i-1] cells labeled i, weakly
increasing rows, and a strictly increasing first column (bottom to top).  It
is standard when its content is (1,)*n, in which case every row is strictly
increasing and the bottom-left cell holds 1.

Standard Young tableaux (partition shape, strictly increasing rows *and*
columns) are included because every one of them is also a standard immaculate
tableau, which is what lets the tableau counts be compared shape by shape.
"""

from functools import cache

from immaculate.compositions import Composition, is_composition, is_partition

Rows = tuple[tuple[int, ...], ...]

EMPTY_TABLEAU: Rows = ()


def tableau_shape(rows: Rows) -> Composition:
    return tuple(len(row) for row in rows)


def tableau_size(rows: Rows) -> int:
    return sum(len(row) for row in rows)


def is_immaculate(rows: Rows, content: Composition) -> bool:
    """Check the three immaculate-tableau axioms for the given content."""
    labels = [v for row in rows for v in row]
    counts = [0] * len(content)
    for v in labels:
        if not 1 <= v <= len(content):
            return False
        counts[v - 1] += 1
    if tuple(counts) != tuple(content):
        return False
    for row in rows:
        if any(row[i] > row[i + 1] for i in range(len(row) - 1)):
            return False
    first_column = [row[0] for row in rows]
    return all(first_column[i] < first_column[i + 1] for i in range(len(first_column) - 1))


def is_standard_immaculate(rows: Rows) -> bool:
    return is_immaculate(rows, (1,) * tableau_size(rows))


def is_standard_young(rows: Rows) -> bool:
    shape = tableau_shape(rows)
    if not is_partition(shape):
        return False
    if not is_standard_immaculate(rows):
        return False
    for i in range(len(rows) - 1):
        if any(rows[i][j] >= rows[i + 1][j] for j in range(len(rows[i + 1]))):
            return False
    return True


def _iter_standard_immaculate(shape: Composition):
    """Yield the standard fillings of the shape by placing 1..n in order.

    Label k either extends a started, unfinished row (it lands at the right
    end, so rows stay increasing) or opens the next row up (its first-column
    entry exceeds everything placed before, so the first column stays
    strictly increasing).  Every leaf of this search is therefore a standard
    immaculate tableau, and every such tableau arises exactly once.
    """
    n = sum(shape)
    rows: list[list[int]] = []

    def place(k):
        if k > n:
            yield tuple(tuple(row) for row in rows)
            return
        for i, row in enumerate(rows):
            if len(row) < shape[i]:
                row.append(k)
                yield from place(k + 1)
                row.pop()
        if len(rows) < len(shape):
            rows.append([k])
            yield from place(k + 1)
            rows.pop()

    yield from place(1)


def enumerate_standard_immaculate(shape: Composition) -> list[Rows]:
    """All standard immaculate tableaux of the shape, sorted by reading word."""
    if not is_composition(shape):
        raise ValueError(f"not a composition: {shape!r}")
    return sorted(_iter_standard_immaculate(shape))


@cache
def g_count(shape: Composition) -> int:
    """Number of standard immaculate tableaux of the shape, by enumeration."""
    if not is_composition(shape):
        raise ValueError(f"not a composition: {shape!r}")
    return sum(1 for _ in _iter_standard_immaculate(shape))


def enumerate_immaculate(shape: Composition, content: Composition) -> list[Rows]:
    """All immaculate tableaux of the given shape and content."""
    if not is_composition(shape) or not is_composition(content):
        raise ValueError(f"shape and content must be compositions: {shape!r}, {content!r}")
    if sum(shape) != sum(content):
        return []
    remaining = list(content)
    rows: list[list[int]] = []
    found: list[Rows] = []

    def fill_cell(r, c):
        if r == len(shape):
            found.append(tuple(tuple(row) for row in rows))
            return
        if c == 0:
            lower = rows[r - 1][0] + 1 if r > 0 else 1
        else:
            lower = rows[r][c - 1]  # weak increase: at least the left neighbor
        for v in range(lower, len(content) + 1):
            if remaining[v - 1] == 0:
                continue
            remaining[v - 1] -= 1
            if c == 0:
                rows.append([v])
            else:
                rows[r].append(v)
            if c + 1 < shape[r]:
                fill_cell(r, c + 1)
            else:
                fill_cell(r + 1, 0)
            if c == 0:
                rows.pop()
            else:
                rows[r].pop()
            remaining[v - 1] += 1

    fill_cell(0, 0)
    return sorted(found)


def kostka_count(shape: Composition, content: Composition) -> int:
    """Number of immaculate tableaux of the shape and content (0 if sizes differ)."""
    return len(enumerate_immaculate(shape, content))


def _iter_standard_young(shape: Composition):
    """Yield standard Young fillings by placing 1..n at the available corners."""
    n = sum(shape)
    fill = [0] * len(shape)  # cells used so far in each row
    rows: list[list[int]] = [[] for _ in shape]

    def place(k):
        if k > n:
            yield tuple(tuple(row) for row in rows)
            return
        for i in range(len(shape)):
            if fill[i] < shape[i] and (i == 0 or fill[i - 1] > fill[i]):
                rows[i].append(k)
                fill[i] += 1
                yield from place(k + 1)
                fill[i] -= 1
                rows[i].pop()

    yield from place(1)


def enumerate_standard_young(shape: Composition) -> list[Rows]:
    """All standard Young tableaux of the partition shape, sorted by reading word."""
    if not is_partition(shape):
        raise ValueError(f"not a partition: {shape!r}")
    return sorted(_iter_standard_young(shape))


@cache
def f_count(shape: Composition) -> int:
    """Number of standard Young tableaux of the partition shape, by enumeration."""
    if not is_partition(shape):
        raise ValueError(f"not a partition: {shape!r}")
    return sum(1 for _ in _iter_standard_young(shape))


def tableau_to_json(rows: Rows) -> dict:
    return {"shape": list(tableau_shape(rows)), "rows": [list(row) for row in rows]}


def tableau_from_json(doc: dict) -> Rows:
    if not isinstance(doc, dict) or "rows" not in doc:
        raise ValueError(f"tableau document must have a 'rows' field: {doc!r}")
    rows = tuple(tuple(int(v) for v in row) for row in doc["rows"])
    if "shape" in doc and tuple(doc["shape"]) != tableau_shape(rows):
        raise ValueError(f"declared shape {doc['shape']} does not match rows {doc['rows']}")
    return rows


def tableau_to_text(rows: Rows) -> str:
    """One-line rendering, bottom row first, rows separated by ' | '."""
    if not rows:
        return "(empty)"
    return " | ".join(" ".join(str(v) for v in row) for row in rows)
