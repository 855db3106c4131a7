"""Young's explicit matrix units for the symmetric group algebra, over Q.

For each partition shape, the standard Young tableaux are sorted by first
letter order and each tableau T contributes the idempotent seed
gamma(T) = (f/n!) * N(T) * P(T), where P sums the row group and N sums the
column group with signs.  The unit e[i, j] is sigma(i, j) * gamma(j) *
(1 - gamma(j+1)) * ... * (1 - gamma(f)); taken over all shapes of n these n!
elements multiply exactly like matrix units, which verify_young_units checks
from scratch (products, linear independence, the sum-of-squares count, and
the diagonal sum being the identity).

First letter order is implemented as: scan the values 1, 2, ...; at the first
value sitting in different cells, the tableau holding it in the *higher* row
comes first (rows run bottom-up, so higher row = larger row index; column as
tie-break).  The reversed scan is kept available as reading="low".  The two
readings produce identical unit relations up to n = 4; at n = 5 the relation
checks in verify_young_units discriminate, and "high" is the reading that
validates ("low" breaks both the diagonal-sum identity and the product rules,
first at shape (2, 2, 1)).
"""

from fractions import Fraction
from functools import cache, cmp_to_key
from itertools import permutations as all_arrangements
from math import factorial

from immaculate.compositions import is_partition, partitions_of
from immaculate.counting import a_sequence
from immaculate.linalg import rank_exact
from immaculate.report import Report
from immaculate.tableaux import (
    Rows,
    enumerate_standard_young,
    f_count,
    g_count,
    tableau_shape,
    tableau_size,
)

Perm = tuple[int, ...]

YFLO_READING = "high"  # adjudicated by the matrix-unit relation checks (see above)


def identity_perm(n: int) -> Perm:
    return tuple(range(1, n + 1))


def is_permutation(p: Perm) -> bool:
    return sorted(p) == list(range(1, len(p) + 1))


def compose(p: Perm, q: Perm) -> Perm:
    """(p o q)(x) = p(q(x))."""
    if len(p) != len(q):
        raise ValueError(f"mixed sizes: {len(p)} vs {len(q)}")
    return tuple(p[v - 1] for v in q)


def inverse(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, v in enumerate(p):
        out[v - 1] = i + 1
    return tuple(out)


def sign(p: Perm) -> int:
    s = 1
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            if p[i] > p[j]:
                s = -s
    return s


def act(p: Perm, rows: Rows) -> Rows:
    """Relabel every cell value v of the tableau by p(v); positions are kept."""
    if tableau_size(rows) != len(p):
        raise ValueError(f"permutation of size {len(p)} cannot act on {rows!r}")
    return tuple(tuple(p[v - 1] for v in row) for row in rows)


def sigma(t1: Rows, t2: Rows) -> Perm:
    """The unique permutation with act(sigma, t2) = t1."""
    if tableau_shape(t1) != tableau_shape(t2):
        raise ValueError(f"shape mismatch: {tableau_shape(t1)} vs {tableau_shape(t2)}")
    n = tableau_size(t1)
    images = [0] * n
    for row1, row2 in zip(t1, t2):
        for v1, v2 in zip(row1, row2):
            images[v2 - 1] = v1
    p = tuple(images)
    if not is_permutation(p):
        raise ValueError("tableaux are not injective fillings of 1..n")
    return p


def _block_stabilizer(blocks: list[tuple[int, ...]], n: int) -> list[Perm]:
    """All permutations of 1..n preserving each label block setwise."""
    perms = [identity_perm(n)]
    for block in blocks:
        extended = []
        for base in perms:
            for arrangement in all_arrangements(block):
                p = list(base)
                for src, dst in zip(block, arrangement):
                    p[src - 1] = dst
                extended.append(tuple(p))
        perms = extended
    return perms


def row_group(rows: Rows) -> list[Perm]:
    return _block_stabilizer([tuple(row) for row in rows], tableau_size(rows))


def column_group(rows: Rows) -> list[Perm]:
    shape = tableau_shape(rows)
    columns = []
    for j in range(max(shape, default=0)):
        columns.append(tuple(rows[i][j] for i in range(len(rows)) if shape[i] > j))
    return _block_stabilizer(columns, tableau_size(rows))


class GroupAlgebraElement:
    """A finite rational combination of permutations of {1..n}."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: dict[Perm, Fraction] | None = None):
        self.n = n
        clean: dict[Perm, Fraction] = {}
        for perm, coeff in (terms or {}).items():
            coeff = Fraction(coeff)
            if coeff != 0:
                clean[perm] = coeff
        self.terms = clean

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        if self.n != other.n:
            raise ValueError(f"mixed sizes: {self.n} vs {other.n}")
        acc = dict(self.terms)
        for perm, coeff in other.terms.items():
            acc[perm] = acc.get(perm, Fraction(0)) + coeff
        return GroupAlgebraElement(self.n, acc)

    def __sub__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        return self + (-1) * other

    def __rmul__(self, scalar) -> "GroupAlgebraElement":
        scalar = Fraction(scalar)
        return GroupAlgebraElement(self.n, {p: scalar * c for p, c in self.terms.items()})

    def __mul__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        if self.n != other.n:
            raise ValueError(f"mixed sizes: {self.n} vs {other.n}")
        acc: dict[Perm, Fraction] = {}
        for p, a in self.terms.items():
            for q, b in other.terms.items():
                key = compose(p, q)
                acc[key] = acc.get(key, Fraction(0)) + a * b
        return GroupAlgebraElement(self.n, acc)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GroupAlgebraElement)
            and self.n == other.n
            and self.terms == other.terms
        )

    def __repr__(self) -> str:
        if not self.terms:
            return f"GroupAlgebraElement({self.n}, 0)"
        bits = " + ".join(f"{c}*{p}" for p, c in sorted(self.terms.items()))
        return f"GroupAlgebraElement({self.n}, {bits})"


def group_identity(n: int) -> GroupAlgebraElement:
    return GroupAlgebraElement(n, {identity_perm(n): Fraction(1)})


def perm_element(p: Perm) -> GroupAlgebraElement:
    return GroupAlgebraElement(len(p), {p: Fraction(1)})


def P_element(rows: Rows) -> GroupAlgebraElement:
    n = tableau_size(rows)
    return GroupAlgebraElement(n, {p: Fraction(1) for p in row_group(rows)})


def N_element(rows: Rows) -> GroupAlgebraElement:
    n = tableau_size(rows)
    return GroupAlgebraElement(n, {p: Fraction(sign(p)) for p in column_group(rows)})


def _positions(rows: Rows) -> dict[int, tuple[int, int]]:
    return {v: (i, j) for i, row in enumerate(rows) for j, v in enumerate(row)}


def yflo_compare(t: Rows, u: Rows, reading: str = YFLO_READING) -> int:
    """First letter order: decided by the first value placed in different cells."""
    pos_t, pos_u = _positions(t), _positions(u)
    for v in range(1, tableau_size(t) + 1):
        if pos_t[v] != pos_u[v]:
            before = pos_t[v] < pos_u[v]
            if reading == "high":
                before = not before
            return -1 if before else 1
    return 0


def yflo_sort(tableaux: list[Rows], reading: str = YFLO_READING) -> list[Rows]:
    return sorted(tableaux, key=cmp_to_key(lambda a, b: yflo_compare(a, b, reading)))


@cache
def _shape_units(shape, reading: str = YFLO_READING):
    """All units e[i][j] for one partition shape, as an f x f nested list."""
    tabs = yflo_sort(enumerate_standard_young(shape), reading)
    n = sum(shape)
    f = len(tabs)
    one = group_identity(n)
    scale = Fraction(f, factorial(n))
    gammas = [scale * (N_element(t) * P_element(t)) for t in tabs]
    tails = [None] * f
    suffix = one
    for j in range(f, 0, -1):
        tails[j - 1] = gammas[j - 1] * suffix
        suffix = (one - gammas[j - 1]) * suffix
    units = []
    for i in range(f):
        units.append([perm_element(sigma(tabs[i], tabs[j])) * tails[j] for j in range(f)])
    return units


def gamma(shape, i: int) -> GroupAlgebraElement:
    """The i-th idempotent seed of the shape (1-based, first letter order)."""
    if not is_partition(shape):
        raise ValueError(f"not a partition: {shape!r}")
    tabs = yflo_sort(enumerate_standard_young(shape))
    if not 1 <= i <= len(tabs):
        raise ValueError(f"index {i} out of range 1..{len(tabs)}")
    n = sum(shape)
    return Fraction(len(tabs), factorial(n)) * (N_element(tabs[i - 1]) * P_element(tabs[i - 1]))


def young_unit(shape, i: int, j: int) -> GroupAlgebraElement:
    """The matrix unit e[i, j] of the shape (1-based indices)."""
    if not is_partition(shape):
        raise ValueError(f"not a partition: {shape!r}")
    f = f_count(shape)
    if not (1 <= i <= f and 1 <= j <= f):
        raise ValueError(f"indices ({i}, {j}) out of range 1..{f}")
    return _shape_units(shape)[i - 1][j - 1]


def all_young_units(n: int, reading: str = YFLO_READING):
    """Every unit of every shape of n, as (shape, i, j, element) tuples."""
    out = []
    for shape in partitions_of(n):
        units = _shape_units(shape, reading)
        for i, row in enumerate(units):
            for j, element in enumerate(row):
                out.append((shape, i + 1, j + 1, element))
    return out


def verify_young_units(n: int, reading: str = YFLO_READING) -> Report:
    """Check the unit relations, independence, the n! count, and the identity sum.

    The pairwise product sweep runs on integer vectors (units scaled by n!,
    permutations interned through a composition table), which keeps the n = 5
    case, with its 14400 products, in the seconds range while staying exact.
    """
    report = Report(name=f"young n={n}")
    report.stats["reading"] = reading
    units = all_young_units(n, reading)
    count = len(units)
    report.stats["units"] = count
    report.check(
        count == factorial(n),
        f"unit count {count} != {factorial(n)} = sum of squared tableau counts",
    )

    perms = sorted(all_arrangements(range(1, n + 1)))
    order = {p: k for k, p in enumerate(perms)}
    comp = [[order[compose(p, q)] for q in perms] for p in perms]
    fact = factorial(n)
    scaled: list[dict[int, int]] = []
    for _, _, _, element in units:
        vec = {}
        for p, c in element.terms.items():
            c = fact * c
            if c.denominator != 1:
                report.fail(f"coefficient {c / fact} has a denominator not dividing {n}!")
            else:
                vec[order[p]] = int(c)
        scaled.append(vec)
    position = {(shape, i, j): t for t, (shape, i, j, _) in enumerate(units)}

    mismatches = 0
    for t1, (shape1, i1, j1, _) in enumerate(units):
        v1 = scaled[t1]
        for t2, (shape2, i2, j2, _) in enumerate(units):
            acc: dict[int, int] = {}
            for p, a in v1.items():
                row = comp[p]
                for q, b in scaled[t2].items():
                    key = row[q]
                    acc[key] = acc.get(key, 0) + a * b
            acc = {k: v for k, v in acc.items() if v}
            if shape1 == shape2 and j1 == i2:
                expected = {k: fact * v for k, v in scaled[position[(shape1, i1, j2)]].items()}
            else:
                expected = {}
            if acc != expected:
                mismatches += 1
                report.fail(
                    f"product rule fails: e{shape1}[{i1},{j1}] * e{shape2}[{i2},{j2}]"
                )
    report.stats["products_checked"] = count * count
    if mismatches:
        report.stats["mismatches"] = mismatches

    matrix = []
    for vec in scaled:
        vector = [0] * len(perms)
        for k, c in vec.items():
            vector[k] = c
        matrix.append(vector)
    rank = rank_exact(matrix)
    report.stats["rank"] = rank
    report.check(rank == count, f"units have rank {rank}, expected {count}")

    diagonal = GroupAlgebraElement(n)
    for shape, i, j, element in units:
        if i == j:
            diagonal = diagonal + element
    report.check(
        diagonal == group_identity(n),
        "diagonal units do not sum to the group identity",
    )
    return report


def embedding_check(n: int) -> Report:
    """Shape-by-shape f <= g and the total count comparison n! <= a(n)."""
    report = Report(name=f"embedding n={n}")
    f_squares = 0
    for shape in partitions_of(n):
        f, g = f_count(shape), g_count(shape)
        f_squares += f * f
        report.check(f <= g, f"f{shape} = {f} exceeds g{shape} = {g}")
    a_n = a_sequence(n)[n]
    report.stats["factorial"] = factorial(n)
    report.stats["dimension"] = a_n
    report.check(f_squares == factorial(n), f"sum of f^2 is {f_squares}, expected {factorial(n)}")
    report.check(factorial(n) <= a_n, f"{factorial(n)} > {a_n}")
    return report
