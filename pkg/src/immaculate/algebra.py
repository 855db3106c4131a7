"""The matrix-unit algebra indexed by same-shape standard immaculate tableau pairs.

The e-basis consists of formal matrix units e[alpha][T1, T2], one per ordered
pair of standard immaculate tableaux of each composition shape alpha of n,
multiplying by the usual rule: units of different shapes annihilate, and
e[a][T1, T2] * e[a][T3, T4] is e[a][T1, T4] when T2 = T3 and zero otherwise.

The h-basis re-packages the same index set so that products of basis elements
stay in the basis: the horizontal element (the sum of every diagonal unit) is
a two-sided identity, the vertical element ("qid") absorbs almost everything,
and two generic elements compose like partial functions when their shapes
match and the inner tableaux agree.  Transporting the resulting monoid along
the tableau-pair/immacutation bijection yields the Cayley tables.
"""

from fractions import Fraction
from functools import cache
from typing import NamedTuple

from immaculate.bijections import immacutation_to_tableaux, tableaux_to_immacutation
from immaculate.compositions import (
    Composition,
    compositions_of,
    is_horizontal,
    is_vertical,
    triangle_key,
)
from immaculate.immacutations import enumerate_immacutations
from immaculate.linalg import det_int
from immaculate.report import Report
from immaculate.tableaux import Rows, enumerate_standard_immaculate, tableau_shape

EIndex = tuple[Composition, Rows, Rows]


class AlgebraElement:
    """A finite rational combination of matrix units, all of one size n."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: dict[EIndex, Fraction] | None = None):
        self.n = n
        clean: dict[EIndex, Fraction] = {}
        for index, coeff in (terms or {}).items():
            coeff = Fraction(coeff)
            if coeff != 0:
                clean[index] = coeff
        self.terms = clean

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        if self.n != other.n:
            raise ValueError(f"mixed sizes: {self.n} vs {other.n}")
        acc = dict(self.terms)
        for index, coeff in other.terms.items():
            acc[index] = acc.get(index, Fraction(0)) + coeff
        return AlgebraElement(self.n, acc)

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + (-1) * other

    def __rmul__(self, scalar) -> "AlgebraElement":
        scalar = Fraction(scalar)
        return AlgebraElement(self.n, {i: scalar * c for i, c in self.terms.items()})

    def __mul__(self, other: "AlgebraElement") -> "AlgebraElement":
        return e_multiply(self, other)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, AlgebraElement)
            and self.n == other.n
            and self.terms == other.terms
        )

    def __repr__(self) -> str:
        if not self.terms:
            return f"AlgebraElement({self.n}, 0)"
        bits = " + ".join(
            f"{c}*e[{sh}][{r},{co}]" if c != 1 else f"e[{sh}][{r},{co}]"
            for (sh, r, co), c in sorted(self.terms.items())
        )
        return f"AlgebraElement({self.n}, {bits})"


def e_unit(n: int, shape: Composition, row: Rows, col: Rows) -> AlgebraElement:
    if sum(shape) != n or tableau_shape(row) != shape or tableau_shape(col) != shape:
        raise ValueError(f"inconsistent unit index: n={n}, shape={shape}, {row!r}, {col!r}")
    return AlgebraElement(n, {(shape, row, col): Fraction(1)})


def e_multiply(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    """Bilinear extension of the matrix-unit product rule."""
    if x.n != y.n:
        raise ValueError(f"mixed sizes: {x.n} vs {y.n}")
    acc: dict[EIndex, Fraction] = {}
    for (sh1, r1, c1), a in x.terms.items():
        for (sh2, r2, c2), b in y.terms.items():
            if sh1 == sh2 and c1 == r2:
                key = (sh1, r1, c2)
                acc[key] = acc.get(key, Fraction(0)) + a * b
    return AlgebraElement(x.n, acc)


class HBasisElement(NamedTuple):
    shape: Composition
    row: Rows
    col: Rows


def vertical_tableau(n: int) -> Rows:
    return tuple((k,) for k in range(1, n + 1))


def horizontal_tableau(n: int) -> Rows:
    return (tuple(range(1, n + 1)),)


def qid_element(n: int) -> HBasisElement:
    """The quasi-identity: the unique element of vertical shape."""
    v = vertical_tableau(n)
    return HBasisElement((1,) * n, v, v)


def id_element(n: int) -> HBasisElement:
    """The identity: the unique element of horizontal shape."""
    h = horizontal_tableau(n)
    return HBasisElement((n,), h, h)


def h_basis(n: int) -> list[HBasisElement]:
    """All h-basis elements of size n, shapes in (1^n) < (n) < lex order."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    shapes = sorted(compositions_of(n), key=triangle_key)
    out = []
    for shape in shapes:
        tabs = enumerate_standard_immaculate(shape)
        out.extend(HBasisElement(shape, t1, t2) for t1 in tabs for t2 in tabs)
    return out


def h_expand(h: HBasisElement) -> AlgebraElement:
    """Expansion of an h-basis element into matrix units."""
    n = sum(h.shape)
    qid = qid_element(n)
    qid_term = e_unit(n, qid.shape, qid.row, qid.col)
    if is_vertical(h.shape):
        return qid_term
    if is_horizontal(h.shape):
        total = AlgebraElement(n)
        for shape in compositions_of(n):
            for t in enumerate_standard_immaculate(shape):
                total = total + e_unit(n, shape, t, t)
        return total
    return qid_term + e_unit(n, h.shape, h.row, h.col)


def h_multiply(x: HBasisElement, y: HBasisElement) -> HBasisElement:
    """Closed-form product of two h-basis elements (always lands in the basis)."""
    n = sum(x.shape)
    if n != sum(y.shape):
        raise ValueError(f"mixed sizes: {x.shape} vs {y.shape}")
    if is_horizontal(x.shape):
        return y
    if is_horizontal(y.shape):
        return x
    if x.shape == y.shape and x.col == y.row:
        return HBasisElement(x.shape, x.row, y.col)
    return qid_element(n)


@cache
def _monoid_data(n: int):
    """Sorted immacutations of order n, their h-elements, and the index lookup."""
    elements = tuple(enumerate_immacutations(n))
    hs = []
    for t in elements:
        first, second = immacutation_to_tableaux(t)
        hs.append(HBasisElement(tableau_shape(first), first, second))
    index = {h: i for i, h in enumerate(hs)}
    return elements, tuple(hs), index


def monoid_elements(n: int):
    """The order-n immacutations in table order, paired with their h-elements."""
    elements, hs, _ = _monoid_data(n)
    return list(elements), list(hs)


def cayley_table(n: int) -> list[list[int]]:
    """The composition table over immacutations: entry (i, j) = index of t_i * t_j."""
    elements, hs, index = _monoid_data(n)
    return [[index[h_multiply(x, y)] for y in hs] for x in hs]


def verify_monoid(n: int) -> Report:
    """Closure, two-sided identity, and exhaustive associativity for order n."""
    report = Report(name=f"monoid n={n}")
    elements, hs, index = _monoid_data(n)
    size = len(hs)
    report.stats["elements"] = size

    table = []
    for i, x in enumerate(hs):
        row = []
        for j, y in enumerate(hs):
            product = h_multiply(x, y)
            if product not in index:
                report.fail(f"closure broken at ({i}, {j}): {product}")
                row.append(-1)
            else:
                row.append(index[product])
        table.append(row)

    ident = index.get(id_element(n))
    if ident is None:
        report.fail("horizontal element missing from the basis")
    else:
        report.stats["identity_index"] = ident
        for i in range(size):
            if table[ident][i] != i or table[i][ident] != i:
                report.fail(f"identity fails at element {i}")

    bad_triples = 0
    for i in range(size):
        row_i = table[i]
        for j in range(size):
            composed = [row_i[x] for x in table[j]]
            if composed != table[row_i[j]]:
                bad_triples += sum(1 for k in range(size) if composed[k] != table[row_i[j]][k])
                report.fail(f"associativity fails for left pair ({i}, {j})")
    report.stats["associativity_triples"] = size**3
    if bad_triples:
        report.stats["failed_triples"] = bad_triples
    return report


def verify_h_basis(n: int) -> Report:
    """Expansion/transition-matrix checks: unit determinant and product agreement."""
    report = Report(name=f"hbasis n={n}")
    hs = h_basis(n)
    expansions = [h_expand(h) for h in hs]
    position = {(h.shape, h.row, h.col): i for i, h in enumerate(hs)}
    size = len(hs)
    report.stats["dimension"] = size

    matrix = [[0] * size for _ in range(size)]
    for i, element in enumerate(expansions):
        for index, coeff in element.terms.items():
            if coeff.denominator != 1:
                report.fail(f"non-integer transition entry {coeff} in row {i}")
            matrix[i][position[index]] = int(coeff)
    determinant = det_int(matrix)
    report.stats["determinant"] = determinant
    report.check(determinant == 1, f"transition determinant is {determinant}, expected 1")

    mismatches = 0
    for i, x in enumerate(hs):
        for j, y in enumerate(hs):
            closed = h_expand(h_multiply(x, y))
            expanded = e_multiply(expansions[i], expansions[j])
            if closed != expanded:
                mismatches += 1
                report.fail(f"product mismatch at ({i}, {j})")
    report.stats["products_checked"] = size**2
    if mismatches:
        report.stats["mismatches"] = mismatches
    return report
