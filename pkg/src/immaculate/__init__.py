"""Exact combinatorics of immaculate tableaux, immacutations, and their algebra."""

from immaculate.compositions import (
    compositions_of,
    is_horizontal,
    is_vertical,
    lex_compare,
    partitions_of,
    triangle_compare,
)
from immaculate.counting import a_sequence, b_sequence, dim_immaculate_algebra
from immaculate.tableaux import (
    enumerate_standard_immaculate,
    enumerate_standard_young,
    f_count,
    g_count,
    is_immaculate,
    kostka_count,
)
from immaculate.immacutations import (
    Immacutation,
    enumerate_immacutations,
    immacutation_compare,
    shape_of,
    validate,
)
from immaculate.bijections import (
    immacutation_to_tableaux,
    phi,
    phi_inverse,
    tableaux_to_immacutation,
)
from immaculate.algebra import (
    AlgebraElement,
    HBasisElement,
    cayley_table,
    e_multiply,
    h_expand,
    h_multiply,
    verify_h_basis,
    verify_monoid,
)
from immaculate.young_units import (
    embedding_check,
    gamma,
    verify_young_units,
    young_unit,
)

__version__ = "0.1.0"

__all__ = [
    "AlgebraElement",
    "HBasisElement",
    "Immacutation",
    "a_sequence",
    "b_sequence",
    "cayley_table",
    "compositions_of",
    "dim_immaculate_algebra",
    "e_multiply",
    "embedding_check",
    "enumerate_immacutations",
    "enumerate_standard_immaculate",
    "enumerate_standard_young",
    "f_count",
    "g_count",
    "gamma",
    "h_expand",
    "h_multiply",
    "immacutation_compare",
    "immacutation_to_tableaux",
    "is_horizontal",
    "is_immaculate",
    "is_vertical",
    "kostka_count",
    "lex_compare",
    "partitions_of",
    "phi",
    "phi_inverse",
    "shape_of",
    "tableaux_to_immacutation",
    "triangle_compare",
    "validate",
    "verify_h_basis",
    "verify_monoid",
    "verify_young_units",
    "young_unit",
]
