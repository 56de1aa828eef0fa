from .parser import (
    Presentation,
    PresentationError,
    parse_presentation,
    parse_word,
    read_presentation,
    serialize_presentation,
)
from .todd_coxeter import (
    DEFAULT_BUDGET,
    BudgetExceeded,
    CosetTable,
    IncompleteTable,
    element_order,
    enumerate_cosets,
    group_order,
    permutation_order,
)
from .words import (
    REFLECTION_ALPHABET,
    ROTATION_ALPHABET,
    Word,
    cyclic_reduce,
    free_reduce,
)
from .triangle import dual_presentation, extended_presentation, triangle_presentation

__all__ = [
    "DEFAULT_BUDGET",
    "REFLECTION_ALPHABET",
    "ROTATION_ALPHABET",
    "BudgetExceeded",
    "CosetTable",
    "IncompleteTable",
    "Presentation",
    "PresentationError",
    "Word",
    "cyclic_reduce",
    "dual_presentation",
    "element_order",
    "enumerate_cosets",
    "extended_presentation",
    "free_reduce",
    "group_order",
    "parse_presentation",
    "parse_word",
    "permutation_order",
    "read_presentation",
    "serialize_presentation",
    "triangle_presentation",
]
