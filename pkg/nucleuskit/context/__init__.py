"""Formal contexts, derivation operators and concept lattices"""

from nucleuskit.context.formal_context import FormalContext, derive_down, derive_up, order_context
from nucleuskit.context.concepts import Concept, ConceptLattice, nucleus, nucleus_bruteforce
from nucleuskit.context.cxt import read_cxt, write_cxt

__all__ = [
    "FormalContext",
    "derive_up",
    "derive_down",
    "order_context",
    "Concept",
    "ConceptLattice",
    "nucleus",
    "nucleus_bruteforce",
    "read_cxt",
    "write_cxt",
]
