"""Finite posets, Galois connections and the Dedekind-MacNeille completion"""

from nucleuskit.order.poset import FinPoset, lower_bounds, upper_bounds, liminf, limsup
from nucleuskit.order.completion import (
    Cut,
    DMLattice,
    closure_fixpoints,
    dm_completion,
    dm_completion_bruteforce,
)
from nucleuskit.order.catalog import poset_catalog, random_poset

__all__ = [
    "FinPoset",
    "lower_bounds",
    "upper_bounds",
    "liminf",
    "limsup",
    "Cut",
    "DMLattice",
    "closure_fixpoints",
    "dm_completion",
    "dm_completion_bruteforce",
    "poset_catalog",
    "random_poset",
]
