"""Nuclei of matrices valued in ([0,1], *, 1) and ([0,inf], +, 0)"""

from nucleuskit.quantale.quantale import (
    EXTENDED_NONNEG_PLUS,
    EXTENDED_REALS,
    UNIT_INTERVAL,
    UNIT_INTERVAL_PRODUCT,
    Quantale,
    quantale_for,
)
from nucleuskit.quantale.matrix import (
    QuantaleMatrix,
    q_nucleus,
    q_nucleus_bruteforce,
    qderive_down,
    qderive_up,
    transfer_enrichment,
    transfer_values,
)

__all__ = [
    "EXTENDED_NONNEG_PLUS",
    "EXTENDED_REALS",
    "UNIT_INTERVAL",
    "UNIT_INTERVAL_PRODUCT",
    "Quantale",
    "quantale_for",
    "QuantaleMatrix",
    "q_nucleus",
    "q_nucleus_bruteforce",
    "qderive_down",
    "qderive_up",
    "transfer_enrichment",
    "transfer_values",
]
