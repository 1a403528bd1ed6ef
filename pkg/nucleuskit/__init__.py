"""
NucleusKit - Nuclei and bicompletions of finite matrices

Boolean contexts, quantale-valued matrices and finite Set-valued profunctors,
their derivation operators, nuclei, Kan extensions and the extension matrices
built from algebras and coalgebras, plus exhaustive verification suites.
"""

__version__ = "0.1.0"
__author__ = "Fratua"

from nucleuskit.core.engine import NucleusEngine

__all__ = ["NucleusEngine"]
