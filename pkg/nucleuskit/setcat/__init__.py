"""Finite categories, profunctors, their Kan extensions and the induced monads"""

from nucleuskit.setcat.category import FinCategory, FinFunctor
from nucleuskit.setcat.presheaf import Postsheaf, Presheaf, yoneda_post, yoneda_pre
from nucleuskit.setcat.naturality import (
    epi_mono_factorize,
    is_natural,
    iter_nat_transforms,
    nat_transforms,
)
from nucleuskit.setcat.profunctor import (
    Profunctor,
    constant_profunctor,
    hom_profunctor,
    relation_profunctor,
    vector_profunctor,
)
from nucleuskit.setcat.kan import phi_lower, phi_upper
from nucleuskit.setcat.monad import MonadImage, PresheafMonad, comonad_of, monad_of
from nucleuskit.setcat.algebras import (
    Algebra,
    canonical_presentation,
    enumerate_algebras,
    enumerate_coalgebras,
    free_algebra,
)
from nucleuskit.setcat.extension import (
    ExtensionMatrix,
    loose_extension,
    tight_extension,
    transpose,
)
from nucleuskit.setcat.diagrams import (
    comma_components,
    diagram_postsheaf,
    diagram_presheaf,
    liminf_cat,
    limsup_cat,
)
from nucleuskit.setcat.yoneda import matrix_yoneda_check, matrix_yoneda_check_dual

__all__ = [
    "FinCategory",
    "FinFunctor",
    "Presheaf",
    "Postsheaf",
    "yoneda_pre",
    "yoneda_post",
    "nat_transforms",
    "iter_nat_transforms",
    "is_natural",
    "epi_mono_factorize",
    "Profunctor",
    "hom_profunctor",
    "constant_profunctor",
    "vector_profunctor",
    "relation_profunctor",
    "phi_upper",
    "phi_lower",
    "MonadImage",
    "PresheafMonad",
    "monad_of",
    "comonad_of",
    "Algebra",
    "enumerate_algebras",
    "enumerate_coalgebras",
    "free_algebra",
    "canonical_presentation",
    "ExtensionMatrix",
    "loose_extension",
    "tight_extension",
    "transpose",
    "diagram_postsheaf",
    "diagram_presheaf",
    "comma_components",
    "liminf_cat",
    "limsup_cat",
    "matrix_yoneda_check",
    "matrix_yoneda_check_dual",
]
