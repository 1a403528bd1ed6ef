"""Case studies: groups, Zp-sets, posets and constant matrices"""

from nucleuskit.cases.verdict import Verdict
from nucleuskit.cases.groups import SMALL_GROUPS, FinGroup, group_as_category, small_group
from nucleuskit.cases.gsets import (
    GSet,
    equivariant_maps,
    gset_iso_classes,
    gset_upper,
    is_equivariant,
    is_isomorphic,
    power_gset,
)
from nucleuskit.cases.zp import (
    ZpTableCell,
    ZpVector,
    zp_hom_count,
    zp_retract_exists,
    zp_table_cell,
    zp_vectors,
)
from nucleuskit.cases.coequalizer import (
    check_reflexive_pair_shape,
    check_split_coequalizer,
    reflexive_set_pairs,
)
from nucleuskit.cases.posets import poset_equivalence_check, poset_tight_check
from nucleuskit.cases.retracts import (
    AdjunctionInstance,
    check_free_retract,
    check_iso_reflection,
    check_reflexive_pair_decomposition,
    check_repn_free,
    constant_instance,
    group_instance,
    image_closure_report,
    poset_instance,
    retract_image_closure,
    zp_instance,
)
from nucleuskit.cases.zp_table import check_reflexive_equalizer_zp, verify_zp_table
from nucleuskit.cases.constants import (
    check_constant_iso_reflection,
    check_constant_split_coequalizers,
    constant_matrix_report,
)

__all__ = [
    "Verdict",
    "FinGroup",
    "SMALL_GROUPS",
    "small_group",
    "group_as_category",
    "GSet",
    "equivariant_maps",
    "gset_iso_classes",
    "gset_upper",
    "is_equivariant",
    "is_isomorphic",
    "power_gset",
    "ZpVector",
    "ZpTableCell",
    "zp_hom_count",
    "zp_retract_exists",
    "zp_table_cell",
    "zp_vectors",
    "check_reflexive_pair_shape",
    "check_split_coequalizer",
    "reflexive_set_pairs",
    "poset_equivalence_check",
    "poset_tight_check",
    "AdjunctionInstance",
    "check_free_retract",
    "check_repn_free",
    "check_reflexive_pair_decomposition",
    "check_iso_reflection",
    "retract_image_closure",
    "image_closure_report",
    "constant_instance",
    "group_instance",
    "poset_instance",
    "zp_instance",
    "check_reflexive_equalizer_zp",
    "verify_zp_table",
    "check_constant_iso_reflection",
    "check_constant_split_coequalizers",
    "constant_matrix_report",
]
