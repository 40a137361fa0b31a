"""Soft groups over finite signed-permutation carriers.

The package provides finite signed-permutation groups, signed compositions
and bi-partitions with their sorting maps, reflection subgroups, soft groups
and soft homomorphisms with full diagram validation, and categorical
constructions (final object, products, monic/epic analysis) on top of them.
"""

from ._kernels import BACKEND
from .category import (
    CategoricalProduct,
    MonoidalReport,
    MorphismVerdict,
    ScaleBoundError,
    categorical_product,
    categorical_product_n,
    check_epic,
    check_monic,
    check_split_monic,
    enumerate_soft_homs,
    final_object,
    mediating_morphism,
    monoidal_sanity,
    seeded_universe,
    unique_morphism_to_final,
    verify_cancellation_witness,
)
from .compositions import (
    BiPartition,
    SignedComposition,
    bipartition_shape,
    bipartitions,
    canonical_composition,
    partitions,
    reflection_generators,
    reflection_subgroup,
    signed_compositions,
)
from .hyperoctahedral import (
    bipartition_soft_group,
    coxeter_relation_checks,
    hyperoctahedral_group,
    hyperoctahedral_order,
    signed_composition_soft_group,
    sorting_soft_hom,
    symmetric_subgroup,
)
from .permutation import (
    DegreeMismatchError,
    DirectProduct,
    FiniteGroup,
    GroupHom,
    NotAHomomorphismError,
    SignedPermutation,
    adjacent_transposition,
    closure,
    compose,
    direct_product,
    direct_product_n,
    enumerate_group_homs,
    generating_subset,
    hom_from_generator_images,
    identity_hom,
    is_subgroup,
    kernel,
    sign_change,
    subgroups,
    trivial_hom,
)
from .soft import (
    KernelReport,
    SoftGroup,
    SoftHom,
    SoftValidationError,
    compose_soft_homs,
    identity_soft_hom,
    inclusion_soft_hom,
    is_soft_subset,
    kernel_triviality_report,
    soft_kernel,
    soft_product,
    soft_product_n,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BiPartition",
    "CategoricalProduct",
    "DegreeMismatchError",
    "DirectProduct",
    "FiniteGroup",
    "GroupHom",
    "KernelReport",
    "MonoidalReport",
    "MorphismVerdict",
    "NotAHomomorphismError",
    "ScaleBoundError",
    "SignedComposition",
    "SignedPermutation",
    "SoftGroup",
    "SoftHom",
    "SoftValidationError",
    "adjacent_transposition",
    "bipartition_shape",
    "bipartition_soft_group",
    "bipartitions",
    "canonical_composition",
    "categorical_product",
    "categorical_product_n",
    "check_epic",
    "check_monic",
    "check_split_monic",
    "closure",
    "compose",
    "compose_soft_homs",
    "coxeter_relation_checks",
    "direct_product",
    "direct_product_n",
    "enumerate_group_homs",
    "enumerate_soft_homs",
    "final_object",
    "generating_subset",
    "hom_from_generator_images",
    "hyperoctahedral_group",
    "hyperoctahedral_order",
    "identity_hom",
    "identity_soft_hom",
    "inclusion_soft_hom",
    "is_soft_subset",
    "is_subgroup",
    "kernel",
    "kernel_triviality_report",
    "mediating_morphism",
    "monoidal_sanity",
    "partitions",
    "reflection_generators",
    "reflection_subgroup",
    "seeded_universe",
    "sign_change",
    "signed_composition_soft_group",
    "signed_compositions",
    "soft_kernel",
    "soft_product",
    "soft_product_n",
    "sorting_soft_hom",
    "subgroups",
    "symmetric_subgroup",
    "trivial_hom",
    "unique_morphism_to_final",
    "verify_cancellation_witness",
    "__version__",
]
