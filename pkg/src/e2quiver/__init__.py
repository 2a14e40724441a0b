"""Exact computations for modules over the planar Euclidean algebra and
representations of type-A preprojective algebras.

The two sides are equivalent categories, and the package keeps the
dictionary computable in both directions: build modules from Young
diagrams, check relations and nilpotency, compute Hom spaces and
endomorphism algebras, decide indecomposability and isomorphism, split
direct sums, test framed stability, and evaluate the moduli dimension
formula.  All arithmetic is exact rational.
"""

from .linalg import Matrix, frac, kernel_basis, rank, solve, trace
from .quiver import (
    Arrow,
    DimensionVector,
    RelationTerm,
    Window,
    double_arrows,
    gp_relation,
    window_of_support,
)
from .preproj import (
    DECOMPOSABLE,
    INDECOMPOSABLE,
    UNRESOLVED,
    EndAlgebra,
    HomSpace,
    QuiverRep,
    apply_gv,
    check_relations,
    decompose,
    direct_sum,
    end_algebra,
    hom_basis,
    is_indecomposable,
    is_isomorphic,
    is_nilpotent,
    random_gv,
    split,
)
from .euclid import (
    EuclideanModule,
    WeightRunReport,
    apply_word,
    basis_vectors,
    char_shift,
    from_quiver,
    hom_dimension,
    proj,
    to_quiver,
    validate,
    weight_runs,
)
from .moduli import (
    FramedPoint,
    GeneratorSet,
    Partition,
    apply_gv_framed,
    enumerate_thin_decomposables,
    enumerate_thin_indecomposables,
    framed_equivalent,
    framed_point,
    invariant_closure,
    is_stable,
    nakajima_dim,
    partitions,
    partitions_up_to,
    residue_dim_vector,
    single_generator_check,
    young_module,
)

__version__ = "0.1.0"

__all__ = [
    "Matrix",
    "frac",
    "rank",
    "kernel_basis",
    "solve",
    "trace",
    "DimensionVector",
    "Window",
    "Arrow",
    "RelationTerm",
    "window_of_support",
    "double_arrows",
    "gp_relation",
    "QuiverRep",
    "HomSpace",
    "EndAlgebra",
    "check_relations",
    "is_nilpotent",
    "hom_basis",
    "end_algebra",
    "is_indecomposable",
    "split",
    "decompose",
    "direct_sum",
    "is_isomorphic",
    "apply_gv",
    "random_gv",
    "INDECOMPOSABLE",
    "DECOMPOSABLE",
    "UNRESOLVED",
    "EuclideanModule",
    "validate",
    "to_quiver",
    "from_quiver",
    "char_shift",
    "apply_word",
    "basis_vectors",
    "proj",
    "weight_runs",
    "WeightRunReport",
    "hom_dimension",
    "FramedPoint",
    "GeneratorSet",
    "Partition",
    "partitions",
    "partitions_up_to",
    "residue_dim_vector",
    "young_module",
    "framed_point",
    "invariant_closure",
    "is_stable",
    "framed_equivalent",
    "apply_gv_framed",
    "nakajima_dim",
    "enumerate_thin_indecomposables",
    "enumerate_thin_decomposables",
    "single_generator_check",
]
