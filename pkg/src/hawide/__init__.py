"""Combinatorics, explicit modules and wide subcategories for the d-cluster
tilting categories ``M(n, d)`` of higher Auslander algebras of type A."""

from .classify import (
    Collection,
    admissible_sets,
    is_noninterlacing,
    recognize_wide,
    relabel,
    subcategory_of,
    wide_closure,
)
from .counting import (
    InterlaceGraph,
    count_wide,
    count_wide_stats,
    enumerate_collections,
    reference_counts,
)
from .homology import complex_homology_dims, ext_oracle, hom_dim_oracle, rank
from .quiver import build_quiver, to_dot, to_json
from .reps import (
    build_module,
    canonical_hom,
    classify_proj_inj,
    ext_sequence,
    resolution,
    support,
)
from .tuples import (
    AdmissibleSet,
    IncTuple,
    cokernel_witness,
    e_ext,
    e_hom,
    generate_tuples,
    kernel_witness,
    sets_interlace,
    sigma,
    tuples_interlace,
    tuples_of_set,
)

__version__ = "0.1.0"
