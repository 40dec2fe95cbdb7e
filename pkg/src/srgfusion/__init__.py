"""Exact fusion classification for tensor squares and wreath products of
strongly regular graph association schemes.

The package decides, entirely in exact arithmetic, which of the 4140
partitions of the eight non-identity classes of a tensor-square scheme give
fusions: thirteen hold for every rank-3 table algebra, a catalogued list of
parameter families (imprimitive, conference, and several one-parameter
families, plus two sporadic small tables) admit special-case fusions, and
every remaining partition carries a machine-checkable infeasibility
certificate.  A brute-force adjacency-matrix oracle independently confirms
positive verdicts on concrete graphs.
"""

__version__ = "0.1.0"

from .exact import (
    MultiPoly,
    MixedField,
    MissingSymbol,
    NonzeroCertificate,
    QuadraticValue,
    SieveMember,
    SieveSet,
    ZeroInput,
    default_sieve_set,
    poly_eval,
    poly_substitute,
    quad,
    sieve_nonzero,
)
from .scheme import (
    CharTable,
    EigenData,
    FeasibilityReport,
    InfeasibleParams,
    NonIntegralMultiplicity,
    SrgParams,
    char_table,
    eigen_from_params,
    eigen_from_values,
    feasibility,
    imprimitive_eigen,
    regular_matrices,
)
from .partitions import (
    SetPartition,
    bell_number,
    coarsenings,
    enumerate_partitions,
    format_partition,
    hasse_edges,
    parse,
    refines,
)
from .products import (
    FLIP,
    IndexPermutation,
    SWITCH,
    act,
    single_index,
    tensor_square_table,
    wreath_partition,
    wreath_table,
)
from .fusion import (
    FusionVerdict,
    IndexMismatch,
    NotAFusion,
    bm_check,
    fused_table,
    scan_all,
)
from .classifier import (
    ClassificationRecord,
    FamilySpec,
    classify_all,
    classify_partition,
    classify_wreath,
    family_catalog,
    family_match,
    guaranteed_partition_strings,
    potential_equality_graph,
    symbolic_tensor_table,
    verify_record,
)
from .oracle import (
    BadSpec,
    Graph01,
    IntersectionTensor,
    NotStronglyRegular,
    SchemeMatrices,
    build_graph,
    cross_check,
    scheme_matrices,
    srg_params,
    tensor_fuse,
    verify_scheme,
)

__all__ = [name for name in dir() if not name.startswith("_")]
