"""Whitehouse complex toolkit.

Laminar face enumeration, the five growth moves and their Morse matching,
exact simplicial homology (prime-field and integer), link decomposition,
and the Hilbert series of the associated quadratic face ring.
"""

from .complexes import (
    FacePoset,
    FVector,
    HVector,
    SimplicialComplex,
    f_vector_of,
    h_vector_of,
)
from .hilbert import (
    REFERENCE_NUMERATORS,
    HilbertSeries,
    KoszulEvidence,
    Table1Report,
    hilbert_series,
    koszul_evidence,
    verify_table1,
)
from .homology import (
    FIELD_PRIMES,
    BettiProfile,
    ReisnerReport,
    boundary_matrices,
    boundary_square_is_zero,
    reduced_betti,
    reisner_check,
    smith_normal_form,
)
from .morse import (
    AcyclicityReport,
    CriticalReport,
    MorseMatching,
    build_matching,
    characterize_critical,
    covers_all_faces,
    critical_census,
    split_tower_faces,
    verify_acyclic,
)
from .partitions import (
    BlockSet,
    StablePartition,
    a_value,
    compatible,
    ideal_generators,
    to_partition,
    vertices,
)
from .whitehouse import (
    Face,
    Forest,
    add_block_above,
    add_block_around_all,
    add_leaf_into,
    add_leaf_outside,
    build_direct,
    build_recursive,
    f_recurrence,
    facet_count,
    forest_of,
    h_recurrence,
    link_complex,
    link_decomposition,
    link_wedge_profile,
    mask_faces,
    split_leaf,
    total_face_count,
)

__version__ = "0.1.0"

__all__ = [
    "AcyclicityReport",
    "BettiProfile",
    "BlockSet",
    "CriticalReport",
    "FIELD_PRIMES",
    "Face",
    "FacePoset",
    "FVector",
    "Forest",
    "HVector",
    "HilbertSeries",
    "KoszulEvidence",
    "MorseMatching",
    "REFERENCE_NUMERATORS",
    "ReisnerReport",
    "SimplicialComplex",
    "StablePartition",
    "Table1Report",
    "a_value",
    "add_block_above",
    "add_block_around_all",
    "add_leaf_into",
    "add_leaf_outside",
    "boundary_matrices",
    "boundary_square_is_zero",
    "build_direct",
    "build_matching",
    "build_recursive",
    "characterize_critical",
    "compatible",
    "covers_all_faces",
    "critical_census",
    "f_recurrence",
    "f_vector_of",
    "facet_count",
    "forest_of",
    "h_recurrence",
    "h_vector_of",
    "hilbert_series",
    "ideal_generators",
    "koszul_evidence",
    "link_complex",
    "link_decomposition",
    "link_wedge_profile",
    "mask_faces",
    "reduced_betti",
    "reisner_check",
    "smith_normal_form",
    "split_leaf",
    "split_tower_faces",
    "to_partition",
    "total_face_count",
    "verify_acyclic",
    "verify_table1",
    "vertices",
    "__version__",
]
