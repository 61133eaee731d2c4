"""Super commuting graphs of finite groups and their spectra.

Build finite groups from Cayley tables or named families, lift their
commuting graphs through an equivalence relation on the vertices, express the
result as a generalized join of cliques, and compute adjacency and Laplacian
spectra by explicit eigensolvers, exact characteristic polynomials, and
quotient-matrix closed forms that cross-validate one another.
"""

from .errors import (
    ArityMismatch,
    CanonicalAmbiguity,
    FormatError,
    InvalidParameter,
    NoConvergence,
    NoSignChange,
    NotAGroup,
    NotSymmetric,
    OutOfRange,
    SizeMismatch,
    SupergraphError,
    UnsupportedClosedForm,
)
from .graphs import (
    SimpleGraph,
    TwinForm,
    commuting_graph,
    complete_graph,
    compressed_graph,
    connected_components,
    generalized_join,
    is_complete,
    is_connected,
    is_spanning_subgraph,
    star_graph,
    super_graph,
    twin_canonical_form,
)
from .groups import (
    FiniteGroup,
    cyclic,
    dihedral,
    from_cayley_table,
    generalized_quaternion,
    is_prime,
    read_cayley_file,
    semidirect_pq,
    write_cayley_file,
)
from .partitions import (
    Partition,
    conjugacy_partition,
    greatest_partition,
    least_partition,
    order_partition,
    refines,
)
from .polynomials import PolynomialZ, char_poly_integer
from .spectra import (
    QuotientMatrix,
    Spectrum,
    Surd,
    grouped_match,
    interlacing_check,
    jacobi_eigenvalues,
    multiset_match,
    quotient_matrix,
    quotient_spectrum,
    real_root_isolate,
    spectrum_from_integer_charpoly,
    star_join_adjacency_charpoly,
    star_join_laplacian_spectrum,
    super_adjacency_charpoly,
    super_laplacian_charpoly,
    surd_value,
    uniform_star_join_adjacency_spectrum,
)
from .verify import (
    ClaimReport,
    closed_form,
    run_suite,
    verify_generic,
    verify_spectral,
    verify_structure,
)

__version__ = "0.1.0"

__all__ = [
    "ArityMismatch",
    "CanonicalAmbiguity",
    "ClaimReport",
    "FiniteGroup",
    "FormatError",
    "InvalidParameter",
    "NoConvergence",
    "NoSignChange",
    "NotAGroup",
    "NotSymmetric",
    "OutOfRange",
    "Partition",
    "PolynomialZ",
    "QuotientMatrix",
    "SimpleGraph",
    "SizeMismatch",
    "Spectrum",
    "SupergraphError",
    "Surd",
    "TwinForm",
    "UnsupportedClosedForm",
    "char_poly_integer",
    "closed_form",
    "commuting_graph",
    "complete_graph",
    "compressed_graph",
    "conjugacy_partition",
    "connected_components",
    "cyclic",
    "dihedral",
    "from_cayley_table",
    "generalized_join",
    "generalized_quaternion",
    "greatest_partition",
    "grouped_match",
    "interlacing_check",
    "is_complete",
    "is_connected",
    "is_prime",
    "is_spanning_subgraph",
    "jacobi_eigenvalues",
    "least_partition",
    "multiset_match",
    "order_partition",
    "quotient_matrix",
    "quotient_spectrum",
    "read_cayley_file",
    "real_root_isolate",
    "refines",
    "run_suite",
    "semidirect_pq",
    "spectrum_from_integer_charpoly",
    "star_graph",
    "star_join_adjacency_charpoly",
    "star_join_laplacian_spectrum",
    "super_adjacency_charpoly",
    "super_graph",
    "super_laplacian_charpoly",
    "surd_value",
    "twin_canonical_form",
    "uniform_star_join_adjacency_spectrum",
    "verify_generic",
    "verify_spectral",
    "verify_structure",
    "write_cayley_file",
]
