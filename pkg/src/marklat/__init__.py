"""Lattices of mark words and their extremal numbers.

L(n, r) orders the 2^n words over an alphabet of r positive marks, a
zero mark and n - r negative marks.  The package builds the lattice and
its cover diagram, counts words by rank, evaluates exact rational
valuations, and computes the extremal numbers by enumerating weighted
labelings with exact feasibility checks.
"""

from .boolmaps import (
    AxiomCheck,
    BooleanMap,
    ExtremalReport,
    ExtremalResult,
    RepresentabilityResult,
    check_axioms,
    enumerate_wbm,
    gamma,
    gamma_d,
    gamma_tilde,
    gamma_tilde_d,
    is_representable,
    psi,
    wb_vs_rwb_report,
)
from .core import (
    DeltaVector,
    LatticeParams,
    Symbol,
    Word,
    ZERO,
    bool_intersect,
    bool_union,
    cartesian_merge,
    cartesian_split,
    complement,
    delta,
    enumerate_d_slice,
    enumerate_words,
    is_cover,
    iso_to_conjugate,
    join,
    leq,
    meet,
    nonzero_count,
    parse_word,
    rank,
    transpose,
    word_from_subset,
)
from .counting import (
    RankPolynomial,
    check_symmetry,
    rank_polynomial,
    s_bruteforce,
    s_convolution,
    s_recursive,
    total_rank,
    write_census_csv,
)
from .errors import DomainError, LatticeError, ResourceLimitError, ValidationError
from .hasse import GenOrder, HasseDiagram, build, children, generating_indexes, split_parts, to_dot
from .weights import (
    NrFunction,
    alpha_count,
    induced_map,
    load_f85,
    load_nr_function,
    phi_count,
    random_nr_function,
    sigma,
)

__version__ = "0.1.0"

__all__ = [
    "AxiomCheck",
    "BooleanMap",
    "DeltaVector",
    "DomainError",
    "ExtremalReport",
    "ExtremalResult",
    "GenOrder",
    "HasseDiagram",
    "LatticeError",
    "LatticeParams",
    "NrFunction",
    "RankPolynomial",
    "RepresentabilityResult",
    "ResourceLimitError",
    "Symbol",
    "ValidationError",
    "Word",
    "ZERO",
    "alpha_count",
    "bool_intersect",
    "bool_union",
    "build",
    "cartesian_merge",
    "cartesian_split",
    "check_axioms",
    "check_symmetry",
    "children",
    "complement",
    "delta",
    "enumerate_d_slice",
    "enumerate_wbm",
    "enumerate_words",
    "gamma",
    "gamma_d",
    "gamma_tilde",
    "gamma_tilde_d",
    "generating_indexes",
    "induced_map",
    "is_cover",
    "is_representable",
    "iso_to_conjugate",
    "join",
    "leq",
    "load_f85",
    "load_nr_function",
    "meet",
    "nonzero_count",
    "parse_word",
    "phi_count",
    "psi",
    "rank",
    "rank_polynomial",
    "random_nr_function",
    "s_bruteforce",
    "s_convolution",
    "s_recursive",
    "sigma",
    "split_parts",
    "to_dot",
    "total_rank",
    "transpose",
    "wb_vs_rwb_report",
    "word_from_subset",
    "write_census_csv",
]
