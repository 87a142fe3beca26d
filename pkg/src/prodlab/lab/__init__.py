from .analysis import (
    abelian_fstar_equiv_test,
    bounded_subgroup_probe,
    check_cauchy_productive,
    check_f_cauchy_productive,
    check_f_productive,
    check_f_productive_set,
    check_left_cauchy,
    check_null_sequence,
    check_productive,
    product_support_criterion,
    sample_bijection,
)
from .bounds import (
    OMEGA,
    BoundFunction,
    IntWeightSeq,
    bound_le,
    decompose_weights,
    f_omega,
    f_one,
    split_weights,
    weights_within,
)
from .concrete import (
    BoundedIntSeqValue,
    CirclePoint,
    CyclicValue,
    FinSupPermutation,
    IntTauP,
    PadicInt,
    TruncatedProductValue,
    basis_vector,
    circle_point,
    cycle,
    embed_int_tau_p,
    int_to_padic,
    padic_to_residue,
    product_value,
    transposition,
)
from .config import ExperimentConfig, load_config, parse_config, parse_tolerance, run_experiment
from .constructions import (
    NestedBasis,
    build_f_cauchy_set,
    cantor_scheme,
    make_nested_basis,
    reshuffle_bound_check,
)
from .exceptions import (
    ArgumentError,
    ConfigError,
    DegenerateInputError,
    DepthExhaustedError,
    DescriptorMismatchError,
    DomainError,
    ProdlabError,
    UnknownSuiteError,
    UnsupportedError,
)
from .families import (
    a_n_at,
    boolean_combination,
    build_a_n,
    choose_signs,
    density_probe,
    ESet,
    e_set,
    e_set_witness,
    family_S,
    family_T,
    g_z,
    kp_prime,
    linked_witnesses,
    monothetic_generators,
    split_test,
    support_overlap_check,
    surjection,
)
from .groups import (
    GroupDescriptor,
    GroupSequence,
    bounded_int_seq_group,
    circle_group,
    cyclic_group,
    distance,
    identity,
    int_padic_group,
    inverse,
    norm,
    op,
    padic_group,
    partial_products,
    power,
    product_group,
    segment_product,
    sym_fin_group,
    two_sided_distance,
)
from .numtheory import crt_multiple, iterated_approx, padic_approx_solve, valuation
from .suites import SUITES, run_suite, suite_names
from .verdict import AnalysisConfig, ProductiveReport, Status, Verdict

__all__ = [
    # Groups
    "GroupDescriptor",
    "GroupSequence",
    "padic_group",
    "int_padic_group",
    "circle_group",
    "cyclic_group",
    "sym_fin_group",
    "product_group",
    "bounded_int_seq_group",
    "op",
    "inverse",
    "identity",
    "distance",
    "two_sided_distance",
    "norm",
    "power",
    "partial_products",
    "segment_product",
    # Concrete elements
    "PadicInt",
    "CirclePoint",
    "IntTauP",
    "CyclicValue",
    "FinSupPermutation",
    "TruncatedProductValue",
    "BoundedIntSeqValue",
    "int_to_padic",
    "padic_to_residue",
    "circle_point",
    "embed_int_tau_p",
    "transposition",
    "cycle",
    "product_value",
    "basis_vector",
    # Number theory
    "valuation",
    "padic_approx_solve",
    "iterated_approx",
    "crt_multiple",
    # Bounds and weights
    "OMEGA",
    "BoundFunction",
    "IntWeightSeq",
    "f_omega",
    "f_one",
    "bound_le",
    "decompose_weights",
    "weights_within",
    "split_weights",
    # Analysis
    "AnalysisConfig",
    "Status",
    "Verdict",
    "ProductiveReport",
    "check_left_cauchy",
    "check_null_sequence",
    "check_cauchy_productive",
    "check_productive",
    "check_f_cauchy_productive",
    "check_f_productive",
    "check_f_productive_set",
    "sample_bijection",
    "abelian_fstar_equiv_test",
    "product_support_criterion",
    "bounded_subgroup_probe",
    # Constructions
    "NestedBasis",
    "make_nested_basis",
    "reshuffle_bound_check",
    "build_f_cauchy_set",
    "cantor_scheme",
    # Set families and K_P
    "surjection",
    "linked_witnesses",
    "family_S",
    "family_T",
    "boolean_combination",
    "kp_prime",
    "a_n_at",
    "build_a_n",
    "g_z",
    "choose_signs",
    "ESet",
    "e_set",
    "e_set_witness",
    "support_overlap_check",
    "split_test",
    "density_probe",
    "monothetic_generators",
    # Suites and configs
    "SUITES",
    "run_suite",
    "suite_names",
    "ExperimentConfig",
    "load_config",
    "parse_config",
    "parse_tolerance",
    "run_experiment",
    # Exceptions
    "ProdlabError",
    "ArgumentError",
    "DescriptorMismatchError",
    "DomainError",
    "DegenerateInputError",
    "UnsupportedError",
    "DepthExhaustedError",
    "ConfigError",
    "UnknownSuiteError",
]
