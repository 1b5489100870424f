"""Exact arithmetic for the deformed algebra of Feynman-like labelled diagrams."""
from .diagram import (
    EMPTY,
    Monomial,
    UnlabelledDiagram,
    WeightMatrix,
    canonical_unlabel,
    concat,
    deck,
    enumerate_by_weight,
    factor_irreducibles,
    format_matrix,
    monomial_of,
    parse_matrix,
    restrict_columns,
    restrict_rows,
    validate,
)
from .formal import DiagramSum, TensorSum, bilinear_extend, sum_combine
from .hopf import (
    LDIAG,
    MQSYM,
    AxiomReport,
    HopfStructure,
    antipode,
    coproduct_t0,
    coproduct_t1,
    counit,
    verify_hopf_axioms,
)
from .oracles import (
    black_weight_word,
    mqsym_oracle_product,
    mzv_truncated,
    quasi_shuffle,
    stuffle_check,
)
from .poly import QC, QS, DeformPoly, parse_poly, poly_arith, poly_eval
from .product import Placement, deformed_product, enumerate_placements, realize

__version__ = "0.1.0"
