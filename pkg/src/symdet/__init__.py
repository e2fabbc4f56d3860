"""Symmetric determinantal representations of polynomials over fields of characteristic 2."""

from .alternating import alt_build, alt_representable, alt_verify, alt_witness
from .errors import (
    ContextMismatch,
    DivisionByZero,
    InvalidEntry,
    NonInvertiblePivot,
    NotAlternating,
    NotASquare,
    NotRepresentable,
    ParseError,
    SymdetError,
    TooLarge,
    UnsupportedCharacteristic,
)
from .extract import RingFactorization, extract_factorization
from .factor import FactorTrace, is_factor, is_factor_traced, merge, prep, sym_det
from .field import GF2, FieldElement, FieldSpec
from .gadgets import (
    GsdrMatrix,
    QuadraticForm,
    SquareGadget,
    WeightedGraph,
    gadget_product,
    gadget_replace_edge,
    gadget_replace_loop,
    gadget_square,
    gadget_wheel,
    gsdr_to_sdr,
    linear_sdr,
    wheel_graph,
)
from .poly import Polynomial, parse_poly
from .quotient import QuotientContext, QuotientElement
from .serialize import load_matrix, matrix_from_dict, matrix_to_dict, save_matrix
from .symmat import (
    PolyMatrix,
    SdrMatrix,
    add_multiple,
    clean,
    dedup_diagonal,
    det,
    det_constant,
    det_involution,
    det_subset,
    isolate,
    pfaffian,
    project,
)

__version__ = "0.1.0"
