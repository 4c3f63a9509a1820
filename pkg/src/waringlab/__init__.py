"""Exact verification workbench for a rank-18 Waring decomposition of the
trace cubic form tr(X^3) on 3x3 matrices, its symmetry group, the Hesse
configuration of its rank-one block, and a floating-point decomposition
search engine."""

from .qfield import FieldElem, Rational, rational
from .symtensor import (
    CubicForm,
    SquareMatrix,
    evaluate,
    pairing_cube,
    pullback,
    scale_add,
    sm_value,
    trace_cubic_form,
)
from .decomposition import (
    VerificationReport,
    WaringDecomposition,
    decomposition_matrices,
    matrix_rank,
    projection_factor,
    tensor_equiv,
    verify_waring,
)

__all__ = [
    "FieldElem",
    "Rational",
    "rational",
    "CubicForm",
    "SquareMatrix",
    "evaluate",
    "pairing_cube",
    "pullback",
    "scale_add",
    "sm_value",
    "trace_cubic_form",
    "VerificationReport",
    "WaringDecomposition",
    "decomposition_matrices",
    "matrix_rank",
    "projection_factor",
    "tensor_equiv",
    "verify_waring",
]

__version__ = "0.1.0"
