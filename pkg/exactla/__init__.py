from .field import Field
from .matrix import (
    Matrix,
    add,
    apply_on_factors,
    cokernel,
    columns,
    compose,
    entry,
    equal,
    first_difference,
    from_rows,
    hstack,
    identity,
    inverse,
    is_invertible,
    is_zero,
    kernel_basis,
    kron,
    kron_all,
    matmul,
    permute_factors,
    rank,
    rows_of,
    rref,
    scalar_matrix,
    scale,
    solve,
    submatrix,
    to_rows,
    transpose,
    vstack,
    zeros,
)

__all__ = [
    "Field", "Matrix", "add", "apply_on_factors", "cokernel", "columns", "compose", "entry",
    "equal", "first_difference", "from_rows", "hstack", "identity", "inverse", "is_invertible",
    "is_zero", "kernel_basis", "kron", "kron_all", "matmul", "permute_factors", "rank", "rows_of",
    "rref", "scalar_matrix", "scale", "solve", "submatrix", "to_rows", "transpose", "vstack",
    "zeros",
]
