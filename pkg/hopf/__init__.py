from .algebra import (
    HopfAlgebra,
    antipode_inverse,
    check_cqt,
    check_hopf,
    counit_power,
    rform_inverse,
    tensor_power,
    unit_power,
)
from .fixtures import builtin, sweedler_zeta_character

__all__ = [
    "HopfAlgebra", "antipode_inverse", "check_cqt", "check_hopf", "counit_power",
    "rform_inverse", "tensor_power", "unit_power", "builtin",
    "sweedler_zeta_character",
]
