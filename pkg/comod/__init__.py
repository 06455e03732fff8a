from .comodule import (
    ComodMorphism,
    Comodule,
    barotimes,
    check_comodule,
    check_morphism,
    cokernel,
    comult_legs,
    direct_sum,
    exterior,
    from_coefficients,
    hom_space,
    image,
    intertwining_sides,
    kernel,
    leg_restriction,
    morphism,
    permute,
    restrict_ot,
    same_hopf,
    subcomodule,
    swap,
    tensor_V,
    tensor_all,
    trivial,
)
from .duality import (
    check_duality,
    check_jminus,
    check_jplus,
    copairing,
    double_dual,
    dual,
    dual_morphism,
    jminus,
    jplus,
    pairing,
)
from .braiding import (
    U_VARIANTS,
    braiding,
    braiding_inverse,
    check_braiding,
    check_naturality,
    drinfeld_u,
    form_on_legs,
    zeta,
    zeta_matrices,
)

__all__ = [
    "ComodMorphism", "Comodule", "barotimes", "check_comodule", "check_morphism", "cokernel",
    "comult_legs", "direct_sum", "exterior", "from_coefficients",
    "hom_space", "image", "intertwining_sides", "kernel", "leg_restriction",
    "morphism", "permute", "restrict_ot", "same_hopf", "subcomodule", "swap", "tensor_V",
    "tensor_all", "trivial", "check_duality", "check_jminus", "check_jplus", "copairing",
    "double_dual", "dual", "dual_morphism", "jminus", "jplus", "pairing", "U_VARIANTS",
    "braiding", "braiding_inverse", "check_braiding", "check_naturality", "drinfeld_u",
    "form_on_legs", "zeta", "zeta_matrices",
]
