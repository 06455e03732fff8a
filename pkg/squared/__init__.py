from .coalgebra import (
    CoalgebraHom,
    SquaredCoalgebra,
    SquaredComodule,
    canonical,
    canonical_comodule,
    check_coalgebra_hom,
    check_squared,
    check_squared_comodule,
    comodule_from_hom,
    comodule_morphism_sides,
    iota,
    is_comodule_morphism,
    trivial_comodule,
    unit_coalgebra,
)
from .tensor import barotimes_coaction, barotimes_coalg, comodule_barotimes
from .bicoalgebra import (
    Bicoalgebra,
    bicomodule_tensor,
    check_bicoalgebra,
    check_tensor_associative,
    check_tensor_unit,
    tensor_comodules,
    unit_comodule,
)
from .crossings import bar_object, double_braiding, partial_self_braiding, product_crossing
from .hopf_coalgebra import (
    AntipodeGenerator,
    HopfCoalgebra,
    check_antipode,
    check_dual_over_H,
    descend,
    dual_over_H,
    generator,
    left_from_right,
    left_opposite,
    opposite_from_generators,
    require_generating,
    right_opposite,
)
from .quasitriangular import QTHopfCoalgebra, bar_mult, braiding_R, braiding_R_inverse, check_braiding_R, check_qt
from .quasiclassical import (
    BarredBialgebra,
    bar,
    cbar_braidings,
    cbar_comodule,
    cbar_tensor_coaction,
    check_braided_bialgebra,
    check_cbar_braidings,
    check_cbar_comodule,
    check_comparison,
    check_quasiclassical_antipode,
    comparison_map,
    quasiclassical_antipode,
)
from .ribbon import RibbonHopfCoalgebra, check_ribbon, check_twist, theta_to_Theta, twist

__all__ = [
    "CoalgebraHom", "SquaredCoalgebra", "SquaredComodule", "canonical", "canonical_comodule",
    "check_coalgebra_hom", "check_squared", "check_squared_comodule", "comodule_from_hom",
    "comodule_morphism_sides", "iota", "is_comodule_morphism", "trivial_comodule",
    "unit_coalgebra", "barotimes_coaction", "barotimes_coalg", "comodule_barotimes",
    "Bicoalgebra", "bicomodule_tensor", "check_bicoalgebra", "check_tensor_associative",
    "check_tensor_unit", "tensor_comodules", "unit_comodule", "bar_object", "double_braiding",
    "partial_self_braiding", "product_crossing", "AntipodeGenerator", "HopfCoalgebra",
    "check_antipode", "check_dual_over_H", "descend", "dual_over_H", "generator",
    "left_from_right", "left_opposite", "opposite_from_generators", "require_generating",
    "right_opposite", "QTHopfCoalgebra", "bar_mult", "braiding_R", "braiding_R_inverse",
    "check_braiding_R", "check_qt", "BarredBialgebra", "bar", "cbar_braidings", "cbar_comodule",
    "cbar_tensor_coaction", "check_braided_bialgebra", "check_cbar_braidings",
    "check_cbar_comodule", "check_comparison", "check_quasiclassical_antipode",
    "comparison_map", "quasiclassical_antipode", "RibbonHopfCoalgebra", "check_ribbon",
    "check_twist", "theta_to_Theta", "twist",
]
