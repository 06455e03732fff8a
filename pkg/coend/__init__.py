from .diagram import Arrow, Diagram
from .build import (
    CoendCoalgebra,
    build_coend,
    c58_report,
    check_coend,
    check_h_morphism,
    embedding_deficit,
    generator_for,
    h_morphism,
    reconstruct_comodule,
    reconstructed,
    relation_map,
)
from .induce import (
    antipode_generators,
    check_structures,
    default_twists,
    induce_antipode,
    induce_multiplication,
    induce_rmatrix,
    induce_ribbon,
)
from .opposite import check_opposite, dual_diagram, opposite_coend
from .fixtures import DIAGRAMS, builtin_diagram
from .demos import DEMOS, run_demo

__all__ = [
    "Arrow", "Diagram", "CoendCoalgebra", "build_coend", "c58_report", "check_coend",
    "check_h_morphism", "embedding_deficit", "generator_for", "h_morphism",
    "reconstruct_comodule", "reconstructed", "relation_map", "antipode_generators",
    "check_structures", "default_twists", "induce_antipode", "induce_multiplication",
    "induce_rmatrix", "induce_ribbon", "check_opposite", "dual_diagram", "opposite_coend",
    "DIAGRAMS", "builtin_diagram", "DEMOS", "run_demo",
]
