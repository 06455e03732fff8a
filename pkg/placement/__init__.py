from .parser import SEPARATORS, UNIT_NAME, Operand, PlacementExpr, Slot, format_slot, normalize, parse, print_expr
from .realize import Trace, placement_sides, realize, realize_morphism

__all__ = [
    "SEPARATORS", "UNIT_NAME", "Operand", "PlacementExpr", "Slot", "format_slot", "normalize",
    "parse", "print_expr", "Trace", "placement_sides", "realize", "realize_morphism",
]
