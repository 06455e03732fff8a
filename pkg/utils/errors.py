from typing import Optional


class ShcError(ValueError):
    """Base error for malformed input and broken well-definedness"""


class ShapeMismatch(ShcError):
    pass


class Inconsistent(ShcError):
    pass


class Singular(ShcError):
    pass


class NotInvertible(ShcError):
    pass


class UnknownFixture(ShcError):
    pass


class MissingRoot(ShcError):
    pass


class HopfMismatch(ShcError):
    pass


class LevelMismatch(ShcError):
    pass


class BadPosition(ShcError):
    pass


class BadPermutation(ShcError):
    pass


class SingularAntipode(ShcError):
    pass


class NoRForm(ShcError):
    pass


class NotNatural(ShcError):
    pass


class ParseError(ShcError):
    def __init__(self, message: str, position: int = 0, text: str = ""):
        self.position = position
        self.text = text
        super().__init__(f"{message} at position {position}")


class DuplicateIndex(ParseError):
    pass


class NonContiguousTargets(ParseError):
    pass


class BadOrderSet(ParseError):
    pass


class ArityMismatch(ShcError):
    pass


class NotAMorphism(ShcError):
    def __init__(self, message: str, witness: Optional[tuple] = None):
        self.witness = witness
        if witness is not None:
            row, col, lhs, rhs = witness
            message = f"{message} (first difference at [{row}, {col}]: {lhs} != {rhs})"
        super().__init__(message)


class NotACoalgebraHom(ShcError):
    pass


class MissingZeta(ShcError):
    pass


class NotGenerating(ShcError):
    pass


class WellDefinednessFailure(ShcError):
    pass


class UnknownObject(ShcError):
    pass


class NotMonoidalDiagram(ShcError):
    pass


class NotDualClosed(ShcError):
    pass


class NoRibbonData(ShcError):
    pass


class FieldMismatch(ShcError):
    pass
