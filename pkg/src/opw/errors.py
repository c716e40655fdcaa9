"""Exception hierarchy shared by all opw modules."""


class OpwError(Exception):
    """Base class for all structured errors raised by opw."""


# -- tree calculus ----------------------------------------------------------

class DimensionMismatch(OpwError):
    pass


class DimensionTooLow(OpwError):
    pass


class MissingRoot(OpwError):
    pass


class DanglingAddress(OpwError):
    pass


class DecorationMismatch(OpwError):
    pass


class NotALeaf(OpwError):
    pass


class EdgeMismatch(OpwError):
    pass


class NotANode(OpwError):
    pass


class TargetMismatch(OpwError):
    pass


class NotInnerEdge(OpwError):
    pass


# -- category / presheaf layer ----------------------------------------------

class BudgetExceeded(OpwError):
    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class NotMinus(OpwError):
    pass


class UnknownObject(OpwError):
    pass


class TypeMismatch(OpwError):
    pass


class ShapeUniverseTooSmall(OpwError):
    pass


class NotInnerFace(OpwError):
    pass


class EmptyFaceSet(OpwError):
    pass


class NonCommutingSquare(OpwError):
    pass


class UnitNotMono(OpwError):
    pass


class TruncationTooSmall(OpwError):
    pass


# -- algebras ----------------------------------------------------------------

class NotParallel(OpwError):
    pass


class BoundOverflow(OpwError):
    pass


class BoundaryMismatch(OpwError):
    pass


class OutOfBound(OpwError):
    pass


# -- serialization ------------------------------------------------------------

class UnsupportedFormat(OpwError):
    pass


class ParseError(OpwError):
    pass
