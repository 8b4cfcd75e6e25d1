"""Exception types raised by moncurve."""


class MoncurveError(Exception):
    """Base class for all library errors."""


class PolynomialSyntaxError(MoncurveError, ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class CurveValidationError(MoncurveError, ValueError):
    pass


class NonPositiveEntry(CurveValidationError):
    pass


class NotPrimitive(CurveValidationError):
    pass


class NonpositiveLambda(MoncurveError, ValueError):
    pass


class DegenerateSlice(MoncurveError, ValueError):
    pass


class DegenerateCone(MoncurveError, ValueError):
    pass


class RayNotInCone(MoncurveError, ValueError):
    pass


class NotOnDividingLine(MoncurveError, ValueError):
    pass


class RayOutsideCone(MoncurveError, ValueError):
    pass


class WholePlaneOrthogonal(MoncurveError, ValueError):
    pass


class EmbeddedConditionViolated(MoncurveError, RuntimeError):
    pass


class BoxBoundExceeded(MoncurveError, RuntimeError):
    """An enumeration box turned out too small; indicates a bug, not bad input."""
