"""Exception hierarchy shared by all cbcalc modules."""


class CBCalcError(Exception):
    pass


class ParseError(CBCalcError, ValueError):
    """Malformed text input; ``position`` is a 0-based character offset."""

    def __init__(self, message, position=None, text=None):
        self.position = position
        self.text = text
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class DegreeOfZero(CBCalcError, ValueError):
    pass


class DescriptorError(CBCalcError, ValueError):
    pass


class AmbiguousBound(CBCalcError):
    pass


class NotComputable(CBCalcError):
    pass


class HypothesisNotEstablished(CBCalcError):
    pass


class ArityError(CBCalcError, ValueError):
    pass


class NotAnEndomorphism(CBCalcError, ValueError):
    pass


class NotInvertible(CBCalcError, ArithmeticError):
    pass


class ValuationOfZero(CBCalcError, ValueError):
    pass


class CatalogError(CBCalcError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class VerificationFailure(CBCalcError):
    def __init__(self, check, detail="", report=None):
        self.check = check
        self.detail = detail
        self.report = report
        super().__init__(f"verification {check!r} failed: {detail}" if detail else f"verification {check!r} failed")


class TooLarge(CBCalcError):
    pass
