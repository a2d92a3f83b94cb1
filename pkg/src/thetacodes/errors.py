"""Exception hierarchy. Each class carries a stable ``code`` used by the CLI."""


class ThetaCodesError(Exception):
    code = "ERROR"


class NotAdmissible(ThetaCodesError):
    code = "NOT_ADMISSIBLE"


class NotSquarefree(NotAdmissible):
    code = "NOT_SQUAREFREE"


class NonDivisibleExponent(ThetaCodesError):
    code = "NON_DIVISIBLE_EXPONENT"


class ArityMismatch(ThetaCodesError):
    code = "ARITY_MISMATCH"


class KindMismatch(ThetaCodesError):
    code = "KIND_MISMATCH"


class LengthMismatch(ThetaCodesError):
    code = "LENGTH_MISMATCH"


class LengthTooLarge(ThetaCodesError):
    code = "LENGTH_TOO_LARGE"


class NotBinaryLinear(ThetaCodesError):
    code = "NOT_BINARY_LINEAR"


class RingLevelMismatch(ThetaCodesError):
    code = "RING_LEVEL_MISMATCH"


class BadExponents(ThetaCodesError):
    code = "BAD_EXPONENTS"


class InsufficientPrecision(ThetaCodesError):
    code = "INSUFFICIENT_PRECISION"


class InconsistentTarget(ThetaCodesError):
    code = "INCONSISTENT_TARGET"


class FamilyTooLarge(ThetaCodesError):
    code = "FAMILY_TOO_LARGE"


class ParseError(ThetaCodesError):
    code = "PARSE_ERROR"
