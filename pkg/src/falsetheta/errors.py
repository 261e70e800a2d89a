"""Exception hierarchy shared by every module."""


class FalseThetaError(ValueError):
    pass


class NonPositivePart(FalseThetaError):
    pass


class DuplicateOverline(FalseThetaError):
    pass


class InvalidPair(FalseThetaError):
    """A (k, overpartition) pair violates its family's constraints."""


class ZWeightUndefined(FalseThetaError):
    pass


class NotApplicable(FalseThetaError):
    """Operation only exists for the General(m, r) families."""


class NotDefined(FalseThetaError):
    """A diagram map produced a shape or overline pattern that is not a valid pair."""


class InternalInconsistency(FalseThetaError):
    """The global involution hit an impossible branch; always a bug."""


class TruncationMismatch(FalseThetaError):
    pass


class NonUnitConstant(FalseThetaError):
    pass


class InvalidFamily(FalseThetaError):
    pass
