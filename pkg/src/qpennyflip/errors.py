"""Exception types.

Two families: bad caller input (``ValueError`` subclasses, mapped to exit
code 1 by the CLI) and numerical invariant failures (``NumericalError``,
mapped to exit code 2).
"""


class NumericalError(ArithmeticError):
    """A matrix failed a numerical invariant (Hermitian, PSD, unitary, ...)."""


class NotHermitian(NumericalError):
    pass


class NotPSD(NumericalError):
    pass


class NotUnitary(NumericalError):
    pass


class NotConverged(NumericalError):
    pass


class InvariantViolation(NumericalError):
    """A density matrix stopped being a density matrix after a channel."""


class NotNormalized(ValueError):
    pass


class ProbabilityOutOfRange(ValueError):
    pass


class BadTolerance(ValueError):
    pass


class WrongStrategyKind(TypeError):
    pass


class ProfileShapeMismatch(ValueError):
    pass


class BadInitialState(ValueError):
    pass


class BadConfig(ValueError):
    pass
