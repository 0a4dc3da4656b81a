"""Exception types raised by the library."""


class GA3Error(Exception):
    """Base class for all library errors."""


class NonInvertible(GA3Error):
    """The element has no inverse (its center norm vanishes)."""


class ConvergenceError(GA3Error):
    """The exponential series failed to reach the requested tolerance."""


class ConstraintViolated(GA3Error):
    """Idempotent constraints m^2 - n^2 = 1, m . n = 0 not satisfied."""

    def __init__(self, message: str, residual: float):
        super().__init__(f"{message} (residual {residual:.3e})")
        self.residual = residual


class NotUnit(GA3Error):
    """A unit vector was required."""


class ZeroSpinor(GA3Error):
    """The ket-spinor is (numerically) zero."""


class ZeroAlpha0(GA3Error):
    """The operation needs alpha_0 != 0 (the state sits at the south pole)."""


# canonical-form contexts use the reversed spelling
Alpha0Zero = ZeroAlpha0


class SouthPole(GA3Error):
    """Stereographic projection is undefined at -e3."""


class DegenerateX(GA3Error):
    """m = e3 has no distinguished perpendicular on the great circle."""


class NotNormalized(GA3Error):
    """A normalized ket-spinor was required."""


class NotNull(GA3Error):
    """The complex vector does not satisfy z1^2 + z2^2 + z3^2 = 0."""


class DegenerateObservable(GA3Error):
    """The observable has no vector part; every state is an eigenstate."""


class NotTransverse(GA3Error):
    """Oscillation formulas need the Hamiltonian vector part orthogonal to e3."""


class ExprError(GA3Error):
    """Base class for expression-language errors; carries a source position."""

    def __init__(self, message: str, position: int):
        super().__init__(message)
        self.position = position


class ExprSyntaxError(ExprError):
    def __init__(self, position: int, expected: str):
        super().__init__(f"syntax error at position {position}: expected {expected}", position)
        self.expected = expected


class UnknownSymbol(ExprError):
    def __init__(self, name: str, position: int):
        super().__init__(f"unknown symbol '{name}' at position {position}", position)
        self.name = name


class EvalError(ExprError):
    """Evaluation failure (non-invertible divisor, bad grade index, ...)."""
