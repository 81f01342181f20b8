"""Exception hierarchy shared by all modules."""


class LanczosError(Exception):
    """Base class for every error raised by this package."""


class ParameterError(LanczosError, ValueError):
    """An argument is outside the documented range."""


class DomainError(LanczosError, ValueError):
    """A numeric argument falls where the function is undefined."""


class PoleError(DomainError):
    def __init__(self, pole, message=None):
        self.pole = pole
        super().__init__(message or f"Gamma has a pole at z = {pole}")


class QuadratureConvergenceError(LanczosError, ArithmeticError):
    def __init__(self, previous, current, nodes):
        self.previous = previous
        self.current = current
        self.nodes = nodes
        super().__init__(
            f"quadrature did not converge within {nodes} nodes: "
            f"last estimates {previous!r} and {current!r}"
        )


class InconsistencyError(LanczosError, ArithmeticError):
    """Two independent computations that must agree do not."""


class OracleError(LanczosError):
    """A reference oracle failed its self-validation or was used outside its domain."""
