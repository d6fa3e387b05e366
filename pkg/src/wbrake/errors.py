"""Exception types shared across the package."""


class ConfigError(ValueError):
    """Invalid or inconsistent run configuration."""


class GridMismatchError(ValueError):
    """Two measures or trajectories live on different grids."""


class GridTooSmallError(RuntimeError):
    """Mass reached the outermost cells: the truncated domain is too small."""


class SolverConvergenceError(RuntimeError):
    """Inner solver failed to reach its residual target."""

    def __init__(self, message, residual=None, iterations=None):
        super().__init__(message)
        self.residual = residual
        self.iterations = iterations


class UnsettledSideError(RuntimeError):
    """Endpoint of a trajectory is not close to either stationary set."""
