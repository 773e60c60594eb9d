"""Exception types shared across the solver stack.

ConfigError subclasses map to CLI exit code 1 (bad inputs), SolverError
subclasses to exit code 2 (numerical failure on valid inputs).
"""


class FpcError(Exception):
    pass


class ConfigError(FpcError):
    pass


class GridMismatchError(ConfigError):
    pass


class DomainTooSmallError(ConfigError):
    pass


class SolverError(FpcError):
    pass


class PolicyIterationError(SolverError):
    def __init__(self, level: int, change: float, max_iter: int):
        self.level = level
        self.change = change
        super().__init__(
            f"policy iteration did not converge at time level {level}: "
            f"last step change {change:.3e} after {max_iter} iterations"
        )


class NumericalBlowupError(SolverError):
    pass


class FixedPointError(SolverError):
    def __init__(self, residual_history):
        self.residual_history = list(residual_history)
        last = self.residual_history[-1] if self.residual_history else float("nan")
        super().__init__(
            f"mean-field fixed point did not converge: last residual {last:.3e} "
            f"after {len(self.residual_history)} iterations"
        )


class RepresentationError(SolverError):
    pass


class InfeasibilitySuspectedError(SolverError):
    pass
