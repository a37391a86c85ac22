from dataclasses import dataclass

from ..data.enumerators import DataKeys
from ..data.errors import ConfigError


@dataclass(frozen=True)
class PhaseFieldParams:
    """
    Regularization and staggered-scheme parameters.

    :raises ConfigError: If a value is out of range.
    """
    epsilon: float = 0.015
    eta: float = 1e-6
    dC: float = 0.95
    staggerTol: float = 1e-3
    maxStagger: int = 100
    guardTolerance: float = 1e-8

    def __post_init__(self) -> None:
        if not self.epsilon > 0.0:
            raise ConfigError(f"{DataKeys.EPSILON} must be positive, got "
                              f"{self.epsilon}.")
        if not 0.0 < self.eta < 1.0:
            raise ConfigError(f"{DataKeys.ETA} must lie in (0, 1), got "
                              f"{self.eta}.")
        if not 0.0 < self.dC < 1.0:
            raise ConfigError(f"{DataKeys.D_C} must lie in (0, 1), got "
                              f"{self.dC}.")
        if not self.staggerTol > 0.0:
            raise ConfigError(f"{DataKeys.STAGGER_TOL} must be positive, got "
                              f"{self.staggerTol}.")
        if self.maxStagger < 1:
            raise ConfigError(f"{DataKeys.MAX_STAGGER} must be at least 1, "
                              f"got {self.maxStagger}.")


@dataclass(frozen=True)
class SolverSettings:
    """
    Settings of the projected limited-memory quasi-Newton solver.
    """
    maxIterations: int = 2000
    gradientTolerance: float = 1e-8
    history: int = 10
    maxBacktracks: int = 40
    armijo: float = 1e-4
    initialStep: float = 1e-2

    def __post_init__(self) -> None:
        if self.maxIterations < 1 or self.history < 1 \
                or self.maxBacktracks < 1:
            raise ConfigError("Solver iteration counts must be at least 1.")
        if not (self.gradientTolerance > 0.0 and 0.0 < self.armijo < 1.0
                and self.initialStep > 0.0):
            raise ConfigError("Solver tolerances must be positive and the "
                              "Armijo constant below 1.")
