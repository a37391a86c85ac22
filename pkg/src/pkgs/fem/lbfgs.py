import logging
from collections import deque
from dataclasses import dataclass
from typing import Callable

import numpy as np

from ..data.errors import ElementInvertedError, LineSearchFailedError
from .phaseFieldParams import SolverSettings

logger = logging.getLogger(__name__)

CURVATURE_TOLERANCE = 1e-12
STALL_FACTOR = 1e3


@dataclass(frozen=True)
class MinimizationReport:
    converged: bool
    iterations: int
    energy: float
    projectedGradient: float
    message: str


class ProjectedLbfgs:
    """
    Limited-memory BFGS with projection onto a convex feasible set and an
    Armijo backtracking line search.

    The objective may raise ElementInvertedError; the line search treats
    such trial points as rejected and backtracks. Variables outside
    ``free`` keep their initial value.

    :param settings: Iteration limits and tolerances.
    :type settings: SolverSettings
    """
    def __init__(self, settings: SolverSettings | None = None) -> None:
        self.settings = settings or SolverSettings()

    def minimize(self, fun: Callable[[np.ndarray], tuple[float, np.ndarray]],
                 x0: np.ndarray,
                 project: Callable[[np.ndarray], np.ndarray] | None = None,
                 free: np.ndarray | None = None
                 ) -> tuple[np.ndarray, MinimizationReport]:
        """
        Minimize fun over the feasible set.

        :param fun: Objective returning (value, gradient) for a flat vector.
        :type fun: Callable[[np.ndarray], tuple[float, np.ndarray]]
        :param x0: Starting point; it is projected first.
        :type x0: np.ndarray
        :param project: Projection onto the feasible set, or None.
        :type project: Callable[[np.ndarray], np.ndarray] | None
        :param free: Boolean mask of the free variables, or None for all.
        :type free: np.ndarray | None

        :return: Minimizer and report. The energy never increases along the
                 iterates.
        :rtype: tuple[np.ndarray, MinimizationReport]

        :raises LineSearchFailedError: If no descent step exists away from a
                                       stationary point.
        :raises ElementInvertedError: If the starting point is infeasible.
        """
        settings = self.settings
        project = project or (lambda v: v)
        free = np.ones(x0.shape, dtype=bool) if free is None else free
        anchor = x0.copy()

        def restore(v: np.ndarray) -> np.ndarray:
            v = project(v)
            v[~free] = anchor[~free]
            return v

        def evaluate(v: np.ndarray) -> tuple[float, np.ndarray]:
            value, gradient = fun(v)
            gradient = np.where(free, gradient, 0.0)
            return float(value), gradient

        def projectedGradient(v: np.ndarray, gradient: np.ndarray) -> float:
            if not gradient.size:
                return 0.0
            return float(np.max(np.abs(v - restore(v - gradient))))

        x = restore(x0.copy())
        f, g = evaluate(x)
        pg = projectedGradient(x, g)
        tolerance = settings.gradientTolerance * max(1.0, pg)
        steps: deque = deque(maxlen=settings.history)
        iteration = 0
        while iteration < settings.maxIterations:
            if pg <= tolerance:
                return x, MinimizationReport(True, iteration, f, pg,
                                             "Projected gradient below "
                                             "tolerance.")
            direction = self._direction(g, steps)
            accepted = self._lineSearch(evaluate, restore, x, f, g, direction)
            if accepted is None and steps:
                logger.debug("Line search failed, resetting the memory")
                steps.clear()
                direction = self._direction(g, steps)
                accepted = self._lineSearch(evaluate, restore, x, f, g,
                                            direction)
            if accepted is None:
                if pg <= STALL_FACTOR * tolerance:
                    logger.warning("Line search stalled at projected "
                                   "gradient %.3e", pg)
                    return x, MinimizationReport(False, iteration, f, pg,
                                                 "Line search stalled near "
                                                 "a stationary point.")
                raise LineSearchFailedError(
                    f"Line search failed at iteration {iteration} "
                    f"(projected gradient {pg:.3e}).")
            xNew, fNew, gNew = accepted
            s, yDiff = xNew - x, gNew - g
            curvature = float(s @ yDiff)
            if curvature > CURVATURE_TOLERANCE * np.linalg.norm(s) \
                    * np.linalg.norm(yDiff):
                steps.append((s, yDiff, 1.0 / curvature))
            x, f, g = xNew, fNew, gNew
            pg = projectedGradient(x, g)
            iteration += 1
            logger.debug("Iteration %d: energy %.12g, projected gradient "
                         "%.3e", iteration, f, pg)
        converged = pg <= tolerance
        return x, MinimizationReport(converged, iteration, f, pg,
                                     "Iteration limit reached.")

    def _direction(self, g: np.ndarray, steps: deque) -> np.ndarray:
        q = g.copy()
        alphas = []
        for s, yDiff, rho in reversed(steps):
            alpha = rho * float(s @ q)
            q -= alpha * yDiff
            alphas.append(alpha)
        if steps:
            s, yDiff, _ = steps[-1]
            q *= float(s @ yDiff) / float(yDiff @ yDiff)
        else:
            largest = float(np.max(np.abs(g))) if g.size else 0.0
            q *= self.settings.initialStep / max(largest, 1e-300)
        for (s, yDiff, rho), alpha in zip(steps, reversed(alphas)):
            beta = rho * float(yDiff @ q)
            q += (alpha - beta) * s
        direction = -q
        if g.size and float(direction @ g) >= 0.0:
            largest = float(np.max(np.abs(g)))
            direction = -self.settings.initialStep / max(largest, 1e-300) * g
        return direction

    def _lineSearch(self, evaluate, restore, x: np.ndarray, f: float,
                    g: np.ndarray, direction: np.ndarray):
        step = 1.0
        for _ in range(self.settings.maxBacktracks):
            trial = restore(x + step * direction)
            try:
                fTrial, gTrial = evaluate(trial)
            except ElementInvertedError as error:
                logger.debug("Backtracking from inverted element %d",
                             error.elementId)
                step *= 0.5
                continue
            decrease = min(float(g @ (trial - x)), 0.0)
            if np.isfinite(fTrial) and \
                    fTrial <= f + self.settings.armijo * decrease:
                if np.any(trial != x):
                    return trial, fTrial, gTrial
                return None
            step *= 0.5
        return None
