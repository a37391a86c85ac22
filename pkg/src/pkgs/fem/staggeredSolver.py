import logging
from dataclasses import dataclass, field

import numpy as np

from ..data.errors import NotConvergedError
from ..materials.materialModel import MaterialModel
from .boundaryConditions import BoundaryCondition, dirichletData
from .lbfgs import MinimizationReport, ProjectedLbfgs
from .phaseFieldEnergy import PhaseFieldEnergy
from .phaseFieldParams import PhaseFieldParams, SolverSettings
from .simulationState import SimulationState

logger = logging.getLogger(__name__)


@dataclass
class StaggerReport:
    """
    Outcome of a staggered load step.

    ``energyHistory`` holds the total energy before the step and after each
    displacement and damage substep.
    """
    iterations: int = 0
    residual: float = float('inf')
    converged: bool = False
    energyHistory: list[float] = field(default_factory=list)


def projectDamage(d: np.ndarray, lowerBounds: np.ndarray) -> np.ndarray:
    """
    Project nodal damage onto {d >= lowerBounds componentwise, |d| <= 1}.
    Bounds are 0 or -inf, for which clipping then scaling is the exact
    projection.
    """
    clipped = np.maximum(d, lowerBounds)
    magnitude = np.linalg.norm(clipped, axis=1)
    scale = np.where(magnitude > 1.0, 1.0 / np.maximum(magnitude, 1.0), 1.0)
    return clipped * scale[:, None]


def solveDisplacement(state: SimulationState, model: MaterialModel,
                      params: PhaseFieldParams,
                      conditions: list[BoundaryCondition],
                      settings: SolverSettings | None = None
                      ) -> tuple[SimulationState, MinimizationReport]:
    """
    Minimize the energy over y at fixed d under Dirichlet conditions.

    :param state: Current state; it is not modified.
    :type state: SimulationState
    :param model: Material model.
    :type model: MaterialModel
    :param params: Phase-field parameters.
    :type params: PhaseFieldParams
    :param conditions: Boundary conditions.
    :type conditions: list[BoundaryCondition]
    :param settings: Solver settings.
    :type settings: SolverSettings | None

    :return: State with the new y, and the solver report.
    :rtype: tuple[SimulationState, MinimizationReport]

    :raises LineSearchFailedError: If the line search fails.
    :raises ElementInvertedError: If the constrained start is inverted.
    :raises ConfigError: If a boundary tag is not in the mesh.
    """
    energy = PhaseFieldEnergy(state.mesh, model, params)
    constraints = dirichletData(state.mesh, conditions)
    shape = state.y.shape
    d = state.d

    def objective(x: np.ndarray) -> tuple[float, np.ndarray]:
        evaluation = energy.evaluate(x.reshape(shape), d, withGradD=False)
        return evaluation.total, evaluation.gradY.ravel()   # type: ignore

    y0 = constraints.apply(state.y)
    y, report = ProjectedLbfgs(settings).minimize(
        objective, y0.ravel(), free=~constraints.fixed.ravel())
    updated = state.copy()
    updated.y = y.reshape(shape)
    logger.debug("Displacement solve: %d iterations, energy %.12g",
                 report.iterations, report.energy)
    return updated, report


def solveDamage(state: SimulationState, model: MaterialModel,
                params: PhaseFieldParams,
                settings: SolverSettings | None = None
                ) -> tuple[SimulationState, MinimizationReport]:
    """
    Minimize the energy over d at fixed y subject to |d| <= 1, the frozen
    nodes and the componentwise lower bounds.

    :return: State with the new d, and the solver report.
    :rtype: tuple[SimulationState, MinimizationReport]

    :raises LineSearchFailedError: If the line search fails.
    """
    energy = PhaseFieldEnergy(state.mesh, model, params)
    shape = state.d.shape
    y = state.y
    lowerBounds = state.lowerBounds
    free = np.repeat(~state.frozen[:, None], 2, axis=1).ravel()

    def objective(x: np.ndarray) -> tuple[float, np.ndarray]:
        evaluation = energy.evaluate(y, x.reshape(shape), withGradY=False)
        return evaluation.total, evaluation.gradD.ravel()   # type: ignore

    def project(x: np.ndarray) -> np.ndarray:
        return projectDamage(x.reshape(shape), lowerBounds).ravel()

    start = state.d.copy()
    start[state.frozen] = state.frozenDirection[state.frozen]
    d, report = ProjectedLbfgs(settings).minimize(
        objective, start.ravel(), project=project, free=free)
    updated = state.copy()
    updated.d = d.reshape(shape)
    updated.d[state.frozen] = state.frozenDirection[state.frozen]
    logger.debug("Damage solve: %d iterations, energy %.12g",
                 report.iterations, report.energy)
    return updated, report


def staggeredStep(state: SimulationState, model: MaterialModel,
                  params: PhaseFieldParams,
                  conditions: list[BoundaryCondition],
                  settings: SolverSettings | None = None
                  ) -> tuple[SimulationState, StaggerReport]:
    """
    Alternate displacement and damage minimization until the largest nodal
    update of y and d falls below the stagger tolerance.

    :return: Converged state and the step report.
    :rtype: tuple[SimulationState, StaggerReport]

    :raises NotConvergedError: If max_stagger sweeps do not converge; it
                               carries the last residual and the step.
    """
    report = StaggerReport()
    energy = PhaseFieldEnergy(state.mesh, model, params)
    constrained = state.copy()
    constrained.y = dirichletData(state.mesh, conditions).apply(state.y)
    report.energyHistory.append(
        energy.evaluate(constrained.y, constrained.d, False, False).total)
    current = constrained
    for sweep in range(1, params.maxStagger + 1):
        displaced, _ = solveDisplacement(current, model, params, conditions,
                                         settings)
        report.energyHistory.append(
            energy.evaluate(displaced.y, displaced.d, False, False).total)
        damaged, _ = solveDamage(displaced, model, params, settings)
        report.energyHistory.append(
            energy.evaluate(damaged.y, damaged.d, False, False).total)
        residual = max(
            float(np.max(np.linalg.norm(damaged.y - current.y, axis=1),
                         initial=0.0)),
            float(np.max(np.linalg.norm(damaged.d - current.d, axis=1),
                         initial=0.0)))
        report.iterations, report.residual = sweep, residual
        current = damaged
        logger.debug("Stagger sweep %d: residual %.3e", sweep, residual)
        if residual < params.staggerTol:
            report.converged = True
            return current, report
    raise NotConvergedError(report.residual, state.step)


def applyIrreversibility(state: SimulationState,
                         params: PhaseFieldParams) -> SimulationState:
    """
    Freeze every node whose damage magnitude reached d_c at unit magnitude
    along its current direction. Frozen nodes stay untouched.

    :return: Updated copy of the state.
    :rtype: SimulationState
    """
    updated = state.copy()
    magnitude = updated.damageMagnitude()
    newlyFrozen = (magnitude >= params.dC) & ~updated.frozen
    directions = updated.d[newlyFrozen] / magnitude[newlyFrozen, None]
    updated.d[newlyFrozen] = directions
    updated.frozenDirection[newlyFrozen] = directions
    updated.frozen |= newlyFrozen
    if newlyFrozen.any():
        logger.debug("Froze %d nodes", int(newlyFrozen.sum()))
    return updated
