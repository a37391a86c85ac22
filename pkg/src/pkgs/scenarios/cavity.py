import logging
import math
import os

import numpy as np

from ..data.errors import ElementInvertedError, LineSearchFailedError
from ..data.errors import NotConvergedError
from ..data.scenarioConfig import LoadStep, ScenarioConfig
from ..fem.boundaryConditions import BoundaryCondition
from ..fem.checkpoint import saveCheckpoint
from ..fem.crackSeeds import applySeeds
from ..fem.mesh import Mesh
from ..fem.simulationState import SimulationState
from ..fem.staggeredSolver import applyIrreversibility, solveDisplacement
from ..fem.staggeredSolver import staggeredStep
from ..output.csvWriter import writeCsv
from .common import CHECKPOINT_NAME, checkResolution, crackedMean
from .common import drivenConditions, evaluateState, prepareOutput
from .common import writeState

logger = logging.getLogger(__name__)

SUMMARY_HEADER = ['step', 'load', 'phase', 'increments', 'iterations',
                  'energy', 'max_damage', 'frozen_nodes', 'crack_energy']


def dilation(load: float) -> np.ndarray:
    """
    Isotropic map (1 + load) I; negative loads compress.
    """
    return (1.0 + load) * np.eye(2)


def defaultConditions() -> list[BoundaryCondition]:
    """
    Dilated outer boundary, traction-free cavity.
    """
    return [BoundaryCondition.affine('outer', np.eye(2)),
            BoundaryCondition.tractionFree('cavity')]


def advanceLoad(state: SimulationState, current: float, loadStep: LoadStep,
                config: ScenarioConfig,
                conditions: list[BoundaryCondition]
                ) -> tuple[SimulationState, int, int]:
    """
    Move the load from ``current`` to the target of a load step.

    The first increment is the full distance. A failed increment is halved
    and retried; an increment needing more than ``shrink_after`` staggered
    sweeps is accepted and the next one is halved.

    :return: State at the target, accepted increments and total sweeps.
    :rtype: tuple[SimulationState, int, int]

    :raises NotConvergedError: If the increment drops below
                               ``min_increment``.
    """
    mesh = state.mesh
    model, params = config.material, config.params
    target = loadStep.load
    increment = target - current
    increments = sweeps = 0
    while target != current:
        trial = target if abs(target - current) <= abs(increment) \
            else current + increment
        candidate = state.copy()
        candidate.y = candidate.y + (trial - current) * mesh.nodes
        candidate.lowerBounds[:] = loadStep.lowerBound
        candidate.step = loadStep.step
        try:
            candidate, report = staggeredStep(
                candidate, model, params,
                drivenConditions(conditions, dilation(trial)), config.solver)
        except (NotConvergedError, LineSearchFailedError,
                ElementInvertedError) as error:
            increment *= 0.5
            if abs(increment) < config.minIncrement:
                raise NotConvergedError(getattr(error, 'residual', math.inf),
                                        loadStep.step) from error
            logger.warning("Step %d: retrying with load increment %.4g",
                           loadStep.step, increment)
            continue
        state = applyIrreversibility(candidate, params)
        current = trial
        increments += 1
        sweeps += report.iterations
        if report.iterations > config.shrinkAfter \
                and 0.5 * abs(increment) >= config.minIncrement:
            increment *= 0.5
            logger.info("Step %d: %d sweeps, load increment reduced to "
                        "%.4g", loadStep.step, report.iterations, increment)
    return state, increments, sweeps


def intactBaseline(config: ScenarioConfig,
                   conditions: list[BoundaryCondition]) -> SimulationState:
    """
    Undamaged specimen taken through the same load program with the damage
    solve disabled.
    """
    mesh: Mesh = config.mesh                           # type: ignore
    state = SimulationState.reference(mesh)
    current = 0.0
    for loadStep in config.loadProgram:
        state.y = state.y + (loadStep.load - current) * mesh.nodes
        state, _ = solveDisplacement(
            state, config.material, config.params,
            drivenConditions(conditions, dilation(loadStep.load)),
            config.solver)
        current = loadStep.load
    return state


def runCavity(config: ScenarioConfig) -> list[str]:
    """
    Cavity cycling: a square specimen with a circular hole and seeded
    cracks is dilated by (1 + load) I on its outer boundary following the
    load program, typically compression, tension, compression.

    Writes a VTK file at the end of every phase and ``summary.csv`` per
    load step. With ``baseline`` the final nodal energy density is compared
    with an intact run under the same program and the relative L2 error is
    written to ``baseline.csv``.

    :param config: Scenario configuration.
    :type config: ScenarioConfig

    :return: Files written.
    :rtype: list[str]

    :raises NotConvergedError: If a load step cannot be reached.
    """
    mesh: Mesh = config.mesh                           # type: ignore
    model, params = config.material, config.params
    mu = model.lameParameters()[0]
    outputDir = prepareOutput(config.outputDir)
    checkResolution(mesh, config.seedCracks, params.epsilon)
    conditions = config.boundaryConditions or defaultConditions()

    state = applySeeds(SimulationState.reference(mesh), config.seedCracks,
                       params.epsilon)
    current = 0.0
    program = config.loadProgram
    written, rows = [], []
    for index, loadStep in enumerate(program):
        state, increments, sweeps = advanceLoad(state, current, loadStep,
                                                config, conditions)
        current = loadStep.load
        evaluation = evaluateState(state, model, params)
        magnitude = float(state.damageMagnitude().max(initial=0.0))
        rows.append([loadStep.step, loadStep.load, loadStep.phase,
                     increments, sweeps, evaluation.total / mu, magnitude,
                     int(state.frozen.sum()),
                     crackedMean(state, evaluation, params.dC, mu)])
        logger.info("Step %d (load %.4g, %s): %d increments, %d sweeps, "
                    "max |d| %.4f", loadStep.step, loadStep.load,
                    loadStep.phase, increments, sweeps, magnitude)
        phaseEnds = index + 1 == len(program) \
            or program[index + 1].phase != loadStep.phase
        if phaseEnds:
            name = f"cavity_{loadStep.step:04d}_{loadStep.phase or 'phase'}"
            written.append(writeState(os.path.join(outputDir, f"{name}.vtk"),
                                      state, evaluation, mu))
        if config.checkpoint:
            saveCheckpoint(state, os.path.join(outputDir, CHECKPOINT_NAME))

    summary = os.path.join(outputDir, 'summary.csv')
    writeCsv(summary, SUMMARY_HEADER, rows)
    written.append(summary)
    if config.baseline:
        reference = intactBaseline(config, conditions)
        density = mesh.nodalAverage(
            evaluateState(state, model, params).elementDensity)
        expected = mesh.nodalAverage(
            evaluateState(reference, model, params).elementDensity)
        norm = float(np.linalg.norm(expected))
        error = float(np.linalg.norm(density - expected))
        relative = error / norm if norm > 0.0 else error
        logger.info("Relative L2 deviation from the intact run: %.4g",
                    relative)
        baseline = os.path.join(outputDir, 'baseline.csv')
        writeCsv(baseline, ['load', 'relative_l2_error'],
                 [[current, relative]])
        written.append(baseline)
    logger.info("Wrote %s", summary)
    return written
