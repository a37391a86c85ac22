import logging
import os

import numpy as np

from ..data.enumerators import SeedKind
from ..data.scenarioConfig import ScenarioConfig
from ..fem.boundaryConditions import BoundaryCondition
from ..fem.checkpoint import saveCheckpoint
from ..fem.crackSeeds import CrackSeed, applySeeds
from ..fem.mesh import Mesh
from ..fem.simulationState import SimulationState
from ..fem.staggeredSolver import applyIrreversibility, staggeredStep
from ..output.csvWriter import writeCsv
from .common import CHECKPOINT_NAME, checkResolution, crackedMean, crackTip
from .common import drivenConditions, evaluateState, prepareOutput
from .common import writeState

logger = logging.getLogger(__name__)

SUMMARY_HEADER = ['step', 'load', 'phase', 'iterations', 'energy',
                  'max_damage', 'tip_x', 'tip_y', 'crack_energy',
                  'peak_energy']


def shearDeformation(gamma: float) -> np.ndarray:
    """
    Simple shear [[1, gamma], [0, 1]].
    """
    return np.array([[1.0, gamma], [0.0, 1.0]])


def defaultConditions() -> list[BoundaryCondition]:
    """
    Clamped bottom, sheared top, traction-free sides.
    """
    return [BoundaryCondition.zero('bottom'),
            BoundaryCondition.affine('top', np.eye(2)),
            BoundaryCondition.tractionFree('left'),
            BoundaryCondition.tractionFree('right')]


def _crackOrigin(mesh: Mesh, seeds: list[CrackSeed]) -> tuple[float, float]:
    for seed in seeds:
        if seed.kind is SeedKind.SEGMENT:
            return seed.start
        return seed.centre
    low = mesh.nodes.min(axis=0)
    return (float(low[0]), float(low[1]))


def runCyclicShear(config: ScenarioConfig) -> list[str]:
    """
    Cyclic shear of a pre-notched specimen: every load step shears the
    affine boundaries by [[1, load], [0, 1]], solves the staggered scheme
    and freezes the nodes that reached d_c.

    Writes one VTK file per step and ``summary.csv`` with the crack tip
    (damaged node farthest from the notch start), the total energy, the
    largest |d|, the mean energy density of the cracked elements and the
    largest element density, all energies over mu. With ``checkpoint``
    the state is stored after every step.

    :param config: Scenario configuration.
    :type config: ScenarioConfig

    :return: Files written.
    :rtype: list[str]

    :raises NotConvergedError: If a load step does not converge; it carries
                               the step index.
    """
    mesh: Mesh = config.mesh                           # type: ignore
    model, params = config.material, config.params
    mu = model.lameParameters()[0]
    outputDir = prepareOutput(config.outputDir)
    seeds = config.seedCracks
    checkResolution(mesh, seeds, params.epsilon)
    origin = _crackOrigin(mesh, seeds)
    conditions = config.boundaryConditions or defaultConditions()

    state = applySeeds(SimulationState.reference(mesh), seeds,
                       params.epsilon)
    previous = shearDeformation(0.0)
    written, rows = [], []
    for loadStep in config.loadProgram:
        F0 = shearDeformation(loadStep.load)
        state.y = state.y + mesh.nodes @ (F0 - previous).T
        state.lowerBounds[:] = loadStep.lowerBound
        state.step = loadStep.step
        state, report = staggeredStep(state, model, params,
                                      drivenConditions(conditions, F0),
                                      config.solver)
        state = applyIrreversibility(state, params)
        previous = F0

        evaluation = evaluateState(state, model, params)
        magnitude = float(state.damageMagnitude().max(initial=0.0))
        tip = crackTip(state, origin, params.dC)
        rows.append([loadStep.step, loadStep.load, loadStep.phase,
                     report.iterations, evaluation.total / mu, magnitude,
                     tip[0], tip[1],
                     crackedMean(state, evaluation, params.dC, mu),
                     float(evaluation.elementDensity.max()) / mu])
        logger.info("Step %d (load %.4g, %s): %d sweeps, energy %.6g, "
                    "max |d| %.4f", loadStep.step, loadStep.load,
                    loadStep.phase, report.iterations, evaluation.total / mu,
                    magnitude)
        written.append(writeState(
            os.path.join(outputDir, f"cyclic_shear_{loadStep.step:04d}.vtk"),
            state, evaluation, mu))
        if config.checkpoint:
            saveCheckpoint(state, os.path.join(outputDir, CHECKPOINT_NAME))

    summary = os.path.join(outputDir, 'summary.csv')
    writeCsv(summary, SUMMARY_HEADER, rows)
    logger.info("Wrote %s", summary)
    return written + [summary]
