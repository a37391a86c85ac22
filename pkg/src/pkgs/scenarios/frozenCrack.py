import logging
import os

import numpy as np

from ..data.enumerators import DataKeys, FrozenCrackMode, SeedKind
from ..data.errors import ConfigError
from ..data.scenarioConfig import ScenarioConfig
from ..fem.boundaryConditions import BoundaryCondition
from ..fem.crackSeeds import CrackSeed, applySeeds
from ..fem.mesh import Mesh
from ..fem.simulationState import SimulationState
from ..fem.staggeredSolver import solveDisplacement
from ..materials.materialModel import MaterialModel
from ..mechanics.crackEnergy import CrackEnergy
from ..output.csvWriter import writeCsv
from .common import checkResolution, drivenConditions, evaluateState
from .common import prepareOutput, writeState

logger = logging.getLogger(__name__)

DEFAULT_RADIUS = 0.2
SUMMARY_HEADER = ['mode', 'amplitude', 'energy', 'crack_mean', 'intact_mean',
                  'crack_to_intact', 'uniformity', 'iterations', 'converged']


def modeDeformation(mode: FrozenCrackMode, amplitude: float,
                    model: MaterialModel) -> np.ndarray:
    """
    Affine map of a frozen-crack mode for a crack with normal e2.

    With s the amplitude: (a) opening diag(1, 1 + s), (b) sliding
    [[1, s], [0, 1]], (c) tangential compression diag(1 - s, 1),
    (d) tangential extension diag(1 + s, 1), (e) normal compression
    diag(1, 1 - s) and d-relaxed diag(1 + s, A22*(1 + s)).

    :param mode: Deformation mode.
    :type mode: FrozenCrackMode
    :param amplitude: Amplitude s in [0, 1).
    :type amplitude: float
    :param model: Two-dimensional material model, used by d-relaxed.
    :type model: MaterialModel

    :return: 2x2 deformation gradient.
    :rtype: np.ndarray

    :raises ConfigError: If the amplitude is outside [0, 1).
    """
    s = amplitude
    if not 0.0 <= s < 1.0:
        raise ConfigError(f"{DataKeys.AMPLITUDE} must lie in [0, 1), got "
                          f"{s}.")
    match mode:
        case FrozenCrackMode.OPENING:
            return np.diag([1.0, 1.0 + s])
        case FrozenCrackMode.SLIDING:
            return np.array([[1.0, s], [0.0, 1.0]])
        case FrozenCrackMode.TANGENTIAL_COMPRESSION:
            return np.diag([1.0 - s, 1.0])
        case FrozenCrackMode.TANGENTIAL_EXTENSION:
            return np.diag([1.0 + s, 1.0])
        case FrozenCrackMode.NORMAL_COMPRESSION:
            return np.diag([1.0, 1.0 - s])
        case _:
            a11 = 1.0 + s
            return np.diag([a11, CrackEnergy(model).getA22Star(a11)])


def defaultSeed(mesh: Mesh) -> CrackSeed:
    """
    Circular crack with normal e2 at the centre of the mesh bounding box.
    """
    low, high = mesh.nodes.min(axis=0), mesh.nodes.max(axis=0)
    centre = 0.5 * (low + high)
    return CrackSeed(SeedKind.DISK, centre=(float(centre[0]),
                                            float(centre[1])),
                     radius=DEFAULT_RADIUS * float(np.min(high - low)),
                     direction=(0.0, 1.0))


def _crackCentre(mesh: Mesh, seeds: list[CrackSeed]) -> float:
    for seed in seeds:
        if seed.kind is SeedKind.DISK:
            return seed.centre[1]
    low, high = mesh.nodes.min(axis=0), mesh.nodes.max(axis=0)
    return float(0.5 * (low[1] + high[1]))


def runFrozenCrack(config: ScenarioConfig) -> list[str]:
    """
    Frozen-crack study: seed and freeze the damage, impose the affine map of
    the configured mode on the boundary and minimize over y only.

    Writes the energy density on the reference and deformed configurations
    (VTK), the normal and shear traction over mu on the elements crossing
    the horizontal line through the crack (``traction_line.csv``) and the
    region means (``summary.csv``). The crack region holds the elements with
    centroid |d| >= d_c, the intact region those with |d| <= 1 - d_c; the
    uniformity is max |density - mean| / |mean| over all elements.

    :param config: Scenario configuration.
    :type config: ScenarioConfig

    :return: Files written.
    :rtype: list[str]

    :raises ConfigError: If the amplitude is invalid.
    :raises LineSearchFailedError: If the displacement solve fails.
    """
    mesh: Mesh = config.mesh                           # type: ignore
    model, params = config.material, config.params
    mu = model.lameParameters()[0]
    mode = config.mode
    F0 = modeDeformation(mode, config.amplitude, model)
    logger.info("Frozen crack mode %s, amplitude %.4g", mode.value,
                config.amplitude)
    outputDir = prepareOutput(config.outputDir)

    seeds = config.seedCracks or [defaultSeed(mesh)]
    checkResolution(mesh, seeds, params.epsilon)
    state = applySeeds(SimulationState.reference(mesh), seeds,
                       params.epsilon)
    state.y = mesh.nodes @ F0.T
    conditions = config.boundaryConditions or \
        [BoundaryCondition.affine(tag, F0) for tag in sorted(mesh.tags)]
    state, report = solveDisplacement(state, model, params,
                                      drivenConditions(conditions, F0),
                                      config.solver)
    if not report.converged:
        logger.warning("Displacement solve stopped: %s", report.message)
    evaluation = evaluateState(state, model, params)

    prefix = os.path.join(outputDir, f"frozen_crack_{mode.value}")
    written = [writeState(f"{prefix}.vtk", state, evaluation, mu),
               writeState(f"{prefix}_deformed.vtk", state, evaluation, mu,
                          deformed=True)]

    density = evaluation.elementDensity / mu
    magnitude = np.linalg.norm(mesh.centroidValues(state.d), axis=1)
    areas = mesh.areas()

    def regionMean(region: np.ndarray) -> float:
        if not region.any():
            return float('nan')
        return float(np.sum(areas[region] * density[region])
                     / np.sum(areas[region]))

    crackMean = regionMean(magnitude >= params.dC)
    intactMean = regionMean(magnitude <= 1.0 - params.dC)
    mean = float(np.sum(areas * density) / np.sum(areas))
    uniformity = float(np.max(np.abs(density - mean)) / abs(mean)) \
        if mean != 0.0 else 0.0
    ratio = crackMean / intactMean if intactMean else float('nan')

    centreLine = _crackCentre(mesh, seeds)
    corners = mesh.nodes[mesh.triangles][:, :, 1]
    crossing = np.flatnonzero((corners.min(axis=1) <= centreLine)
                              & (corners.max(axis=1) >= centreLine))
    centroids = mesh.centroids()
    crossing = crossing[np.argsort(centroids[crossing, 0], kind='stable')]
    stress: np.ndarray = evaluation.elementStress      # type: ignore
    traction = os.path.join(outputDir, 'traction_line.csv')
    writeCsv(traction, ['x', 'normal_traction', 'shear_traction'],
             [[float(centroids[m, 0]), float(stress[m, 1, 1]) / mu,
               float(stress[m, 0, 1]) / mu] for m in crossing])
    summary = os.path.join(outputDir, 'summary.csv')
    writeCsv(summary, SUMMARY_HEADER,
             [[mode.value, config.amplitude, evaluation.total / mu, crackMean,
               intactMean, ratio, uniformity, report.iterations,
               report.converged]])
    logger.info("Crack mean %.6g, intact mean %.6g, uniformity %.3e",
                crackMean, intactMean, uniformity)
    logger.info("Wrote %s and %s", traction, summary)
    return written + [traction, summary]
