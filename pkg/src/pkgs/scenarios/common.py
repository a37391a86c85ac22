import logging
import math
import os

import numpy as np
from scipy.spatial import cKDTree

from ..data.enumerators import BoundaryKind
from ..fem.boundaryConditions import BoundaryCondition
from ..fem.crackSeeds import CrackSeed, seedSupport
from ..fem.mesh import Mesh
from ..fem.phaseFieldEnergy import EnergyEvaluation, PhaseFieldEnergy
from ..fem.simulationState import SimulationState
from ..materials.materialModel import MaterialModel
from ..output.vtkWriter import VtkFields, writeVtk

logger = logging.getLogger(__name__)

CHECKPOINT_NAME = 'checkpoint.fqr'


def prepareOutput(outputDir: str) -> str:
    """
    Create the output directory if needed.

    :return: The directory.
    :rtype: str
    """
    os.makedirs(outputDir, exist_ok=True)
    return outputDir


def drivenConditions(conditions: list[BoundaryCondition],
                     F0: np.ndarray) -> list[BoundaryCondition]:
    """
    Copy of the conditions with every affine condition driven by F0.
    """
    return [condition.withF0(F0)
            if condition.kind is BoundaryKind.DIRICHLET_AFFINE
            else condition for condition in conditions]


def checkResolution(mesh: Mesh, seeds: list[CrackSeed],
                    epsilon: float) -> bool:
    """
    Check that elements within 2 epsilon of a seed have no edge longer
    than epsilon / 2; logs a warning otherwise.

    :return: True if the refinement region is resolved.
    :rtype: bool
    """
    region = np.zeros(mesh.nodeCount, dtype=bool)
    for seed in seeds:
        region |= seedSupport(seed, mesh.nodes, epsilon)[0]
    if not region.any():
        return True
    distances, _ = cKDTree(mesh.nodes[region]).query(
        mesh.centroids(), distance_upper_bound=2.0 * epsilon)
    near = np.isfinite(distances)
    if not near.any():
        return True
    largest = float(mesh.elementSizes()[near].max())
    if largest > 0.5 * epsilon:
        logger.warning("Mesh too coarse near the seed cracks: largest edge "
                       "%.4g exceeds epsilon / 2 = %.4g", largest,
                       0.5 * epsilon)
        return False
    return True


def evaluateState(state: SimulationState, model: MaterialModel,
                  params) -> EnergyEvaluation:
    """
    Energy of a state with the element stresses, without the damage
    gradient.
    """
    return PhaseFieldEnergy(state.mesh, model, params).evaluate(
        state.y, state.d, withGradY=True, withGradD=False)


def writeState(path: str, state: SimulationState,
               evaluation: EnergyEvaluation, mu: float,
               deformed: bool = False) -> str:
    """
    Write the displacement, damage and the nodal energy density over mu of
    a state as VTK, on the reference or the deformed configuration.

    :return: The path written.
    :rtype: str
    """
    mesh = state.mesh
    density = mesh.nodalAverage(evaluation.elementDensity) / mu
    writeVtk(VtkFields(mesh, state.y - mesh.nodes, state.d, density,
                       points=state.y if deformed else None), path)
    logger.info("Wrote %s", path)
    return path


def crackTip(state: SimulationState, origin, dC: float
             ) -> tuple[float, float]:
    """
    Position of the damaged node (|d| >= d_c) farthest from the crack
    origin, or (nan, nan) without damage.
    """
    damaged = state.damageMagnitude() >= dC
    if not damaged.any():
        return (math.nan, math.nan)
    points = state.mesh.nodes[damaged]
    farthest = int(np.argmax(np.linalg.norm(
        points - np.asarray(origin, dtype=float), axis=1)))
    return (float(points[farthest, 0]), float(points[farthest, 1]))


def crackedMean(state: SimulationState, evaluation: EnergyEvaluation,
                dC: float, mu: float) -> float:
    """
    Area-weighted mean energy density over mu of the elements whose
    centroid damage reaches d_c; 0 without such elements.
    """
    mesh = state.mesh
    cracked = np.linalg.norm(mesh.centroidValues(state.d), axis=1) >= dC
    if not cracked.any():
        return 0.0
    areas = mesh.areas()[cracked]
    return float(np.sum(areas * evaluation.elementDensity[cracked])
                 / (np.sum(areas) * mu))
