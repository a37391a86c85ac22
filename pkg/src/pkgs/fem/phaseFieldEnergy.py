import math
from dataclasses import dataclass

import numpy as np

from ..data.errors import DimensionMismatchError, ElementInvertedError
from ..materials.materialModel import MaterialModel
from ..mechanics.crackEnergy import CrackEnergy
from .mesh import Mesh
from .phaseFieldParams import PhaseFieldParams
from .simulationState import SimulationState

GUARD_ANGLES = 8
ANGLE_STEP = 1e-6


@dataclass(frozen=True, eq=False)
class EnergyEvaluation:
    """
    Total energy, its gradients, the elastic energy density of each element
    and, with the y gradient, the degraded first Piola-Kirchhoff stress of
    each element.
    """
    total: float
    gradY: np.ndarray | None
    gradD: np.ndarray | None
    elementDensity: np.ndarray
    elementStress: np.ndarray | None = None


class PhaseFieldEnergy:
    """
    Discrete regularized fracture energy on a P1 mesh,

    E = sum_e area_e [((1 - |d|)^2 + eta) W(grad y)
                      + (1 - (1 - |d|)^2) Wd(grad y, d / |d|)
                      + Gc (|d|^2 / (2 eps) + eps / 2 |grad d|^2)],

    with one-point quadrature: grad y and grad d are constant per element and
    d is taken at the centroid. Where |d| is below the guard tolerance the
    crack normal is the one minimizing Wd over sampled orientations, the
    element density is (1 + eta) W and no damage slope is assembled.

    :param mesh: Triangle mesh.
    :type mesh: Mesh
    :param model: Two-dimensional material model.
    :type model: MaterialModel
    :param params: Phase-field parameters.
    :type params: PhaseFieldParams

    :raises DimensionMismatchError: If the model is not 2D.
    """
    def __init__(self, mesh: Mesh, model: MaterialModel,
                 params: PhaseFieldParams) -> None:
        if model.dim != 2:
            raise DimensionMismatchError(
                f"Phase-field energy needs a 2D model, got {model.dim}D.")
        self.mesh = mesh
        self.model = model
        self.params = params
        self.crackEnergy = CrackEnergy(model)
        self.areas = mesh.areas()
        self.gradients = mesh.shapeGradients()
        self._batchEffective = getattr(model.energy, 'batchEffective', None)

    def evaluate(self, y: np.ndarray, d: np.ndarray, withGradY: bool = True,
                 withGradD: bool = True) -> EnergyEvaluation:
        """
        Evaluate the energy and, on request, its gradients.

        :param y: Nodal deformation, shape (N, 2).
        :type y: np.ndarray
        :param d: Nodal damage, shape (N, 2).
        :type d: np.ndarray
        :param withGradY: Assemble dE/dy.
        :type withGradY: bool
        :param withGradD: Assemble dE/dd.
        :type withGradD: bool

        :return: Total energy, gradients (None when not requested) and the
                 elastic density per element.
        :rtype: EnergyEvaluation

        :raises ElementInvertedError: If an element has det grad y <= 0.
        """
        params = self.params
        gc = self.model.gc
        F = self.mesh.fieldGradients(y)
        det = F[:, 0, 0] * F[:, 1, 1] - F[:, 0, 1] * F[:, 1, 0]
        inverted = np.flatnonzero(~(det > 0.0))
        if inverted.size:
            raise ElementInvertedError(int(inverted[0]),
                                       float(det[inverted[0]]))

        centroid = self.mesh.centroidValues(d)
        magnitude = np.linalg.norm(centroid, axis=1)
        guard = magnitude < params.guardTolerance
        safe = np.where(guard, 1.0, magnitude)
        normals = centroid / safe[:, None]
        if guard.any():
            normals[guard] = self._guardNormals(F[guard])

        energy = self.model.energy
        intact = energy.batchEnergy(F)
        effective, effectiveStress, angleSlope = \
            self._effective(F, normals, withGradY)
        # Guarded elements carry no crack term
        degradation = np.where(guard, 0.0, magnitude)
        intactWeight = (1.0 - degradation) ** 2 + params.eta
        crackWeight = 1.0 - (1.0 - degradation) ** 2
        damageGradient = self.mesh.fieldGradients(d)
        density = intactWeight * intact + crackWeight * effective
        surface = gc * (magnitude ** 2 / (2.0 * params.epsilon)
                        + 0.5 * params.epsilon
                        * np.sum(damageGradient ** 2, axis=(1, 2)))
        total = float(np.sum(self.areas * (density + surface)))

        gradY = gradD = stress = None
        if withGradY:
            stress = intactWeight[:, None, None] * energy.batchStress(F) \
                + crackWeight[:, None, None] * effectiveStress
            gradY = self._scatter(np.einsum(
                'mij,maj->mai', self.areas[:, None, None] * stress,
                self.gradients))
        if withGradD:
            slope = np.where(guard, 0.0, 2.0 * (1.0 - magnitude)
                             * (effective - intact))
            centroidGrad = slope[:, None] * normals \
                + gc / params.epsilon * centroid
            perpendicular = np.stack((-centroid[:, 1], centroid[:, 0]), axis=1)
            orientation = np.where(guard, 0.0,
                                   crackWeight * angleSlope / safe ** 2)
            centroidGrad += orientation[:, None] * perpendicular
            nodal = np.repeat((self.areas[:, None] * centroidGrad
                               / 3.0)[:, None, :], 3, axis=1)
            nodal += np.einsum('mij,maj->mai',
                               gc * params.epsilon
                               * self.areas[:, None, None] * damageGradient,
                               self.gradients)
            gradD = self._scatter(nodal)
        return EnergyEvaluation(total, gradY, gradD, density, stress)

    def _scatter(self, contributions: np.ndarray) -> np.ndarray:
        assembled = np.zeros((self.mesh.nodeCount, 2))
        np.add.at(assembled, self.mesh.triangles, contributions)
        return assembled

    def _effective(self, F: np.ndarray, normals: np.ndarray,
                   withStress: bool
                   ) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        if self._batchEffective is not None:
            return self._batchEffective(F, normals)
        count = F.shape[0]
        values, slopes = np.empty(count), np.empty(count)
        stresses = np.zeros((count, 2, 2))
        for m in range(count):
            values[m] = self.crackEnergy.getEffectiveEnergy(
                F[m], normals[m]).energy
            if withStress:
                stresses[m] = self.crackEnergy.getEffectiveStress(
                    F[m], normals[m])
            theta = math.atan2(normals[m, 1], normals[m, 0])
            plus, minus = (self.crackEnergy.getEffectiveEnergy(
                F[m], (math.cos(angle), math.sin(angle))).energy
                for angle in (theta + ANGLE_STEP, theta - ANGLE_STEP))
            slopes[m] = (plus - minus) / (2.0 * ANGLE_STEP)
        return values, stresses, slopes

    def _guardNormals(self, F: np.ndarray) -> np.ndarray:
        angles = np.arange(GUARD_ANGLES) * math.pi / GUARD_ANGLES
        candidates = np.stack((np.cos(angles), np.sin(angles)), axis=1)
        count = F.shape[0]
        if self._batchEffective is not None:
            stacked = np.repeat(F, GUARD_ANGLES, axis=0)
            normals = np.tile(candidates, (count, 1))
            values = self._batchEffective(stacked, normals)[0] \
                .reshape(count, GUARD_ANGLES)
        else:
            values = np.array([[self.crackEnergy.getEffectiveEnergy(
                f, n).energy for n in candidates] for f in F])
        return candidates[np.argmin(values, axis=1)]


def totalEnergy(state: SimulationState, model: MaterialModel,
                params: PhaseFieldParams
                ) -> tuple[float, np.ndarray, np.ndarray]:
    """
    Total energy of a state with its gradients with respect to y and d.

    :return: (E, dE/dy, dE/dd), gradients of shape (N, 2).
    :rtype: tuple[float, np.ndarray, np.ndarray]

    :raises ElementInvertedError: If an element has det grad y <= 0.
    """
    evaluation = PhaseFieldEnergy(state.mesh, model, params) \
        .evaluate(state.y, state.d)
    return evaluation.total, evaluation.gradY, evaluation.gradD  # type: ignore
