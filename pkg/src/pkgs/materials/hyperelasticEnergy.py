from abc import ABC, abstractmethod

import numpy as np
from scipy.optimize import minimize_scalar

from ..data.enumerators import EnergyFamily
from ..data.errors import DimensionMismatchError, NonPositiveError, \
    RelaxationDivergedError
from ..kinematics.crackFrame import validateDeformationGradient


class HyperelasticEnergy(ABC):
    """
    Frame-indifferent stored energy density W(F).

    Subclasses implement ``_energy`` and usually ``_stress``; the public
    methods validate the deformation gradient first. Families whose open
    crack relaxation has a closed form (or a one-dimensional numeric one)
    override ``relaxedNormalStretch``.
    """
    family: EnergyFamily
    dim: int
    isotropic: bool = True

    def energy(self, F) -> float:
        """
        Stored energy density.

        :param F: Deformation gradient.
        :type F: array_like

        :return: W(F).
        :rtype: float

        :raises NonPositiveDeterminantError: If det F <= 0.
        :raises DimensionMismatchError: If F does not match the family.
        """
        return float(self._energy(validateDeformationGradient(F, self.dim)))

    def stress(self, F) -> np.ndarray:
        """
        First Piola-Kirchhoff stress dW/dF.

        :param F: Deformation gradient.
        :type F: array_like

        :return: dim x dim stress.
        :rtype: np.ndarray

        :raises NonPositiveDeterminantError: If det F <= 0.
        :raises DimensionMismatchError: If F does not match the family.
        """
        return self._stress(validateDeformationGradient(F, self.dim))

    def batchEnergy(self, F: np.ndarray) -> np.ndarray:
        """
        Energy of a stack of deformation gradients, shape (m, dim, dim).
        Determinants are assumed positive.
        """
        return np.array([self._energy(f) for f in F])

    def batchStress(self, F: np.ndarray) -> np.ndarray:
        return np.array([self._stress(f) for f in F])

    @abstractmethod
    def _energy(self, F: np.ndarray) -> float:
        ...

    def _stress(self, F: np.ndarray) -> np.ndarray:
        h = 1e-6 * max(1.0, float(np.linalg.norm(F)))
        stress = np.zeros_like(F)
        for i in range(self.dim):
            for j in range(self.dim):
                step = np.zeros_like(F)
                step[i, j] = h
                stress[i, j] = (self._energy(F + step)
                                - self._energy(F - step)) / (2.0 * h)
        return stress

    def relaxedNormalStretch(self, tangential: np.ndarray) -> float | None:
        """
        Threshold A*_nn of the open relaxation for a given tangential block
        (crack-face shears relaxed to zero), or None when the family has no
        such reduction and the generic minimization must be used.

        :param tangential: Upper-triangular tangential block of A.
        :type tangential: np.ndarray

        :return: A*_nn, or None.
        :rtype: float | None
        """
        return None

    def elasticityTensor(self) -> np.ndarray:
        """
        Elasticity tensor C = D^2 W(I) by central differences of the
        stress.

        :return: Array c[i, j, k, l] of shape (dim,) * 4.
        :rtype: np.ndarray
        """
        h = 1e-6 if type(self)._stress is not HyperelasticEnergy._stress \
            else 1e-4
        identity = np.eye(self.dim)
        tensor = np.zeros((self.dim,) * 4)
        for k in range(self.dim):
            for m in range(self.dim):
                step = np.zeros((self.dim, self.dim))
                step[k, m] = h
                tensor[:, :, k, m] = (self._stress(identity + step)
                                      - self._stress(identity - step)) \
                    / (2.0 * h)
        return tensor

    def lameParameters(self) -> tuple[float, float]:
        """
        Lame parameters (mu, lambda) of the linearization at the identity.

        :return: (mu, lambda).
        :rtype: tuple[float, float]
        """
        tensor = self.elasticityTensor()
        return float(tensor[0, 1, 0, 1]), float(tensor[0, 0, 1, 1])

    def _checkDimension(self, dim: int) -> None:
        if dim != self.dim:
            raise DimensionMismatchError(
                f"{self.family.value} is {self.dim}D, got {dim}D input.")


def requirePositive(**values: float) -> None:
    """
    Raise NonPositiveError for the first non-positive keyword value.
    """
    for name, value in values.items():
        if not value > 0.0:
            raise NonPositiveError(f"{name} must be positive, got {value}.")


def requireNonNegative(**values: float) -> None:
    for name, value in values.items():
        if not value >= 0.0:
            raise NonPositiveError(
                f"{name} cannot be negative, got {value}.")


def minimizeStretch(energy, slope, tolerance: float = 1e-14,
                    newtonSteps: int = 30) -> float:
    """
    Minimize a strictly convex one-dimensional energy over x > 0.

    A golden-section search in log x brackets the minimizer, then Newton
    iterations on the slope polish it.

    :param energy: Callable g(x).
    :type energy: Callable[[float], float]
    :param slope: Callable g'(x).
    :type slope: Callable[[float], float]
    :param tolerance: Relative step size at which Newton stops.
    :type tolerance: float
    :param newtonSteps: Maximum number of Newton iterations.
    :type newtonSteps: int

    :return: The minimizer.
    :rtype: float

    :raises RelaxationDivergedError: If no finite minimizer is found.
    """
    result = minimize_scalar(lambda s: energy(np.exp(s)),
                             bracket=(-0.1, 0.1), method='golden')
    x = float(np.exp(result.x))
    for _ in range(newtonSteps):
        delta = 1e-6 * x
        curvature = (slope(x + delta) - slope(x - delta)) / (2.0 * delta)
        if not curvature > 0.0:
            break
        step = slope(x) / curvature
        candidate = x - step
        x = candidate if candidate > 0.0 else 0.5 * x
        if abs(step) <= tolerance * x:
            break
    if not np.isfinite(x) or x <= 0.0:
        raise RelaxationDivergedError(
            "One-dimensional relaxation did not find a finite minimizer.")
    return x
