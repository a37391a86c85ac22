from typing import Callable

import numpy as np

from ..data.enumerators import EnergyFamily
from ..data.errors import DimensionMismatchError
from .hyperelasticEnergy import HyperelasticEnergy


def _probeSet(dim: int) -> list[np.ndarray]:
    rng = np.random.default_rng(0)
    probes = [np.eye(dim), 0.8 * np.eye(dim), 1.25 * np.eye(dim)]
    for i in range(dim):
        stretch = np.eye(dim)
        stretch[i, i] = 1.5
        probes.append(stretch)
    shear = np.eye(dim)
    shear[0, -1] = 0.5
    probes.append(shear)
    for _ in range(4):
        candidate = np.eye(dim) + 0.3 * rng.standard_normal((dim, dim))
        if np.linalg.det(candidate) > 0.0:
            probes.append(candidate)
    return probes


class UserSuppliedEnergy(HyperelasticEnergy):
    """
    Energy given as a plain callable W(F). The stress is taken by central
    differences and the crack relaxation always goes through the generic
    minimization.

    :param energyFunction: Callable returning W(F) for a dim x dim matrix.
    :type energyFunction: Callable[[np.ndarray], float]
    :param dim: Dimension, 2 or 3.
    :type dim: int
    :param isotropic: Whether W(F Q) = W(F) for all rotations Q.
    :type isotropic: bool

    :raises DimensionMismatchError: If dim is not 2 or 3.
    :raises ValueError: If W is not finite on the probe set.
    """
    family = EnergyFamily.USER_SUPPLIED

    def __init__(self, energyFunction: Callable[[np.ndarray], float],
                 dim: int = 2, isotropic: bool = False) -> None:
        if dim not in (2, 3):
            raise DimensionMismatchError(
                f"User energy dimension must be 2 or 3, got {dim}.")
        self.energyFunction = energyFunction
        self.dim = dim
        self.isotropic = isotropic
        for probe in _probeSet(dim):
            value = float(energyFunction(probe))
            if not np.isfinite(value):
                raise ValueError(
                    "User energy must be finite on the probe set.")

    def _energy(self, F: np.ndarray) -> float:
        return float(self.energyFunction(F))
