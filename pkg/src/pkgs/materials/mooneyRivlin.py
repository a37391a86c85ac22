import math

import numpy as np

from ..data.enumerators import EnergyFamily
from ..data.errors import NonPositiveError
from .hyperelasticEnergy import HyperelasticEnergy, requirePositive


class MooneyRivlin3D(HyperelasticEnergy):
    """
    Compressible Mooney-Rivlin energy in 3D,
    W = mu1/2 (|F|^2 - 2 ln J - 3) + mu2/2 (|cof F|^2 - 4 ln J - 3)
        + lambdaBar/2 (J - 1)^2.

    :param mu1: First shear coefficient, > 0.
    :type mu1: float
    :param mu2: Second shear coefficient, > 0.
    :type mu2: float
    :param lamBar: Volumetric coefficient, > 0.
    :type lamBar: float
    """
    family = EnergyFamily.MOONEY_RIVLIN_3D
    dim = 3

    def __init__(self, mu1: float, mu2: float, lamBar: float) -> None:
        requirePositive(mu1=mu1, mu2=mu2, lamBar=lamBar)
        self.mu1 = float(mu1)
        self.mu2 = float(mu2)
        self.lamBar = float(lamBar)

    def _energy(self, F: np.ndarray) -> float:
        det = float(np.linalg.det(F))
        cof = det * np.linalg.inv(F).T
        logDet = math.log(det)
        return 0.5 * self.mu1 * (float(np.sum(F * F)) - 2.0 * logDet - 3.0) \
            + 0.5 * self.mu2 * (float(np.sum(cof * cof)) - 4.0 * logDet - 3.0) \
            + 0.5 * self.lamBar * (det - 1.0) ** 2

    def _stress(self, F: np.ndarray) -> np.ndarray:
        det = float(np.linalg.det(F))
        invT = np.linalg.inv(F).T
        # d|cof F|^2 / dF = 2 (|F|^2 F - F F^T F)
        return self.mu1 * (F - invT) \
            + self.mu2 * (float(np.sum(F * F)) * F - F @ F.T @ F
                          - 2.0 * invT) \
            + self.lamBar * (det - 1.0) * det * invT

    def lameParameters(self) -> tuple[float, float]:
        return self.mu1 + self.mu2, self.lamBar + 2.0 * self.mu2

    def a33Star(self, a11: float, a22: float, a12: float) -> float:
        """
        Relaxed normal stretch of the open crack for the tangential block
        ((a11, a12), (0, a22)),
        A33* = (lamBar P + sqrt((lamBar P)^2 + 4 D (mu1 + 2 mu2))) / (2 D),
        with P = a11 a22 and D = mu1 + mu2 (a11^2 + a12^2 + a22^2)
        + lamBar P^2.

        :raises NonPositiveError: If a11 or a22 is not positive.
        """
        if not (a11 > 0.0 and a22 > 0.0):
            raise NonPositiveError("a11 and a22 must be positive.")
        product = a11 * a22
        denominator = self.mu1 \
            + self.mu2 * (a11 * a11 + a12 * a12 + a22 * a22) \
            + self.lamBar * product * product
        linear = self.lamBar * product
        return (linear + math.sqrt(linear * linear + 4.0 * denominator
                                   * (self.mu1 + 2.0 * self.mu2))) \
            / (2.0 * denominator)

    def relaxedNormalStretch(self, tangential: np.ndarray) -> float:
        return self.a33Star(float(tangential[0, 0]), float(tangential[1, 1]),
                            float(tangential[0, 1]))
