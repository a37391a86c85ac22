import math

import numpy as np

from ..data.enumerators import EnergyFamily
from ..data.errors import NonPositiveError
from .hyperelasticEnergy import HyperelasticEnergy, minimizeStretch, \
    requireNonNegative, requirePositive


def _requireExponents(**exponents: float) -> None:
    for name, value in exponents.items():
        if not value >= 1.0:
            raise NonPositiveError(f"{name} must be at least 1, got {value}.")


class PQEnergy2D(HyperelasticEnergy):
    """
    Power-law energy in 2D,
    W = muBar/p (|F|^p - 2^(p/2) - 2^(p/2-1) p ln J) + lamBar/2 (J - 1)^2.
    p = 2 recovers the neo-Hookean energy.
    """
    family = EnergyFamily.PQ_ENERGY_2D
    dim = 2

    def __init__(self, muBar: float, lamBar: float, p: float) -> None:
        requirePositive(muBar=muBar)
        requireNonNegative(lamBar=lamBar)
        _requireExponents(p=p)
        self.muBar = float(muBar)
        self.lamBar = float(lamBar)
        self.p = float(p)

    def _energy(self, F: np.ndarray) -> float:
        p = self.p
        det = float(np.linalg.det(F))
        norm = float(np.linalg.norm(F))
        return self.muBar / p * (norm ** p - 2.0 ** (p / 2.0)
                                 - 2.0 ** (p / 2.0 - 1.0) * p * math.log(det)) \
            + 0.5 * self.lamBar * (det - 1.0) ** 2

    def _stress(self, F: np.ndarray) -> np.ndarray:
        p = self.p
        det = float(np.linalg.det(F))
        norm = float(np.linalg.norm(F))
        invT = np.linalg.inv(F).T
        return self.muBar * (norm ** (p - 2.0) * F
                             - 2.0 ** (p / 2.0 - 1.0) * invT) \
            + self.lamBar * (det - 1.0) * det * invT

    def a22Star(self, a11: float) -> float:
        """
        Unique minimizer of A22 -> W(diag(a11, A22)).

        :raises NonPositiveError: If a11 <= 0.
        :raises RelaxationDivergedError: If the 1D search fails.
        """
        if not a11 > 0.0:
            raise NonPositiveError("a11 must be positive.")
        p, muBar, lamBar = self.p, self.muBar, self.lamBar

        def energy(x: float) -> float:
            return self._energy(np.diag([a11, x]))

        def slope(x: float) -> float:
            norm = math.sqrt(a11 * a11 + x * x)
            return muBar * (norm ** (p - 2.0) * x
                            - 2.0 ** (p / 2.0 - 1.0) / x) \
                + lamBar * a11 * (a11 * x - 1.0)

        return minimizeStretch(energy, slope)

    def relaxedNormalStretch(self, tangential: np.ndarray) -> float:
        return self.a22Star(float(tangential[0, 0]))


class PQEnergy3D(HyperelasticEnergy):
    """
    Power-law energy in 3D,
    W = mu1/p (|F|^p - 3^(p/2) - 3^(p/2-1) p ln J)
        + mu2/q (|cof F|^q - 3^(q/2) - 2 3^(q/2-1) q ln J)
        + lamBar/2 (J - 1)^2.
    p = q = 2 recovers the Mooney-Rivlin energy.
    """
    family = EnergyFamily.PQ_ENERGY_3D
    dim = 3

    def __init__(self, mu1: float, mu2: float, lamBar: float, p: float,
                 q: float) -> None:
        requirePositive(mu1=mu1, mu2=mu2)
        requireNonNegative(lamBar=lamBar)
        _requireExponents(p=p, q=q)
        self.mu1 = float(mu1)
        self.mu2 = float(mu2)
        self.lamBar = float(lamBar)
        self.p = float(p)
        self.q = float(q)

    def _energy(self, F: np.ndarray) -> float:
        p, q = self.p, self.q
        det = float(np.linalg.det(F))
        logDet = math.log(det)
        norm = float(np.linalg.norm(F))
        cofNorm = float(np.linalg.norm(det * np.linalg.inv(F)))
        return self.mu1 / p * (norm ** p - 3.0 ** (p / 2.0)
                               - 3.0 ** (p / 2.0 - 1.0) * p * logDet) \
            + self.mu2 / q * (cofNorm ** q - 3.0 ** (q / 2.0)
                              - 2.0 * 3.0 ** (q / 2.0 - 1.0) * q * logDet) \
            + 0.5 * self.lamBar * (det - 1.0) ** 2

    def _stress(self, F: np.ndarray) -> np.ndarray:
        p, q = self.p, self.q
        det = float(np.linalg.det(F))
        invT = np.linalg.inv(F).T
        normSq = float(np.sum(F * F))
        cofNorm = float(np.linalg.norm(det * invT))
        return self.mu1 * (normSq ** (p / 2.0 - 1.0) * F
                           - 3.0 ** (p / 2.0 - 1.0) * invT) \
            + self.mu2 * (cofNorm ** (q - 2.0) * (normSq * F - F @ F.T @ F)
                          - 2.0 * 3.0 ** (q / 2.0 - 1.0) * invT) \
            + self.lamBar * (det - 1.0) * det * invT

    def a33Star(self, a11: float, a22: float, a12: float) -> float:
        """
        Unique minimizer of A33 -> W(((a11, a12, 0), (0, a22, 0),
        (0, 0, A33))).

        :raises NonPositiveError: If a11 or a22 is not positive.
        :raises RelaxationDivergedError: If the 1D search fails.
        """
        if not (a11 > 0.0 and a22 > 0.0):
            raise NonPositiveError("a11 and a22 must be positive.")
        p, q = self.p, self.q
        tangentialSq = a11 * a11 + a12 * a12 + a22 * a22
        product = a11 * a22

        def energy(x: float) -> float:
            return self._energy(np.array([[a11, a12, 0.0], [0.0, a22, 0.0],
                                          [0.0, 0.0, x]]))

        def slope(x: float) -> float:
            norm = math.sqrt(tangentialSq + x * x)
            cofNorm = math.sqrt(x * x * tangentialSq + product * product)
            return self.mu1 * (norm ** (p - 2.0) * x
                               - 3.0 ** (p / 2.0 - 1.0) / x) \
                + self.mu2 * (cofNorm ** (q - 2.0) * tangentialSq * x
                              - 2.0 * 3.0 ** (q / 2.0 - 1.0) / x) \
                + self.lamBar * product * (product * x - 1.0)

        return minimizeStretch(energy, slope)

    def relaxedNormalStretch(self, tangential: np.ndarray) -> float:
        return self.a33Star(float(tangential[0, 0]), float(tangential[1, 1]),
                            float(tangential[0, 1]))
