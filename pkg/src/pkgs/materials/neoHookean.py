import numpy as np

from ..data.enumerators import EnergyFamily
from ..data.errors import NonPositiveError
from .hyperelasticEnergy import HyperelasticEnergy, requireNonNegative, \
    requirePositive


def _inverseTranspose(F: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """
    Determinants and inverse transposes of a stack of 2x2 matrices.
    """
    det = F[..., 0, 0] * F[..., 1, 1] - F[..., 0, 1] * F[..., 1, 0]
    cof = np.empty_like(F)
    cof[..., 0, 0] = F[..., 1, 1]
    cof[..., 0, 1] = -F[..., 1, 0]
    cof[..., 1, 0] = -F[..., 0, 1]
    cof[..., 1, 1] = F[..., 0, 0]
    return det, cof / det[..., None, None]


class NeoHookean2D(HyperelasticEnergy):
    """
    Compressible neo-Hookean energy in 2D,
    W = mu/2 (|F|^2 - 2 - 2 ln det F) + lambda/2 (det F - 1)^2.

    :param mu: Shear modulus, > 0.
    :type mu: float
    :param lam: First Lame parameter, >= 0.
    :type lam: float

    :raises NonPositiveError: If mu <= 0 or lam < 0.
    """
    family = EnergyFamily.NEO_HOOKEAN_2D
    dim = 2

    def __init__(self, mu: float, lam: float) -> None:
        requirePositive(mu=mu)
        requireNonNegative(lam=lam)
        self.mu = float(mu)
        self.lam = float(lam)

    def _energy(self, F: np.ndarray) -> float:
        return float(self.batchEnergy(F[None])[0])

    def _stress(self, F: np.ndarray) -> np.ndarray:
        return self.batchStress(F[None])[0]

    def batchEnergy(self, F: np.ndarray) -> np.ndarray:
        det = F[..., 0, 0] * F[..., 1, 1] - F[..., 0, 1] * F[..., 1, 0]
        return 0.5 * self.mu * (np.sum(F * F, axis=(-2, -1)) - 2.0
                                - 2.0 * np.log(det)) \
            + 0.5 * self.lam * (det - 1.0) ** 2

    def batchStress(self, F: np.ndarray) -> np.ndarray:
        det, invT = _inverseTranspose(F)
        return self.mu * (F - invT) \
            + (self.lam * (det - 1.0) * det)[..., None, None] * invT

    def lameParameters(self) -> tuple[float, float]:
        return self.mu, self.lam

    def a22Star(self, a11):
        """
        Relaxed normal stretch of the open crack,
        A22* = (lam A11 + sqrt(4 mu^2 + 4 mu lam A11^2 + lam^2 A11^2))
               / (2 (mu + lam A11^2)).

        :param a11: Tangential stretch A11 > 0 (scalar or array).
        :type a11: float | np.ndarray

        :return: A22*(A11).
        :rtype: float | np.ndarray

        :raises NonPositiveError: If a11 <= 0.
        """
        a11 = np.asarray(a11, dtype=float)
        if np.any(~(a11 > 0.0)):
            raise NonPositiveError("a11 must be positive.")
        mu, lam = self.mu, self.lam
        value = (lam * a11 + np.sqrt(4.0 * mu * mu + 4.0 * mu * lam * a11 ** 2
                                     + lam * lam * a11 ** 2)) \
            / (2.0 * (mu + lam * a11 ** 2))
        return float(value) if value.ndim == 0 else value

    def relaxedNormalStretch(self, tangential: np.ndarray) -> float:
        return self.a22Star(float(tangential[0, 0]))

    def batchEffective(self, F: np.ndarray, n: np.ndarray
                       ) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """
        Effective crack energy, its stress and its derivative with respect
        to the normal angle for stacks of deformation gradients and normals.

        With t = (n2, -n1), A11 = |F t| and A22 = det F / A11, the open
        branch (A22 > A22*(A11)) gives W(diag(A11, A22*)) and the closed
        branch W(diag(A11, A22)). On the boundary both values agree and the
        closed-branch stress is returned.

        :param F: Deformation gradients, shape (m, 2, 2), det > 0.
        :type F: np.ndarray
        :param n: Unit normals (cos theta, sin theta), shape (m, 2).
        :type n: np.ndarray

        :return: Wd (m,), dWd/dF (m, 2, 2), dWd/dtheta (m,).
        :rtype: tuple[np.ndarray, np.ndarray, np.ndarray]
        """
        mu, lam = self.mu, self.lam
        t = np.stack((n[:, 1], -n[:, 0]), axis=1)
        Ft = np.einsum('mij,mj->mi', F, t)
        Fn = np.einsum('mij,mj->mi', F, n)
        a11 = np.linalg.norm(Ft, axis=1)
        det, invT = _inverseTranspose(F)
        a22 = det / a11
        relaxed = self.a22Star(a11)
        opened = a22 > relaxed

        b = np.where(opened, relaxed, a22)
        ab = a11 * b
        energy = 0.5 * mu * (a11 ** 2 + b ** 2 - 2.0 - 2.0 * np.log(ab)) \
            + 0.5 * lam * (ab - 1.0) ** 2

        dOpen = mu * (a11 - 1.0 / a11) + lam * relaxed * (a11 * relaxed - 1.0)
        dClosed = mu * (a11 - det ** 2 / a11 ** 3)
        dA11 = np.where(opened, dOpen, dClosed)
        dDet = np.where(opened, 0.0,
                        mu * (det / a11 ** 2 - 1.0 / det)
                        + lam * (det - 1.0))

        tangential = np.einsum('mi,mj->mij', Ft, t) / a11[:, None, None]
        stress = dA11[:, None, None] * tangential \
            + (dDet * det)[:, None, None] * invT
        dTheta = dA11 * np.einsum('mi,mi->m', Ft, Fn) / a11
        return energy, stress, dTheta
