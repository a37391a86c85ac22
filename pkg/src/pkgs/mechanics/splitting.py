from dataclasses import dataclass

import numpy as np

from ..data.enumerators import SplitMethod
from ..materials.hyperelasticEnergy import requireNonNegative, \
    requirePositive
from .smallStrain import ElasticityTensor, wdlinStress

CRACK_NORMAL = np.array([0.0, 1.0, 0.0])


@dataclass(frozen=True)
class SplitStress:
    """
    Stress of the fully damaged material under a strain-splitting model.
    """
    sigma: np.ndarray
    method: SplitMethod


@dataclass(frozen=True)
class SplittingRow:
    """
    One line of the splitting comparison: the split stress and the QR model
    traction on the crack with normal e2 for the same strain.
    """
    method: SplitMethod
    case: str
    splitNormal: float
    splitShear: float
    qrNormal: float
    qrShear: float
    intactNormal: float
    intactShear: float
    expectation: str


def _negativePart(value):
    return np.minimum(value, 0.0)


def mieheSplitStress(eps, mu: float, lam: float) -> SplitStress:
    """
    Principal-strain split,
    sigma = sum_a (lam <tr eps>- + 2 mu <eps_a>-) n_a (x) n_a.

    :param eps: Symmetric 3x3 strain.
    :type eps: array_like
    :param mu: Shear modulus.
    :type mu: float
    :param lam: First Lame parameter.
    :type lam: float

    :return: Compressive stress of the split.
    :rtype: SplitStress
    """
    eps = np.asarray(eps, dtype=float)
    values, vectors = np.linalg.eigh(0.5 * (eps + eps.T))
    weights = lam * _negativePart(np.trace(eps)) \
        + 2.0 * mu * _negativePart(values)
    sigma = (vectors * weights) @ vectors.T
    return SplitStress(0.5 * (sigma + sigma.T), SplitMethod.PRINCIPAL_STRAIN)


def amorSplitStress(eps, mu: float, lam: float) -> SplitStress:
    """
    Hydrostatic-deviatoric split, sigma = kappa <tr eps>- I with
    kappa = lam + 2 mu / 3.
    """
    eps = np.asarray(eps, dtype=float)
    kappa = lam + 2.0 * mu / 3.0
    sigma = kappa * _negativePart(float(np.trace(eps))) * np.eye(eps.shape[0])
    return SplitStress(sigma, SplitMethod.HYDRO_DEVIATORIC)


def uniaxialStrain(axis: int, sigma0: float, mu: float,
                   lam: float) -> np.ndarray:
    """
    Strain of the uniaxial stress sigma0 e_axis (x) e_axis in an isotropic
    material.
    """
    scale = sigma0 / (mu * (3.0 * lam + 2.0 * mu))
    eps = np.diag([-0.5 * lam * scale] * 3)
    eps[axis, axis] = (lam + mu) * scale
    return eps


def pureShearStrain(tau: float, mu: float) -> np.ndarray:
    eps = np.zeros((3, 3))
    eps[0, 1] = eps[1, 0] = tau / (2.0 * mu)
    return eps


def splittingReport(lam: float = 2.0, mu: float = 1.0, sigma0: float = 1.0,
                    tau: float = 1.0) -> list[SplittingRow]:
    """
    Compare both splits with the QR model on a crack with normal e2 for
    uniaxial tension parallel to the crack, pure shear and uniaxial
    compression normal to the crack.

    :param lam: First Lame parameter, >= 0.
    :type lam: float
    :param mu: Shear modulus, > 0.
    :type mu: float
    :param sigma0: Uniaxial stress magnitude.
    :type sigma0: float
    :param tau: Shear stress magnitude.
    :type tau: float

    :return: Four rows: Miehe parallel tension, Miehe shear, Amor parallel
             tension and Amor normal compression.
    :rtype: list[SplittingRow]

    :raises NonPositiveError: If mu <= 0 or lam < 0.
    """
    requirePositive(mu=mu)
    requireNonNegative(lam=lam)
    C = ElasticityTensor.isotropic(3, mu, lam)
    tension = uniaxialStrain(0, sigma0, mu, lam)
    shear = pureShearStrain(tau, mu)
    compression = uniaxialStrain(1, -sigma0, mu, lam)
    cases = [
        (mieheSplitStress, 'uniaxial tension parallel', tension,
         "split predicts compressive normal traction on an unloaded crack"),
        (mieheSplitStress, 'pure shear', shear,
         "split predicts shear traction across the crack faces"),
        (amorSplitStress, 'uniaxial tension parallel', tension,
         "split and QR model agree on zero traction"),
        (amorSplitStress, 'uniaxial compression normal', compression,
         "split underestimates the closed-crack normal traction"),
    ]
    rows = []
    for split, case, eps, expectation in cases:
        splitStress = split(eps, mu, lam)
        qrStress = wdlinStress(eps, CRACK_NORMAL, C)
        intactStress = C.stress(eps)
        rows.append(SplittingRow(
            splitStress.method, case,
            *_traction(splitStress.sigma), *_traction(qrStress),
            *_traction(intactStress), expectation))
    return rows


def _traction(sigma: np.ndarray) -> tuple[float, float]:
    traction = sigma @ CRACK_NORMAL
    normal = float(traction @ CRACK_NORMAL)
    shear = float(np.linalg.norm(traction - normal * CRACK_NORMAL))
    return normal, shear
