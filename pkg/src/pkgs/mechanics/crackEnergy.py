import logging
import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize

from ..data.enumerators import Branch
from ..data.errors import DimensionMismatchError, RelaxationDivergedError
from ..kinematics.crackFrame import CrackFrame, TriangularFactor, \
    frameFromNormal, qrInFrame, validateDeformationGradient
from ..materials.hyperelasticEnergy import HyperelasticEnergy
from ..materials.materialModel import MaterialModel

logger = logging.getLogger(__name__)

BOUNDARY_BAND = 1e-10


@dataclass(frozen=True, eq=False)
class RelaxationResult:
    """
    Effective crack energy together with the relaxed factor it was
    evaluated at.
    """
    energy: float
    branch: Branch
    aStar: TriangularFactor
    aNnThreshold: float


@dataclass(frozen=True)
class CrackTraction:
    normal: float
    shear: tuple[float, ...]
    branch: Branch


@dataclass(frozen=True)
class GenericRelaxationSettings:
    """
    Settings of the minimization over (A''_nn, A''_t1n, A''_t2n).
    """
    lowerStretch: float = 1e-6
    upperStretch: float = 1e3
    gradientTolerance: float = 1e-10
    maxIterations: int = 200
    restarts: int = 5
    jitter: float = 0.1
    seed: int = 0


class CrackEnergy:
    """
    Effective energy Wd(F, n) of a regularized crack with normal n.

    Wd relaxes the crack-face shears and, when the crack is open
    (A_nn >= A*_nn), also the normal stretch, of the QR factor of F in the
    crack frame. Families with a known relaxed normal stretch use it
    directly; all other energies are relaxed numerically by minimizing
    W(F B) over B = I + (a - 1) n (x) n + sum_i s_i t_i (x) n.

    :param model: Material model or a bare energy.
    :type model: MaterialModel | HyperelasticEnergy
    :param settings: Generic relaxation settings.
    :type settings: GenericRelaxationSettings | None
    """
    def __init__(self, model: MaterialModel | HyperelasticEnergy,
                 settings: GenericRelaxationSettings | None = None) -> None:
        self.energy = model.energy if isinstance(model, MaterialModel) \
            else model
        self.settings = settings or GenericRelaxationSettings()

    @property
    def dim(self) -> int:
        return self.energy.dim

    def getIntactEnergy(self, F) -> float:
        """
        Intact stored energy W(F).

        :raises NonPositiveDeterminantError: If det F <= 0.
        :raises DimensionMismatchError: If F does not match the family.
        """
        return self.energy.energy(F)

    def getIntactStress(self, F) -> np.ndarray:
        """
        Intact first Piola-Kirchhoff stress dW/dF.

        :raises NonPositiveDeterminantError: If det F <= 0.
        :raises DimensionMismatchError: If F does not match the family.
        """
        return self.energy.stress(F)

    def getA22Star(self, a11: float) -> float:
        """
        Relaxed normal stretch A22*(A11) of a 2D family.

        :param a11: Tangential stretch, > 0.
        :type a11: float

        :return: A22*.
        :rtype: float

        :raises DimensionMismatchError: If the family has no A22*.
        :raises NonPositiveError: If a11 <= 0.
        """
        if not hasattr(self.energy, 'a22Star'):
            raise DimensionMismatchError(
                f"{self.energy.family.value} has no closed A22* relaxation.")
        return float(self.energy.a22Star(a11))         # type: ignore

    def getA33Star(self, a11: float, a22: float, a12: float) -> float:
        """
        Relaxed normal stretch A33*(A11, A22, A12) of a 3D family.

        :raises DimensionMismatchError: If the family has no A33*.
        :raises NonPositiveError: If a11 or a22 <= 0.
        """
        if not hasattr(self.energy, 'a33Star'):
            raise DimensionMismatchError(
                f"{self.energy.family.value} has no closed A33* relaxation.")
        return float(self.energy.a33Star(a11, a22, a12))   # type: ignore

    def getEffectiveEnergy(self, F, n) -> RelaxationResult:
        """
        Effective crack energy Wd(F, n).

        :param F: Deformation gradient, det F > 0.
        :type F: array_like
        :param n: Unit crack normal.
        :type n: array_like

        :return: Energy, branch, relaxed factor and threshold A*_nn.
        :rtype: RelaxationResult

        :raises NonPositiveDeterminantError: If det F <= 0.
        :raises NotUnitError: If n is not a unit vector.
        :raises RelaxationDivergedError: If a numeric relaxation fails.
        """
        F = validateDeformationGradient(F, self.dim)
        frame = frameFromNormal(n, self.dim)
        _, factor = qrInFrame(F, frame)
        threshold = self.energy.relaxedNormalStretch(factor.tangentialBlock)
        if threshold is None:
            return self._relaxGeneric(F, frame, factor)
        coefficients = factor.coefficients.copy()
        coefficients[:-1, -1] = 0.0
        if factor.aNn >= threshold:
            branch = Branch.OPEN
            coefficients[-1, -1] = threshold
        else:
            branch = Branch.CLOSED
        relaxed = TriangularFactor(coefficients)
        energy = self.energy.energy(relaxed.tensor(frame))
        return RelaxationResult(energy, branch, relaxed, float(threshold))

    def getEffectiveEnergyGeneric(self, F, n) -> RelaxationResult:
        """
        Effective crack energy by direct minimization of W(F B) over the
        crack-normal stretch and the crack-face shears, independent of any
        closed form.

        :raises NonPositiveDeterminantError: If det F <= 0.
        :raises RelaxationDivergedError: If the minimization fails after
                                         all restarts.
        """
        F = validateDeformationGradient(F, self.dim)
        frame = frameFromNormal(n, self.dim)
        _, factor = qrInFrame(F, frame)
        return self._relaxGeneric(F, frame, factor)

    def getEffectiveStress(self, F, n) -> np.ndarray:
        """
        Stress dWd/dF = P(F B*) B*^T, with B* the relaxing map, by the
        envelope property of the relaxation. On the branch boundary the
        closed-branch one-sided derivative is returned.

        :return: dim x dim stress.
        :rtype: np.ndarray
        """
        F = validateDeformationGradient(F, self.dim)
        frame = frameFromNormal(n, self.dim)
        _, factor = qrInFrame(F, frame)
        result = self.getEffectiveEnergy(F, frame.normal)
        relaxed = result.aStar.coefficients
        if result.branch is Branch.OPEN and abs(factor.aNn - result.aNnThreshold) \
                <= BOUNDARY_BAND * max(1.0, result.aNnThreshold):
            relaxed = relaxed.copy()
            relaxed[-1, -1] = factor.aNn
        q = frame.matrix
        relaxing = q.T @ np.linalg.solve(factor.coefficients, relaxed) @ q
        return self.energy.stress(F @ relaxing) @ relaxing.T

    def getCrackTraction(self, F, n) -> CrackTraction:
        """
        Frame components dWd/dA_nn (normal) and dWd/dA_tin (shears).

        :return: Normal and shear tractions with the branch.
        :rtype: CrackTraction
        """
        F = validateDeformationGradient(F, self.dim)
        frame = frameFromNormal(n, self.dim)
        rotation, _ = qrInFrame(F, frame)
        stress = self.getEffectiveStress(F, frame.normal)
        q = frame.matrix
        components = q @ rotation.T @ stress @ q.T
        branch = self.getEffectiveEnergy(F, frame.normal).branch
        return CrackTraction(float(components[-1, -1]),
                             tuple(float(s) for s in components[:-1, -1]),
                             branch)

    def getCompatibilityDefect(self, factor: TriangularFactor,
                               frame: CrackFrame, h: float = 1e-4) -> float:
        """
        Largest mixed derivative d^2 W / dA_nn dA_tin at the factor, by
        central differences. Zero means the normal and shear traction
        conditions can hold together.

        :param factor: Triangular factor in the frame.
        :type factor: TriangularFactor
        :param frame: Frame of the factor.
        :type frame: CrackFrame
        :param h: Difference step.
        :type h: float

        :return: max_i |d^2 W / dA_nn dA_tin|.
        :rtype: float
        """
        base = factor.coefficients
        q = frame.matrix
        defect = 0.0
        for i in range(self.dim - 1):
            def value(dn: float, ds: float) -> float:
                coefficients = base.copy()
                coefficients[-1, -1] += dn
                coefficients[i, -1] += ds
                return self.energy.energy(q.T @ coefficients @ q)
            mixed = (value(h, h) - value(h, -h) - value(-h, h)
                     + value(-h, -h)) / (4.0 * h * h)
            defect = max(defect, abs(mixed))
        return defect

    def getLandscape(self, F, samples: int = 721
                     ) -> list[tuple[float, float]]:
        """
        Sample theta -> Wd(F, (cos theta, sin theta)) over [0, pi].

        :param F: 2x2 deformation gradient.
        :type F: array_like
        :param samples: Number of angles, >= 8.
        :type samples: int

        :return: (theta, Wd) pairs.
        :rtype: list[tuple[float, float]]

        :raises DimensionMismatchError: If the model is not 2D.
        :raises ValueError: If samples < 8.
        """
        if self.dim != 2:
            raise DimensionMismatchError("Landscape needs a 2D model.")
        if samples < 8:
            raise ValueError("Landscape needs at least 8 samples.")
        return [(float(theta),
                 self.getEffectiveEnergy(F, (math.cos(theta),
                                             math.sin(theta))).energy)
                for theta in np.linspace(0.0, math.pi, samples)]

    def _relaxGeneric(self, F: np.ndarray, frame: CrackFrame,
                      factor: TriangularFactor) -> RelaxationResult:
        dim = self.dim
        q = frame.matrix

        def relaxing(stretch: float, shears: np.ndarray) -> np.ndarray:
            coefficients = np.eye(dim)
            coefficients[-1, -1] = stretch
            coefficients[:-1, -1] = shears
            return q.T @ coefficients @ q

        def openObjective(x: np.ndarray) -> tuple[float, np.ndarray]:
            B = relaxing(x[0], x[1:])
            G = F @ B
            # Frame components of F^T P(F B) give the partial derivatives
            sensitivity = q @ F.T @ self.energy.stress(G) @ q.T
            gradient = np.concatenate(([sensitivity[-1, -1]],
                                       sensitivity[:-1, -1]))
            return self.energy.energy(G), gradient

        def closedObjective(x: np.ndarray) -> tuple[float, np.ndarray]:
            value, gradient = openObjective(np.concatenate(([1.0], x)))
            return value, gradient[1:]

        start = np.zeros(dim)
        start[0] = 1.0
        bounds = [(self.settings.lowerStretch, self.settings.upperStretch)] \
            + [(None, None)] * (dim - 1)
        opened = self._minimize(openObjective, start, bounds)
        stretch = float(opened.x[0])
        threshold = factor.aNn * stretch
        if stretch <= 1.0:
            branch, energy, B = Branch.OPEN, float(opened.fun), \
                relaxing(stretch, opened.x[1:])
        else:
            closed = self._minimize(closedObjective, np.zeros(dim - 1),
                                    [(None, None)] * (dim - 1))
            branch, energy, B = Branch.CLOSED, float(closed.fun), \
                relaxing(1.0, closed.x)
        _, relaxedFactor = qrInFrame(F @ B, frame)
        return RelaxationResult(energy, branch, relaxedFactor, threshold)

    def _minimize(self, objective, start: np.ndarray, bounds: list):
        settings = self.settings
        rng = np.random.default_rng(settings.seed)
        options = {'gtol': settings.gradientTolerance,
                   'maxiter': settings.maxIterations, 'ftol': 1e-15}
        lastMessage = ''
        for attempt in range(settings.restarts + 1):
            x0 = start.copy()
            if attempt > 0:
                x0 += settings.jitter * rng.standard_normal(x0.shape)
                if bounds[0][0] is not None:
                    x0[0] = np.clip(x0[0], bounds[0][0], bounds[0][1])
                logger.debug("Relaxation restart %d from %s", attempt, x0)
            try:
                result = minimize(objective, x0, jac=True, method='L-BFGS-B',
                                  bounds=bounds, options=options)
            except (ValueError, FloatingPointError) as error:
                lastMessage = str(error)
                continue
            if result.success or _projectedGradient(result, bounds) <= 1e-7:
                return result
            lastMessage = str(result.message)
        raise RelaxationDivergedError(
            f"Crack relaxation did not converge: {lastMessage}")


def _projectedGradient(result, bounds: list) -> float:
    gradient = np.array(result.jac, dtype=float)
    for i, (lower, upper) in enumerate(bounds):
        if lower is not None and result.x[i] <= lower and gradient[i] > 0.0:
            gradient[i] = 0.0
        if upper is not None and result.x[i] >= upper and gradient[i] < 0.0:
            gradient[i] = 0.0
    return float(np.max(np.abs(gradient))) if gradient.size else 0.0


def findLocalMinima(landscape: list[tuple[float, float]]
                    ) -> list[tuple[float, float]]:
    """
    Local minima of a landscape sampled on [0, pi], treated as periodic
    (Wd(F, n) = Wd(F, -n), so the last sample repeats the first).

    :param landscape: (theta, value) pairs on a uniform grid from 0 to pi.
    :type landscape: list[tuple[float, float]]

    :return: (theta, value) of every strict-left / weak-right minimum.
    :rtype: list[tuple[float, float]]
    """
    ring = landscape[:-1]
    count = len(ring)
    minima = []
    for i, (theta, value) in enumerate(ring):
        left = ring[i - 1][1]
        right = ring[(i + 1) % count][1]
        if value < left and value <= right:
            minima.append((theta, value))
    return minima
