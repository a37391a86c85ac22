from dataclasses import dataclass, field

import numpy as np

from ..data.errors import DimensionMismatchError, NotPositiveDefiniteError, \
    SingularSystemError
from ..kinematics.crackFrame import frameFromNormal
from ..materials.hyperelasticEnergy import HyperelasticEnergy

VOIGT_PAIRS: dict[int, tuple[tuple[int, int], ...]] = {
    2: ((0, 0), (1, 1), (0, 1)),
    3: ((0, 0), (1, 1), (2, 2), (1, 2), (0, 2), (0, 1)),
}

SYMMETRY_TOLERANCE = 1e-14


class ElasticityTensor:
    """
    Fourth-order elasticity tensor with minor and major symmetries, stored
    as a symmetric Voigt matrix.

    :param voigt: Voigt matrix, 3x3 in 2D or 6x6 in 3D. It is symmetrized
                  on construction.
    :type voigt: array_like

    :raises DimensionMismatchError: If the matrix is not 3x3 or 6x6.
    """
    def __init__(self, voigt) -> None:
        voigt = np.asarray(voigt, dtype=float)
        sizes = {3: 2, 6: 3}
        if voigt.ndim != 2 or voigt.shape[0] != voigt.shape[1] \
                or voigt.shape[0] not in sizes:
            raise DimensionMismatchError(
                f"Voigt matrix must be 3x3 or 6x6, got shape {voigt.shape}.")
        self.dim = sizes[voigt.shape[0]]
        self.voigt = 0.5 * (voigt + voigt.T)
        self.voigt.setflags(write=False)

    @classmethod
    def isotropic(cls, dim: int, mu: float, lam: float
                  ) -> 'ElasticityTensor':
        """
        c_ijkl = lam d_ij d_kl + mu (d_ik d_jl + d_il d_jk).
        """
        delta = np.eye(dim)
        full = lam * np.einsum('ij,kl->ijkl', delta, delta) \
            + mu * (np.einsum('ik,jl->ijkl', delta, delta)
                    + np.einsum('il,jk->ijkl', delta, delta))
        return cls.fromFull(full)

    @classmethod
    def fromFull(cls, full) -> 'ElasticityTensor':
        """
        Build from c[i, j, k, l], enforcing the minor and major symmetries
        by averaging.

        :param full: Array of shape (dim,) * 4, dim 2 or 3.
        :type full: array_like

        :return: Symmetrized tensor.
        :rtype: ElasticityTensor

        :raises DimensionMismatchError: If the shape is not (2,)*4 or (3,)*4.
        """
        full = np.asarray(full, dtype=float)
        if full.ndim != 4 or len(set(full.shape)) != 1 \
                or full.shape[0] not in VOIGT_PAIRS:
            raise DimensionMismatchError(
                f"Elasticity tensor must have shape (2,)*4 or (3,)*4, got "
                f"{full.shape}.")
        minor = 0.25 * (full + full.transpose(1, 0, 2, 3)
                        + full.transpose(0, 1, 3, 2)
                        + full.transpose(1, 0, 3, 2))
        symmetric = 0.5 * (minor + minor.transpose(2, 3, 0, 1))
        pairs = VOIGT_PAIRS[full.shape[0]]
        voigt = np.array([[symmetric[i, j, k, m] for (k, m) in pairs]
                          for (i, j) in pairs])
        return cls(voigt)

    @classmethod
    def fromEnergy(cls, energy: HyperelasticEnergy) -> 'ElasticityTensor':
        """
        Linearization C = D^2 W(I) of a hyperelastic energy.
        """
        return cls.fromFull(energy.elasticityTensor())

    def full(self) -> np.ndarray:
        """
        Expand to c[i, j, k, l].

        :return: Array of shape (dim,) * 4.
        :rtype: np.ndarray
        """
        pairs = VOIGT_PAIRS[self.dim]
        full = np.zeros((self.dim,) * 4)
        for a, (i, j) in enumerate(pairs):
            for b, (k, m) in enumerate(pairs):
                value = self.voigt[a, b]
                for p, q in {(i, j), (j, i)}:
                    for r, s in {(k, m), (m, k)}:
                        full[p, q, r, s] = value
        return full

    def component(self, i: int, j: int, k: int, m: int) -> float:
        return float(self.full()[i, j, k, m])

    def mandel(self) -> np.ndarray:
        """
        Mandel matrix, whose eigenvalues are those of C acting on symmetric
        matrices.
        """
        pairs = VOIGT_PAIRS[self.dim]
        scale = np.array([1.0 if i == j else np.sqrt(2.0) for i, j in pairs])
        return self.voigt * np.outer(scale, scale)

    def rotated(self, Q) -> 'ElasticityTensor':
        return rotateElasticityTensor(self, Q)

    def stress(self, eps) -> np.ndarray:
        """
        Linear stress C : eps.
        """
        eps = _validateStrain(eps, self.dim)
        return np.einsum('ijkl,kl->ij', self.full(), eps)

    def energy(self, eps) -> float:
        """
        Quadratic energy 1/2 eps : C : eps.
        """
        eps = _validateStrain(eps, self.dim)
        return 0.5 * float(np.sum(eps * self.stress(eps)))


@dataclass(frozen=True)
class PositiveDefinitenessReport:
    """
    Outcome of the positive-definiteness check with its witnesses.
    """
    passed: bool
    minEigenvalue: float
    c1212: float
    lemmaDeterminant: float
    failures: tuple[str, ...] = field(default_factory=tuple)


def rotateElasticityTensor(C: ElasticityTensor, Q) -> ElasticityTensor:
    """
    Components in a rotated basis,
    c~_ijkl = sum Q_ip Q_jq Q_kr Q_ls c_pqrs with Q_ip = e~_i . e_p.

    :param C: Elasticity tensor.
    :type C: ElasticityTensor
    :param Q: Rotation whose rows are the new basis vectors.
    :type Q: array_like

    :return: Rotated tensor.
    :rtype: ElasticityTensor

    :raises DimensionMismatchError: If Q does not match the dimension of C.
    """
    Q = np.asarray(Q, dtype=float)
    if Q.shape != (C.dim, C.dim):
        raise DimensionMismatchError(
            f"Rotation must be {C.dim}x{C.dim}, got shape {Q.shape}.")
    return ElasticityTensor.fromFull(
        np.einsum('ip,jq,kr,ls,pqrs->ijkl', Q, Q, Q, Q, C.full()))


def checkPositiveDefinite(C: ElasticityTensor,
                          tol: float = 0.0) -> PositiveDefinitenessReport:
    """
    Check that C is positive definite on symmetric matrices, together with
    its consequences c1212 > 0 and c1212 c2222 - c1222^2 > 0.

    :param C: Elasticity tensor.
    :type C: ElasticityTensor
    :param tol: Values must exceed tol to pass.
    :type tol: float

    :return: Report with the smallest Mandel eigenvalue and the two minors.
    :rtype: PositiveDefinitenessReport
    """
    minEigenvalue = float(np.linalg.eigvalsh(C.mandel())[0])
    full = C.full()
    c1212 = float(full[0, 1, 0, 1])
    lemmaDeterminant = c1212 * float(full[1, 1, 1, 1]) \
        - float(full[0, 1, 1, 1]) ** 2
    failures = []
    if not minEigenvalue > tol:
        failures.append(f"Smallest eigenvalue {minEigenvalue:.6g} is not "
                        f"positive.")
    if not c1212 > tol:
        failures.append(f"c1212 = {c1212:.6g} is not positive.")
    if not lemmaDeterminant > tol:
        failures.append(f"c1212 c2222 - c1222^2 = {lemmaDeterminant:.6g} is "
                        f"not positive.")
    return PositiveDefinitenessReport(not failures, minEigenvalue, c1212,
                                      lemmaDeterminant, tuple(failures))


def _validateStrain(eps, dim: int) -> np.ndarray:
    eps = np.asarray(eps, dtype=float)
    if eps.shape != (dim, dim):
        raise DimensionMismatchError(
            f"Strain must be {dim}x{dim}, got shape {eps.shape}.")
    asymmetry = float(np.max(np.abs(eps - eps.T)))
    if asymmetry > SYMMETRY_TOLERANCE * max(1.0, float(np.max(np.abs(eps)))):
        raise ValueError(f"Strain must be symmetric (asymmetry "
                         f"{asymmetry:.3e}).")
    return eps


def _requirePositiveDefinite(C: ElasticityTensor) -> None:
    report = checkPositiveDefinite(C)
    if not report.passed:
        raise NotPositiveDefiniteError(
            "Elasticity tensor is not positive definite: "
            + " ".join(report.failures))


def _frameStrain(eps, n, dim: int) -> tuple[np.ndarray, np.ndarray]:
    eps = _validateStrain(eps, dim)
    q = frameFromNormal(n, dim).matrix
    rotated = q @ eps @ q.T
    return 0.5 * (rotated + rotated.T), q


def wdlinIsotropic2d(eps, n, mu: float, lam: float) -> float:
    """
    Linearized effective crack energy of an isotropic 2D material.

    With e11 = eps_tt and e22 = eps_nn in the frame (t, n), the energy is
    2 mu (lam + mu) / (lam + 2 mu) e11^2 when e22 > -lam / (lam + 2 mu) e11
    (open), and 1/2 (lam + 2 mu)(e11^2 + e22^2) + lam e11 e22 otherwise.

    :param eps: Symmetric 2x2 strain.
    :type eps: array_like
    :param n: Unit crack normal.
    :type n: array_like
    :param mu: Shear modulus.
    :type mu: float
    :param lam: First Lame parameter.
    :type lam: float

    :return: Wdlin(eps, n).
    :rtype: float

    :raises NotUnitError: If n is not a unit vector.
    """
    strain, _ = _frameStrain(eps, n, 2)
    e11, e22 = float(strain[0, 0]), float(strain[1, 1])
    longitudinal = lam + 2.0 * mu
    if e22 > -lam / longitudinal * e11:
        return 2.0 * mu * (lam + mu) / longitudinal * e11 * e11
    return 0.5 * longitudinal * (e11 * e11 + e22 * e22) + lam * e11 * e22


def wdlinAnisotropic2d(eps, n, C: ElasticityTensor) -> float:
    """
    Linearized effective crack energy of a general 2D material.

    The tensor is rotated to the frame (t, n). With T = c~1111,
    N = c~2222, S = c~1212, b = c~1122, a = c~1112, c = c~2212 and
    D = S N - c^2, the open branch e22 > (a c - b S) / D e11 gives
    1/2 (T - (a^2 N - 2 a b c + b^2 S) / D) e11^2, the closed branch
    1/2 (T - a^2/S) e11^2 + (b - a c/S) e11 e22 + 1/2 (N - c^2/S) e22^2.

    :param eps: Symmetric 2x2 strain.
    :type eps: array_like
    :param n: Unit crack normal.
    :type n: array_like
    :param C: 2D elasticity tensor.
    :type C: ElasticityTensor

    :return: Wdlin(eps, n).
    :rtype: float

    :raises NotPositiveDefiniteError: If C is not positive definite.
    :raises NotUnitError: If n is not a unit vector.
    :raises DimensionMismatchError: If C or eps is not 2D.
    """
    if C.dim != 2:
        raise DimensionMismatchError("Expected a 2D elasticity tensor.")
    _requirePositiveDefinite(C)
    strain, q = _frameStrain(eps, n, 2)
    c = rotateElasticityTensor(C, q).full()
    T, N, S = c[0, 0, 0, 0], c[1, 1, 1, 1], c[0, 1, 0, 1]
    b, a, cc = c[0, 0, 1, 1], c[0, 0, 0, 1], c[1, 1, 0, 1]
    det = S * N - cc * cc
    e11, e22 = float(strain[0, 0]), float(strain[1, 1])
    if e22 > (a * cc - b * S) / det * e11:
        return float(0.5 * (T - (a * a * N - 2.0 * a * b * cc + b * b * S)
                            / det) * e11 * e11)
    return float(0.5 * (T - a * a / S) * e11 * e11
                 + (b - a * cc / S) * e11 * e22
                 + 0.5 * (N - cc * cc / S) * e22 * e22)


def wdlin3d(eps, n, C: ElasticityTensor | None = None,
            mu: float | None = None, lam: float | None = None) -> float:
    """
    Linearized effective crack energy in 3D.

    In the frame (t1, t2, n) the crack-face shears and, on the open branch,
    the normal strain are free. The open minimizer (x13*, x23*, x33*) solves
    a 3x3 linear system; if eps_nn > x33* the crack is open and the energy
    is the minimum over all three, otherwise the normal strain is kept and
    only the shears are relaxed through a 2x2 system.

    :param eps: Symmetric 3x3 strain.
    :type eps: array_like
    :param n: Unit crack normal.
    :type n: array_like
    :param C: 3D elasticity tensor; alternatively give mu and lam.
    :type C: ElasticityTensor | None
    :param mu: Shear modulus of an isotropic material.
    :type mu: float | None
    :param lam: First Lame parameter of an isotropic material.
    :type lam: float | None

    :return: Wdlin(eps, n).
    :rtype: float

    :raises NotPositiveDefiniteError: If C is not positive definite.
    :raises SingularSystemError: If a relaxation system is singular.
    :raises ValueError: If neither C nor (mu, lam) is given.
    """
    if C is None:
        if mu is None or lam is None:
            raise ValueError("wdlin3d needs either C or both mu and lam.")
        C = ElasticityTensor.isotropic(3, mu, lam)
    if C.dim != 3:
        raise DimensionMismatchError("Expected a 3D elasticity tensor.")
    _requirePositiveDefinite(C)
    strain, q = _frameStrain(eps, n, 3)
    c = rotateElasticityTensor(C, q).full()

    base = strain.copy()
    base[:, 2] = 0.0
    base[2, :] = 0.0
    directions = []
    for k in range(3):
        direction = np.zeros((3, 3))
        direction[k, 2] += 0.5
        direction[2, k] += 0.5
        directions.append(direction)

    def contract(left: np.ndarray, right: np.ndarray) -> float:
        return float(np.einsum('ij,ijkl,kl->', left, c, right))

    matrix = np.array([[contract(u, v) for v in directions]
                       for u in directions])
    linear = np.array([contract(u, base) for u in directions])
    constant = 0.5 * contract(base, base)
    try:
        opened = np.linalg.solve(matrix, -linear)
        if strain[2, 2] > opened[2]:
            return float(constant + 0.5 * linear @ opened)
        e33 = float(strain[2, 2])
        reducedLinear = linear[:2] + matrix[:2, 2] * e33
        closed = np.linalg.solve(matrix[:2, :2], -reducedLinear)
    except np.linalg.LinAlgError as error:
        raise SingularSystemError(
            f"Crack relaxation system is singular: {error}") from None
    return float(constant + linear[2] * e33 + 0.5 * matrix[2, 2] * e33 * e33
                 + 0.5 * reducedLinear @ closed)


def wdlinStress(eps, n, C: ElasticityTensor, h: float = 1e-6) -> np.ndarray:
    """
    Small-strain stress dWdlin/deps, symmetric, by central differences.
    Differences are exact on each quadratic branch away from the branch
    line.

    :param eps: Symmetric strain, 2x2 or 3x3.
    :type eps: array_like
    :param n: Unit crack normal.
    :type n: array_like
    :param C: Elasticity tensor of the same dimension.
    :type C: ElasticityTensor
    :param h: Difference step.
    :type h: float

    :return: Symmetric stress.
    :rtype: np.ndarray
    """
    eps = _validateStrain(eps, C.dim)

    def energy(strain: np.ndarray) -> float:
        if C.dim == 2:
            return wdlinAnisotropic2d(strain, n, C)
        return wdlin3d(strain, n, C)

    stress = np.zeros((C.dim, C.dim))
    for i in range(C.dim):
        for j in range(i, C.dim):
            step = np.zeros((C.dim, C.dim))
            step[i, j] += 0.5 * h
            step[j, i] += 0.5 * h
            stress[i, j] = stress[j, i] = \
                (energy(eps + step) - energy(eps - step)) / (2.0 * h)
    return stress
