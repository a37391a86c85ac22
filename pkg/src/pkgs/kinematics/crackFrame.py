from dataclasses import dataclass

import numpy as np

from ..data.errors import DegenerateFrameError, DimensionMismatchError, \
    NonPositiveDeterminantError, NotUnitError

UNIT_TOLERANCE = 1e-8
ORTHONORMAL_TOLERANCE = 1e-12
DEGENERATE_NORMAL_TOLERANCE = 1e-8


@dataclass(frozen=True, eq=False)
class CrackFrame:
    """
    Orthonormal basis attached to a regularized crack.

    The tangents come first and the normal last, so that the frame matrix
    (rows t1, [t2,] n) maps physical components to frame components.
    """
    tangents: tuple[np.ndarray, ...]
    normal: np.ndarray

    @property
    def dim(self) -> int:
        return self.normal.shape[0]

    @property
    def matrix(self) -> np.ndarray:
        """
        Frame matrix with the tangents and the normal as rows.

        :return: dim x dim orthogonal matrix.
        :rtype: np.ndarray
        """
        return np.vstack(self.tangents + (self.normal,))

    def validate(self, tol: float = ORTHONORMAL_TOLERANCE) -> None:
        """
        Check orthonormality (and right-handedness in 3D).

        :param tol: Absolute tolerance on Q Q^T - I.
        :type tol: float

        :raises DegenerateFrameError: If the frame is not orthonormal or, in
                                      3D, not right-handed.
        """
        q = self.matrix
        if q.shape != (self.dim, self.dim):
            raise DegenerateFrameError(
                f"Frame needs {self.dim - 1} tangent(s) for dimension "
                f"{self.dim}.")
        defect = np.max(np.abs(q @ q.T - np.eye(self.dim)))
        if defect > tol:
            raise DegenerateFrameError(
                f"Frame is not orthonormal (defect {defect:.3e}).")
        if self.dim == 3 and np.linalg.det(q) < 0.0:
            raise DegenerateFrameError("Frame is not right-handed.")


@dataclass(frozen=True, eq=False)
class TriangularFactor:
    """
    Upper-triangular factor of F in a crack frame.

    ``coefficients[i, j]`` is A_{e_i e_j} with the frame ordering
    (t1, [t2,] n), so the normal stretch sits in the last diagonal slot and
    the crack-face shears in the last column.
    """
    coefficients: np.ndarray

    @property
    def dim(self) -> int:
        return self.coefficients.shape[0]

    @property
    def aNn(self) -> float:
        return float(self.coefficients[-1, -1])

    @property
    def aT1T1(self) -> float:
        return float(self.coefficients[0, 0])

    @property
    def aT2T2(self) -> float:
        self._require3d()
        return float(self.coefficients[1, 1])

    @property
    def aT1N(self) -> float:
        return float(self.coefficients[0, -1])

    @property
    def aT2N(self) -> float:
        self._require3d()
        return float(self.coefficients[1, -1])

    @property
    def aT1T2(self) -> float:
        self._require3d()
        return float(self.coefficients[0, 1])

    @property
    def tangentialBlock(self) -> np.ndarray:
        return self.coefficients[:-1, :-1].copy()

    @property
    def shears(self) -> np.ndarray:
        return self.coefficients[:-1, -1].copy()

    def tensor(self, frame: CrackFrame) -> np.ndarray:
        """
        Reconstruct A = sum A_ij t_i (x) t_j in physical components.

        :param frame: Frame the coefficients refer to.
        :type frame: CrackFrame

        :return: dim x dim matrix.
        :rtype: np.ndarray
        """
        q = frame.matrix
        return q.T @ self.coefficients @ q

    def _require3d(self) -> None:
        if self.dim != 3:
            raise DimensionMismatchError(
                "Coefficient only exists for 3D factors.")


def validateDeformationGradient(F, dim: int | None = None) -> np.ndarray:
    """
    Convert and check a deformation gradient.

    :param F: Square matrix.
    :type F: array_like
    :param dim: Expected dimension, or None to accept 2 or 3.
    :type dim: int | None

    :return: The matrix as a float array.
    :rtype: np.ndarray

    :raises DimensionMismatchError: If F is not 2x2/3x3 or not dim x dim.
    :raises NonPositiveDeterminantError: If det F <= 0 or F is not finite.
    """
    F = np.asarray(F, dtype=float)
    if F.ndim != 2 or F.shape[0] != F.shape[1] or F.shape[0] not in (2, 3):
        raise DimensionMismatchError(
            f"Deformation gradient must be 2x2 or 3x3, got shape {F.shape}.")
    if dim is not None and F.shape[0] != dim:
        raise DimensionMismatchError(
            f"Expected a {dim}x{dim} deformation gradient, got "
            f"{F.shape[0]}x{F.shape[1]}.")
    if not np.all(np.isfinite(F)):
        raise NonPositiveDeterminantError(
            "Deformation gradient has non-finite entries.")
    det = float(np.linalg.det(F))
    if det <= 0.0:
        raise NonPositiveDeterminantError(
            f"Deformation gradient must have positive determinant, "
            f"got {det:.6g}.")
    return F


def frameFromNormal(n, dim: int | None = None,
                    tol: float = UNIT_TOLERANCE) -> CrackFrame:
    """
    Build the crack frame of a unit normal.

    In 2D the tangent is t = (n2, -n1). In 3D the tangents are
    t1 = (n1 n3, n2 n3, -(n1^2 + n2^2)) / s and t2 = n x t1 with
    s = sqrt(n1^2 + n2^2); when s is tiny, t1 is e1 orthogonalized against n.

    :param n: Crack normal.
    :type n: array_like
    :param dim: Expected dimension, or None to use len(n).
    :type dim: int | None
    :param tol: Tolerance on |n| - 1.
    :type tol: float

    :return: Orthonormal frame with normal n.
    :rtype: CrackFrame

    :raises DimensionMismatchError: If n has the wrong length.
    :raises NotUnitError: If n is not a unit vector.
    """
    n = np.asarray(n, dtype=float).reshape(-1)
    if dim is None:
        dim = n.shape[0]
    if n.shape[0] != dim or dim not in (2, 3):
        raise DimensionMismatchError(
            f"Normal must have {dim} components, got {n.shape[0]}.")
    norm = float(np.linalg.norm(n))
    if not np.isfinite(norm) or abs(norm - 1.0) > tol:
        raise NotUnitError(f"Crack normal must be a unit vector, "
                           f"got norm {norm:.12g}.")
    n = n / norm
    if dim == 2:
        return CrackFrame((np.array([n[1], -n[0]]),), n)
    s = float(np.hypot(n[0], n[1]))
    if s > DEGENERATE_NORMAL_TOLERANCE:
        t1 = np.array([n[0] * n[2], n[1] * n[2], -s * s]) / s
    else:
        t1 = np.array([1.0, 0.0, 0.0]) - n[0] * n
        t1 /= np.linalg.norm(t1)
    t2 = np.cross(n, t1)
    return CrackFrame((t1, t2), n)


def _modifiedGramSchmidt(G: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """
    QR of a small square matrix by modified Gram-Schmidt with one
    re-orthogonalization pass.
    """
    dim = G.shape[1]
    q = np.array(G, dtype=float)
    r = np.zeros((dim, dim))
    for j in range(dim):
        v = q[:, j].copy()
        for _ in range(2):
            for k in range(j):
                rkj = float(np.dot(q[:, k], v))
                r[k, j] += rkj
                v -= rkj * q[:, k]
        r[j, j] = float(np.linalg.norm(v))
        q[:, j] = v / r[j, j]
    return q, r


def qrInFrame(F, frame: CrackFrame) -> tuple[np.ndarray, TriangularFactor]:
    """
    Decompose F = R A with R a rotation and A upper triangular, with
    positive diagonal, in the crack frame.

    :param F: Deformation gradient with positive determinant.
    :type F: array_like
    :param frame: Crack frame.
    :type frame: CrackFrame

    :return: Rotation R and the triangular factor of A.
    :rtype: tuple[np.ndarray, TriangularFactor]

    :raises NonPositiveDeterminantError: If det F <= 0.
    :raises DegenerateFrameError: If the frame is not orthonormal.
    :raises DimensionMismatchError: If F and the frame disagree in size.
    """
    F = validateDeformationGradient(F, frame.dim)
    frame.validate()
    q = frame.matrix
    # Columns of G are F t1, [F t2,] F n
    rotation, coefficients = _modifiedGramSchmidt(F @ q.T)
    return rotation @ q, TriangularFactor(coefficients)


def normalStretch(F, n) -> float:
    """
    Normal stretch A_nn = 1 / |F^{-T} n|.

    :param F: Deformation gradient with positive determinant.
    :type F: array_like
    :param n: Unit normal.
    :type n: array_like

    :return: A_nn.
    :rtype: float

    :raises NonPositiveDeterminantError: If det F <= 0.
    """
    F = validateDeformationGradient(F)
    n = np.asarray(n, dtype=float).reshape(-1)
    if n.shape[0] != F.shape[0]:
        raise DimensionMismatchError(
            f"Normal must have {F.shape[0]} components, got {n.shape[0]}.")
    return float(1.0 / np.linalg.norm(np.linalg.solve(F.T, n)))
