from unittest import TestCase

import numpy as np

import os
import sys

sys.path.append(os.path.abspath('./src'))

from pkgs.data.errors import DegenerateFrameError, \
    DimensionMismatchError, NonPositiveDeterminantError, \
    NotUnitError                                                # noqa: E402
from pkgs.kinematics.crackFrame import CrackFrame, TriangularFactor, \
    frameFromNormal, normalStretch, qrInFrame, \
    validateDeformationGradient                                 # noqa: E402


class TestCrackFrame(TestCase):
    """
    Crack frame and QR kinematics test cases.
    """
    def setUp(self) -> None:
        self.rng = np.random.default_rng(7)

    def randomGradient(self, dim: int) -> np.ndarray:
        while True:
            F = np.eye(dim) + 0.4 * self.rng.standard_normal((dim, dim))
            if np.linalg.det(F) > 0.1:
                return F

    def randomNormal(self, dim: int) -> np.ndarray:
        n = self.rng.standard_normal(dim)
        return n / np.linalg.norm(n)

    def test_frameFromNormal2d(self) -> None:
        """
        The frameFromNormal function must return t = (n2, -n1) in 2D.
        """
        frame = frameFromNormal([0.0, 1.0])
        np.testing.assert_allclose(frame.tangents[0], [1.0, 0.0])
        np.testing.assert_allclose(frame.matrix, np.eye(2))

    def test_frameFromNormal3dRightHanded(self) -> None:
        """
        The frameFromNormal function must return a right-handed orthonormal
        frame in 3D, including the polar fallback.
        """
        frame = frameFromNormal([0.0, 0.0, 1.0])
        np.testing.assert_allclose(frame.tangents[0], [1.0, 0.0, 0.0])
        np.testing.assert_allclose(frame.tangents[1], [0.0, 1.0, 0.0])
        for _ in range(50):
            q = frameFromNormal(self.randomNormal(3)).matrix
            np.testing.assert_allclose(q @ q.T, np.eye(3), atol=1e-12)
            self.assertAlmostEqual(1.0, float(np.linalg.det(q)), places=12)

    def test_frameFromNormalNotUnit(self) -> None:
        """
        The frameFromNormal function must reject a normal that is not a unit
        vector.
        """
        with self.assertRaises(NotUnitError) as context:
            frameFromNormal([0.0, 2.0])
        self.assertEqual("Crack normal must be a unit vector, got norm 2.",
                         str(context.exception))

    def test_frameFromNormalWrongDimension(self) -> None:
        """
        The frameFromNormal function must reject a normal of the wrong
        length.
        """
        with self.assertRaises(DimensionMismatchError):
            frameFromNormal([1.0, 0.0], dim=3)

    def test_validateFrameDegenerate(self) -> None:
        """
        The validate method must reject a frame whose tangent is parallel to
        its normal.
        """
        frame = CrackFrame((np.array([1.0, 0.0]),), np.array([1.0, 0.0]))
        with self.assertRaises(DegenerateFrameError):
            frame.validate()

    def test_validateDeformationGradientNegativeDeterminant(self) -> None:
        """
        The validateDeformationGradient function must reject det F <= 0.
        """
        with self.assertRaises(NonPositiveDeterminantError) as context:
            validateDeformationGradient(np.diag([1.0, -1.0]))
        self.assertEqual("Deformation gradient must have positive "
                         "determinant, got -1.", str(context.exception))

    def test_validateDeformationGradientShape(self) -> None:
        """
        The validateDeformationGradient function must reject non-square and
        4x4 matrices.
        """
        with self.assertRaises(DimensionMismatchError):
            validateDeformationGradient(np.eye(4))
        with self.assertRaises(DimensionMismatchError):
            validateDeformationGradient(np.ones((2, 3)))

    def test_qrInFrameShear(self) -> None:
        """
        The qrInFrame function must factor a simple shear along the crack
        into a unit normal stretch and a face shear.
        """
        F = np.array([[1.0, 0.5], [0.0, 1.0]])
        rotation, factor = qrInFrame(F, frameFromNormal([0.0, 1.0]))
        np.testing.assert_allclose(rotation, np.eye(2), atol=1e-15)
        np.testing.assert_allclose(factor.coefficients,
                                   [[1.0, 0.5], [0.0, 1.0]])
        self.assertAlmostEqual(1.0, factor.aNn)
        self.assertAlmostEqual(0.5, factor.aT1N)

    def test_qrInFrameReconstruction(self) -> None:
        """
        The qrInFrame function must return a rotation and an upper
        triangular factor with positive diagonal such that F = R A.
        """
        for dim in (2, 3):
            for _ in range(100):
                F = self.randomGradient(dim)
                frame = frameFromNormal(self.randomNormal(dim))
                rotation, factor = qrInFrame(F, frame)
                np.testing.assert_allclose(rotation @ rotation.T,
                                           np.eye(dim), atol=1e-12)
                self.assertGreater(np.linalg.det(rotation), 0.0)
                self.assertTrue(np.all(np.diag(factor.coefficients) > 0.0))
                np.testing.assert_allclose(
                    np.tril(factor.coefficients, -1), 0.0, atol=1e-15)
                np.testing.assert_allclose(
                    rotation @ factor.tensor(frame), F, atol=1e-12)

    def test_qrInFrameNegativeDeterminant(self) -> None:
        """
        The qrInFrame function must reject det F <= 0.
        """
        with self.assertRaises(NonPositiveDeterminantError):
            qrInFrame(np.diag([-1.0, 1.0]), frameFromNormal([0.0, 1.0]))

    def test_normalStretch(self) -> None:
        """
        The normalStretch function must return 1 / |F^-T n| and match the
        last diagonal entry of the QR factor.
        """
        self.assertAlmostEqual(2.0, normalStretch(np.diag([1.0, 2.0]),
                                                  [0.0, 1.0]))
        for dim in (2, 3):
            for _ in range(50):
                F = self.randomGradient(dim)
                n = self.randomNormal(dim)
                _, factor = qrInFrame(F, frameFromNormal(n))
                self.assertAlmostEqual(factor.aNn, normalStretch(F, n),
                                       places=10)

    def test_threeDimensionalCoefficientOn2dFactor(self) -> None:
        """
        The 3D coefficient accessors must raise DimensionMismatchError on a
        2D factor.
        """
        factor = TriangularFactor(np.eye(2))
        with self.assertRaises(DimensionMismatchError) as context:
            factor.aT2T2
        self.assertEqual("Coefficient only exists for 3D factors.",
                         str(context.exception))
