from unittest import TestCase

import math

import numpy as np

import os
import sys

sys.path.append(os.path.abspath('./src'))

from pkgs.data.errors import DimensionMismatchError, \
    NotPositiveDefiniteError, NotUnitError                      # noqa: E402
from pkgs.materials.mooneyRivlin import MooneyRivlin3D          # noqa: E402
from pkgs.materials.neoHookean import NeoHookean2D              # noqa: E402
from pkgs.mechanics.crackEnergy import CrackEnergy              # noqa: E402
from pkgs.mechanics.smallStrain import ElasticityTensor, \
    checkPositiveDefinite, rotateElasticityTensor, wdlin3d, \
    wdlinAnisotropic2d, wdlinIsotropic2d, wdlinStress           # noqa: E402

E2 = (0.0, 1.0)
E3 = (0.0, 0.0, 1.0)


def anisotropicTensor() -> ElasticityTensor:
    voigt = np.diag([4.0, 2.0, 3.0, 1.0, 1.5, 0.8])
    voigt[0, 1] = voigt[1, 0] = 0.5
    voigt[0, 5] = voigt[5, 0] = 0.2
    return ElasticityTensor(voigt)


class TestElasticityTensor(TestCase):
    """
    ElasticityTensor class test cases.
    """
    def setUp(self) -> None:
        """
        Test setup.
        """
        self.uut = ElasticityTensor.isotropic(2, 1.0, 1.0)

    def test_isotropicComponents(self) -> None:
        """
        The isotropic method must set c1111 = lam + 2 mu, c1122 = lam and
        c1212 = mu.
        """
        self.assertEqual(3.0, self.uut.component(0, 0, 0, 0))
        self.assertEqual(1.0, self.uut.component(0, 0, 1, 1))
        self.assertEqual(1.0, self.uut.component(0, 1, 0, 1))
        self.assertEqual(1.0, self.uut.component(1, 0, 0, 1))

    def test_constructorInvalidShape(self) -> None:
        """
        The constructor must reject Voigt matrices other than 3x3 and 6x6.
        """
        with self.assertRaises(DimensionMismatchError) as context:
            ElasticityTensor(np.eye(4))
        self.assertEqual("Voigt matrix must be 3x3 or 6x6, got shape (4, 4).",
                         str(context.exception))

    def test_fullRoundTripsThroughFromFull(self) -> None:
        """
        The full method must expand to a tensor with all symmetries.
        """
        full = anisotropicTensor().full()
        np.testing.assert_array_equal(full, full.transpose(1, 0, 2, 3))
        np.testing.assert_array_equal(full, full.transpose(2, 3, 0, 1))
        np.testing.assert_allclose(anisotropicTensor().voigt,
                                   ElasticityTensor.fromFull(full).voigt,
                                   atol=1e-15)

    def test_fromEnergy(self) -> None:
        """
        The fromEnergy method must linearize the neo-Hookean energy to the
        isotropic tensor of its Lame parameters.
        """
        tensor = ElasticityTensor.fromEnergy(NeoHookean2D(1.0, 2.0))
        np.testing.assert_allclose(
            tensor.voigt, ElasticityTensor.isotropic(2, 1.0, 2.0).voigt,
            atol=1e-6)

    def test_energyAndStress(self) -> None:
        """
        The energy method must be half of eps : C : eps.
        """
        eps = np.array([[0.1, 0.02], [0.02, -0.05]])
        stress = self.uut.stress(eps)
        np.testing.assert_allclose(
            stress, np.trace(eps) * np.eye(2) + 2.0 * eps, atol=1e-15)
        self.assertAlmostEqual(0.5 * float(np.sum(stress * eps)),
                               self.uut.energy(eps), places=15)

    def test_energyAsymmetricStrain(self) -> None:
        """
        The energy method must reject a non-symmetric strain.
        """
        with self.assertRaises(ValueError):
            self.uut.energy(np.array([[0.0, 0.1], [0.0, 0.0]]))


class TestRotateElasticityTensor(TestCase):
    """
    rotateElasticityTensor function test cases.
    """
    def test_rotateIdentity(self) -> None:
        """
        The rotateElasticityTensor function must leave C unchanged for
        Q = I and for an isotropic C.
        """
        C = anisotropicTensor()
        np.testing.assert_allclose(rotateElasticityTensor(C, np.eye(3)).voigt,
                                   C.voigt, atol=1e-15)
        angle = 0.7
        Q = np.array([[math.cos(angle), math.sin(angle), 0.0],
                      [-math.sin(angle), math.cos(angle), 0.0],
                      [0.0, 0.0, 1.0]])
        isotropic = ElasticityTensor.isotropic(3, 1.3, 0.4)
        np.testing.assert_allclose(isotropic.rotated(Q).voigt,
                                   isotropic.voigt, atol=1e-12)

    def test_rotateQuarterTurn(self) -> None:
        """
        The rotateElasticityTensor function must permute indices for a
        quarter turn about e3.
        """
        C = anisotropicTensor()
        Q = np.array([[0.0, 1.0, 0.0], [-1.0, 0.0, 0.0], [0.0, 0.0, 1.0]])
        rotated = rotateElasticityTensor(C, Q)
        self.assertAlmostEqual(C.component(1, 1, 1, 1),
                               rotated.component(0, 0, 0, 0), places=14)
        self.assertAlmostEqual(C.component(0, 0, 0, 0),
                               rotated.component(1, 1, 1, 1), places=14)
        self.assertAlmostEqual(-C.component(1, 1, 0, 1),
                               rotated.component(0, 0, 0, 1), places=14)

    def test_rotateWrongShape(self) -> None:
        """
        The rotateElasticityTensor function must reject a rotation of the
        wrong size.
        """
        with self.assertRaises(DimensionMismatchError):
            rotateElasticityTensor(anisotropicTensor(), np.eye(2))


class TestCheckPositiveDefinite(TestCase):
    """
    checkPositiveDefinite function test cases.
    """
    def test_isotropicPasses(self) -> None:
        """
        The checkPositiveDefinite function must pass an isotropic tensor with
        c1212 = mu.
        """
        report = checkPositiveDefinite(ElasticityTensor.isotropic(2, 1.0, 1.0))
        self.assertTrue(report.passed)
        self.assertEqual(1.0, report.c1212)
        self.assertEqual((), report.failures)

    def test_degenerateFails(self) -> None:
        """
        The checkPositiveDefinite function must fail for mu = 0.
        """
        report = checkPositiveDefinite(ElasticityTensor.isotropic(2, 0.0, 1.0))
        self.assertFalse(report.passed)
        self.assertIn("c1212 = 0 is not positive.", report.failures)

    def test_perturbedPasses(self) -> None:
        """
        The checkPositiveDefinite function must pass a small symmetric
        perturbation of an isotropic tensor.
        """
        rng = np.random.default_rng(8)
        noise = 0.05 * rng.standard_normal((6, 6))
        C = ElasticityTensor(ElasticityTensor.isotropic(3, 1.0, 1.0).voigt
                             + noise + noise.T)
        report = checkPositiveDefinite(C)
        self.assertTrue(report.passed)
        self.assertGreater(report.lemmaDeterminant, 0.0)


class TestWdlin(TestCase):
    """
    Linearized effective energy test cases.
    """
    def setUp(self) -> None:
        """
        Test setup.
        """
        self.rng = np.random.default_rng(17)

    def randomStrain(self, dim: int) -> np.ndarray:
        eps = 0.1 * self.rng.standard_normal((dim, dim))
        return 0.5 * (eps + eps.T)

    def randomNormal(self, dim: int) -> np.ndarray:
        n = self.rng.standard_normal(dim)
        return n / np.linalg.norm(n)

    def test_wdlinIsotropic2dBranches(self) -> None:
        """
        The wdlinIsotropic2d function must return 0 for opening, the
        relaxed tangential energy for parallel extension and the intact
        energy for normal compression.
        """
        self.assertEqual(0.0, wdlinIsotropic2d(np.diag([0.0, 0.1]), E2,
                                               1.0, 1.0))
        self.assertAlmostEqual(0.013333, wdlinIsotropic2d(
            np.diag([0.1, 0.0]), E2, 1.0, 1.0), places=6)
        self.assertAlmostEqual(0.015, wdlinIsotropic2d(
            np.diag([0.0, -0.1]), E2, 1.0, 1.0), places=15)

    def test_wdlinIsotropic2dNotUnit(self) -> None:
        """
        The wdlinIsotropic2d function must reject a non-unit normal.
        """
        with self.assertRaises(NotUnitError):
            wdlinIsotropic2d(np.zeros((2, 2)), (1.0, 1.0), 1.0, 1.0)

    def test_wdlinIsotropic2dContinuous(self) -> None:
        """
        The wdlinIsotropic2d function must be continuous across the branch
        line e22 = -lam / (lam + 2 mu) e11.
        """
        mu, lam, e11 = 1.0, 1.0, 0.1
        e22 = -lam / (lam + 2.0 * mu) * e11
        below = wdlinIsotropic2d(np.diag([e11, e22]), E2, mu, lam)
        above = 2.0 * mu * (lam + mu) / (lam + 2.0 * mu) * e11 * e11
        self.assertAlmostEqual(above, below, places=15)

    def test_wdlinAnisotropic2dReducesToIsotropic(self) -> None:
        """
        The wdlinAnisotropic2d function must reproduce the isotropic formula
        for an isotropic tensor.
        """
        C = ElasticityTensor.isotropic(2, 1.0, 1.0)
        for _ in range(100):
            eps, n = self.randomStrain(2), self.randomNormal(2)
            self.assertAlmostEqual(wdlinIsotropic2d(eps, n, 1.0, 1.0),
                                   wdlinAnisotropic2d(eps, n, C),
                                   delta=1e-12)

    def test_wdlinAnisotropic2dCoefficients(self) -> None:
        """
        The wdlinAnisotropic2d function must return 1/2 c1111 e11^2 for
        mu = 2, lam = 0 and a parallel extension.
        """
        C = ElasticityTensor.isotropic(2, 2.0, 0.0)
        self.assertAlmostEqual(0.02, wdlinAnisotropic2d(
            np.diag([0.1, 0.0]), E2, C), places=15)

    def test_wdlinAnisotropic2dQuadratic(self) -> None:
        """
        The wdlinAnisotropic2d function must scale as t^2.
        """
        noise = 0.1 * self.rng.standard_normal((3, 3))
        C = ElasticityTensor(np.diag([3.0, 2.0, 1.0]) + noise @ noise.T)
        eps, n = self.randomStrain(2), self.randomNormal(2)
        self.assertAlmostEqual(9.0 * wdlinAnisotropic2d(eps, n, C),
                               wdlinAnisotropic2d(3.0 * eps, n, C),
                               places=12)

    def test_wdlinAnisotropic2dNotPositiveDefinite(self) -> None:
        """
        The wdlinAnisotropic2d function must reject an indefinite tensor.
        """
        with self.assertRaises(NotPositiveDefiniteError):
            wdlinAnisotropic2d(np.zeros((2, 2)), E2,
                               ElasticityTensor(np.diag([1.0, 1.0, -1.0])))

    def test_wdlin3dIsotropic(self) -> None:
        """
        The wdlin3d function must return 0 for opening, the plane-stress
        energy for an in-plane extension and the intact energy for
        hydrostatic compression.
        """
        self.assertAlmostEqual(0.0, wdlin3d(np.diag([0.0, 0.0, 0.1]), E3,
                                            mu=1.0, lam=1.0), places=15)
        self.assertAlmostEqual(1.0 / 30.0, wdlin3d(
            np.diag([0.1, 0.1, 0.0]), E3, mu=1.0, lam=1.0), places=12)
        self.assertAlmostEqual(0.075, wdlin3d(
            -0.1 * np.eye(3), E3, mu=1.0, lam=1.0), places=12)

    def test_wdlin3dNeedsTensor(self) -> None:
        """
        The wdlin3d function must require C or both Lame parameters.
        """
        with self.assertRaises(ValueError) as context:
            wdlin3d(np.zeros((3, 3)), E3, mu=1.0)
        self.assertEqual("wdlin3d needs either C or both mu and lam.",
                         str(context.exception))

    def test_wdlin3dSandwich(self) -> None:
        """
        The wdlin3d function must lie between 0 and the intact energy.
        """
        C = anisotropicTensor()
        for _ in range(100):
            eps, n = self.randomStrain(3), self.randomNormal(3)
            value = wdlin3d(eps, n, C)
            self.assertGreaterEqual(value, -1e-15)
            self.assertLessEqual(value, C.energy(eps) + 1e-15)

    def test_wdlinStressTraction(self) -> None:
        """
        The wdlinStress function must have zero shear traction on the crack
        and zero normal traction on an open crack.
        """
        C = ElasticityTensor.isotropic(3, 1.0, 1.0)
        for eps in (np.diag([0.1, 0.05, -0.2]), np.diag([0.1, 0.05, 0.3])):
            eps = eps.copy()
            eps[0, 1] = eps[1, 0] = 0.03
            eps[0, 2] = eps[2, 0] = 0.04
            stress = wdlinStress(eps, E3, C)
            self.assertAlmostEqual(0.0, stress[0, 2], places=8)
            self.assertAlmostEqual(0.0, stress[1, 2], places=8)
        self.assertAlmostEqual(0.0, stress[2, 2], places=8)

    def test_linearizationConsistency(self) -> None:
        """
        The small-strain energy must be the quadratic part of the finite
        effective energy.
        """
        crackEnergy = CrackEnergy(NeoHookean2D(1.0, 1.0))
        for eps in (np.array([[1.0, 0.5], [0.5, 2.0]]),
                    np.diag([1.0, -3.0])):
            errors = []
            for t in (1e-2, 1e-3):
                finite = crackEnergy.getEffectiveEnergy(np.eye(2) + t * eps,
                                                        E2).energy
                linear = wdlinIsotropic2d(t * eps, E2, 1.0, 1.0)
                errors.append(abs(finite - linear) / t ** 2)
            self.assertLess(errors[1], errors[0] / 5.0)

    def test_linearizationMooneyRivlin(self) -> None:
        """
        The 3D small-strain energy must linearize the Mooney-Rivlin
        effective energy.
        """
        energy = MooneyRivlin3D(1.0, 1.0, 1.0)
        mu, lam = energy.lameParameters()
        crackEnergy = CrackEnergy(energy)
        eps = np.diag([0.1, 0.05, -0.2])
        t = 1e-4
        finite = crackEnergy.getEffectiveEnergy(np.eye(3) + t * eps,
                                                E3).energy
        linear = wdlin3d(t * eps, E3, mu=mu, lam=lam)
        self.assertAlmostEqual(linear / t ** 2, finite / t ** 2, places=3)
