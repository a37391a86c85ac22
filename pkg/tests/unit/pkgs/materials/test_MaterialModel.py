from unittest import TestCase

import numpy as np

import os
import sys

sys.path.append(os.path.abspath('./src'))

from pkgs.data.enumerators import EnergyFamily                  # noqa: E402
from pkgs.data.errors import NonPositiveError                   # noqa: E402
from pkgs.materials.materialModel import MaterialModel          # noqa: E402
from pkgs.materials.neoHookean import NeoHookean2D              # noqa: E402
from pkgs.materials.userEnergy import UserSuppliedEnergy        # noqa: E402


class TestMaterialModel(TestCase):
    """
    MaterialModel class test cases.
    """
    def setUp(self) -> None:
        self.uut = MaterialModel(EnergyFamily.NEO_HOOKEAN_2D,
                                 {'mu': 2.0, 'lambda': 4.0}, 6.0)

    def test_constructorBuildsEnergy(self) -> None:
        """
        The constructor must build the energy of the family.
        """
        self.assertIsInstance(self.uut.energy, NeoHookean2D)
        self.assertEqual(2, self.uut.dim)
        self.assertEqual((2.0, 4.0), self.uut.lameParameters())

    def test_constructorMissingParameter(self) -> None:
        """
        The constructor must reject a missing parameter.
        """
        with self.assertRaises(ValueError) as context:
            MaterialModel(EnergyFamily.NEO_HOOKEAN_2D, {'mu': 1.0})
        self.assertEqual("Missing parameter 'lambda' for NeoHookean2D.",
                         str(context.exception))

    def test_constructorUnknownParameter(self) -> None:
        """
        The constructor must reject a parameter the family does not know.
        """
        with self.assertRaises(ValueError) as context:
            MaterialModel(EnergyFamily.NEO_HOOKEAN_2D,
                          {'mu': 1.0, 'lambda': 1.0, 'p': 2.0})
        self.assertEqual("Unknown parameter 'p' for NeoHookean2D.",
                         str(context.exception))

    def test_constructorNonPositiveToughness(self) -> None:
        """
        The constructor must reject G_c <= 0.
        """
        with self.assertRaises(NonPositiveError):
            MaterialModel(EnergyFamily.NEO_HOOKEAN_2D,
                          {'mu': 1.0, 'lambda': 1.0}, 0.0)

    def test_userSuppliedEnergy(self) -> None:
        """
        The constructor must wrap a user callable and require one.
        """
        model = MaterialModel(
            EnergyFamily.USER_SUPPLIED,
            userEnergy=lambda F: 0.5 * float(np.sum((F - np.eye(2)) ** 2)))
        self.assertIsInstance(model.energy, UserSuppliedEnergy)
        with self.assertRaises(ValueError):
            MaterialModel(EnergyFamily.USER_SUPPLIED)

    def test_scaled(self) -> None:
        """
        The scaled method must divide the stresses by the stress scale and
        G_c by the stress scale times the length scale.
        """
        scaled = self.uut.scaled(2.0, 3.0)
        self.assertEqual({'mu': 1.0, 'lambda': 2.0}, dict(scaled.parameters))
        self.assertEqual(1.0, scaled.gc)

    def test_scaledKeepsExponents(self) -> None:
        """
        The scaled method must leave the exponents untouched.
        """
        model = MaterialModel(EnergyFamily.PQ_ENERGY_2D,
                              {'mu_bar': 2.0, 'lambda_bar': 2.0, 'p': 3.0})
        self.assertEqual(3.0, model.scaled(2.0).parameters['p'])

    def test_fromDict(self) -> None:
        """
        The fromDict method must read the family, parameters and G_c.
        """
        model = MaterialModel.fromDict({
            'family': 'MooneyRivlin3D',
            'parameters': {'mu1': 1.0, 'mu2': 1.0, 'lambda_bar': 1.0},
            'gc': 2.0})
        self.assertEqual(EnergyFamily.MOONEY_RIVLIN_3D, model.family)
        self.assertEqual(3, model.dim)
        self.assertEqual(2.0, model.gc)

    def test_fromDictUnknownFamily(self) -> None:
        """
        The fromDict method must reject an unknown family.
        """
        with self.assertRaises(ValueError) as context:
            MaterialModel.fromDict({'family': 'Foo'})
        self.assertEqual("Unknown energy family 'Foo'.",
                         str(context.exception))
