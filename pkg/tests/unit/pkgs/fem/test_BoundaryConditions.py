from unittest import TestCase

import numpy as np

import os
import sys

sys.path.append(os.path.abspath('./src'))

from pkgs.data.enumerators import BoundaryKind                  # noqa: E402
from pkgs.data.errors import ConfigError                        # noqa: E402
from pkgs.fem.boundaryConditions import BoundaryCondition, \
    dirichletData                                               # noqa: E402
from pkgs.fem.meshGenerators import rectangleMesh               # noqa: E402


class TestBoundaryCondition(TestCase):
    """
    BoundaryCondition class test cases.
    """
    def test_fromDictAffine(self) -> None:
        """
        The fromDict method must build an affine condition with its map.
        """
        condition = BoundaryCondition.fromDict(
            {'tag': 'top', 'kind': 'dirichlet_affine',
             'F0': [[1.0, 0.1], [0.0, 1.0]], 'mask': [True, False]})
        self.assertEqual(BoundaryKind.DIRICHLET_AFFINE, condition.kind)
        self.assertEqual((True, False), condition.mask)
        np.testing.assert_array_equal([[1.0, 0.1], [0.0, 1.0]], condition.F0)

    def test_fromDictTractionFree(self) -> None:
        """
        The fromDict method must build a traction-free condition without
        constrained components.
        """
        condition = BoundaryCondition.fromDict({'tag': 'left',
                                                'kind': 'traction_free'})
        self.assertEqual(BoundaryKind.TRACTION_FREE, condition.kind)
        self.assertEqual((False, False), condition.mask)

    def test_fromDictErrors(self) -> None:
        """
        The fromDict method must report missing and unknown fields.
        """
        with self.assertRaises(ConfigError) as context:
            BoundaryCondition.fromDict({'kind': 'dirichlet_zero'})
        self.assertEqual("Boundary condition misses 'tag'.",
                         str(context.exception))
        with self.assertRaises(ConfigError) as context:
            BoundaryCondition.fromDict({'tag': 'top', 'kind': 'neumann'})
        self.assertEqual("Unknown boundary kind 'neumann'.",
                         str(context.exception))
        with self.assertRaises(ConfigError) as context:
            BoundaryCondition.fromDict({'tag': 'top',
                                        'kind': 'dirichlet_affine'})
        self.assertEqual("Affine condition on 'top' misses F0.",
                         str(context.exception))

    def test_affineShape(self) -> None:
        """
        The affine method must require a 2x2 map.
        """
        with self.assertRaises(ConfigError) as context:
            BoundaryCondition.affine('top', np.eye(3))
        self.assertEqual("F0 must be 2x2, got shape (3, 3).",
                         str(context.exception))

    def test_withF0(self) -> None:
        """
        The withF0 method must return a copy with the new map.
        """
        condition = BoundaryCondition.affine('top', np.eye(2))
        moved = condition.withF0([[1.0, 0.2], [0.0, 1.0]])
        np.testing.assert_array_equal(np.eye(2), condition.F0)
        self.assertEqual(0.2, moved.F0[0, 1])
        self.assertEqual('top', moved.tag)


class TestDirichletData(TestCase):
    """
    dirichletData function test cases.
    """
    def setUp(self) -> None:
        """
        Test setup.
        """
        self.mesh = rectangleMesh(1.0, 1.0, 2, 2)

    def test_dirichletData(self) -> None:
        """
        The dirichletData function must fix the tagged components at their
        targets, later conditions winning.
        """
        F0 = np.array([[1.0, 0.5], [0.0, 1.0]])
        data = dirichletData(self.mesh, [
            BoundaryCondition.affine('top', F0),
            BoundaryCondition.zero('bottom', (False, True)),
            BoundaryCondition.tractionFree('left')])
        top = self.mesh.nodesWithTag('top')
        bottom = self.mesh.nodesWithTag('bottom')
        self.assertTrue(data.fixed[top].all())
        np.testing.assert_allclose(data.values[top],
                                   self.mesh.nodes[top] @ F0.T)
        self.assertFalse(data.fixed[bottom, 0].any())
        self.assertTrue(data.fixed[bottom, 1].all())
        self.assertEqual(2 * len(top) + len(bottom), int(data.fixed.sum()))

        y = np.full((self.mesh.nodeCount, 2), 7.0)
        constrained = data.apply(y)
        np.testing.assert_allclose(constrained[top],
                                   self.mesh.nodes[top] @ F0.T)
        self.assertTrue(np.all(constrained[bottom, 0] == 7.0))
        self.assertTrue(np.all(y == 7.0))

    def test_dirichletDataUnknownTag(self) -> None:
        """
        The dirichletData function must reject a tag missing from the mesh.
        """
        with self.assertRaises(ConfigError) as context:
            dirichletData(self.mesh, [BoundaryCondition.zero('cavity')])
        self.assertEqual("Boundary tag 'cavity' not found in the mesh.",
                         str(context.exception))
