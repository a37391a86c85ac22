from unittest import TestCase

import math

import numpy as np

import os
import sys

sys.path.append(os.path.abspath('./src'))

from pkgs.data.errors import MeshError                          # noqa: E402
from pkgs.fem.meshGenerators import rectangleMesh, \
    squareWithHoleMesh                                          # noqa: E402


class TestRectangleMesh(TestCase):
    """
    rectangleMesh function test cases.
    """
    def test_rectangleMesh(self) -> None:
        """
        The rectangleMesh function must cover the rectangle with 2 nx ny
        triangles and tag the four sides.
        """
        mesh = rectangleMesh(2.0, 1.5, 4, 3, origin=(1.0, -1.0))
        self.assertEqual(20, mesh.nodeCount)
        self.assertEqual(24, mesh.elementCount)
        self.assertAlmostEqual(3.0, float(mesh.areas().sum()), places=14)
        self.assertEqual({'bottom', 'right', 'top', 'left'}, mesh.tags)
        np.testing.assert_allclose(mesh.nodes.min(axis=0), [1.0, -1.0])
        np.testing.assert_allclose(mesh.nodes.max(axis=0), [3.0, 0.5])
        self.assertEqual(5, len(mesh.nodesWithTag('bottom')))
        self.assertEqual(4, len(mesh.nodesWithTag('left')))

    def test_rectangleMeshInvalid(self) -> None:
        """
        The rectangleMesh function must reject non-positive sizes.
        """
        with self.assertRaises(MeshError) as context:
            rectangleMesh(1.0, 1.0, 0, 2)
        self.assertEqual("Rectangle sizes and cell counts must be positive.",
                         str(context.exception))


class TestSquareWithHoleMesh(TestCase):
    """
    squareWithHoleMesh function test cases.
    """
    def test_squareWithHoleMesh(self) -> None:
        """
        The squareWithHoleMesh function must mesh the square minus the
        polygonal cavity.
        """
        nTheta, radius = 32, 0.2
        mesh = squareWithHoleMesh(1.0, radius, nTheta, 6, 1.2)
        polygon = 0.5 * nTheta * radius ** 2 * math.sin(2.0 * math.pi / nTheta)
        self.assertAlmostEqual(1.0 - polygon, float(mesh.areas().sum()),
                               places=12)
        self.assertEqual(7 * nTheta, mesh.nodeCount)
        self.assertEqual({'outer', 'cavity'}, mesh.tags)
        cavity = mesh.nodes[mesh.nodesWithTag('cavity')]
        np.testing.assert_allclose(
            np.linalg.norm(cavity - 0.5, axis=1), radius, atol=1e-14)

    def test_squareWithHoleMeshInvalid(self) -> None:
        """
        The squareWithHoleMesh function must reject inconsistent arguments.
        """
        with self.assertRaises(MeshError) as context:
            squareWithHoleMesh(1.0, 0.6)
        self.assertEqual("Cavity radius must lie in (0, size / 2).",
                         str(context.exception))
        with self.assertRaises(MeshError) as context:
            squareWithHoleMesh(nTheta=12)
        self.assertEqual("nTheta must be a positive multiple of 8.",
                         str(context.exception))
        with self.assertRaises(MeshError):
            squareWithHoleMesh(nRadial=0)
