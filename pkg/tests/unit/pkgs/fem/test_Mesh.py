from unittest import TestCase
from unittest.mock import mock_open, patch

import numpy as np

import os
import sys

sys.path.append(os.path.abspath('./src'))

from pkgs.data.errors import MeshError                          # noqa: E402
from pkgs.fem.mesh import Mesh, boundaryEdgesOf, readMesh, \
    writeMesh                                                   # noqa: E402

NODES = [[0.0, 0.0], [1.0, 0.0], [0.0, 1.0], [1.0, 1.0]]
TRIANGLES = [[0, 1, 3], [0, 3, 2]]
EDGES = [[0, 1], [1, 3], [3, 2], [2, 0]]
TAGS = ['bottom', 'right', 'top', 'left']

MESH_FILE = """nodes 4
0 0
1 0
0 1
1 1
triangles 2
0 1 3
0 3 2
boundary 4
0 1 bottom
1 3 right
3 2 top
2 0 left
"""


class TestMesh(TestCase):
    """
    Mesh class test cases.
    """
    def setUp(self) -> None:
        """
        Test setup.
        """
        self.uut = Mesh(NODES, TRIANGLES, EDGES, TAGS)

    def test_constructor(self) -> None:
        """
        The constructor must store the arrays and the tags.
        """
        self.assertEqual(4, self.uut.nodeCount)
        self.assertEqual(2, self.uut.elementCount)
        self.assertEqual({'bottom', 'right', 'top', 'left'}, self.uut.tags)
        self.assertFalse(self.uut.isEmpty())
        self.assertTrue(Mesh([], []).isEmpty())

    def test_constructorClockwise(self) -> None:
        """
        The constructor must reject a clockwise triangle.
        """
        with self.assertRaises(MeshError) as context:
            Mesh(NODES, [[0, 3, 1], [0, 3, 2]], EDGES, TAGS)
        self.assertEqual("Triangle 0 is not positively oriented.",
                         str(context.exception))

    def test_constructorIndexOutOfRange(self) -> None:
        """
        The constructor must reject out-of-range node indices.
        """
        with self.assertRaises(MeshError) as context:
            Mesh(NODES, [[0, 1, 4]], EDGES, TAGS)
        self.assertEqual("Triangle node index out of range.",
                         str(context.exception))

    def test_constructorDuplicateNodes(self) -> None:
        """
        The constructor must reject coincident nodes.
        """
        with self.assertRaises(MeshError) as context:
            Mesh(NODES[:3] + [[0.0, 0.0]], [[0, 1, 2]])
        self.assertEqual("Nodes 0 and 3 coincide.", str(context.exception))

    def test_constructorUntaggedEdge(self) -> None:
        """
        The constructor must reject a boundary edge without tag.
        """
        with self.assertRaises(MeshError) as context:
            Mesh(NODES, TRIANGLES, EDGES[:3], TAGS[:3])
        self.assertEqual("Boundary edge (0, 2) has no tag.",
                         str(context.exception))

    def test_constructorTagCount(self) -> None:
        """
        The constructor must require one tag per boundary edge.
        """
        with self.assertRaises(MeshError) as context:
            Mesh(NODES, TRIANGLES, EDGES, TAGS[:2])
        self.assertEqual("Every boundary edge needs exactly one tag.",
                         str(context.exception))

    def test_areas(self) -> None:
        """
        The areas method must return the triangle areas.
        """
        np.testing.assert_allclose(self.uut.areas(), [0.5, 0.5])

    def test_shapeGradients(self) -> None:
        """
        The shape function gradients must sum to zero on each triangle.
        """
        np.testing.assert_allclose(self.uut.shapeGradients().sum(axis=1),
                                   0.0, atol=1e-15)

    def test_fieldGradientsAffine(self) -> None:
        """
        The fieldGradients method must recover F0 from y = F0 x.
        """
        F0 = np.array([[1.2, 0.3], [-0.1, 0.9]])
        gradients = self.uut.fieldGradients(self.uut.nodes @ F0.T)
        for gradient in gradients:
            np.testing.assert_allclose(gradient, F0, atol=1e-14)

    def test_centroidsAndSizes(self) -> None:
        """
        The centroids and elementSizes methods must use the corners.
        """
        np.testing.assert_allclose(self.uut.centroids(),
                                   [[2 / 3, 1 / 3], [1 / 3, 2 / 3]])
        np.testing.assert_allclose(self.uut.elementSizes(),
                                   [np.sqrt(2.0)] * 2)

    def test_nodalAverage(self) -> None:
        """
        The nodalAverage method must keep a constant field constant.
        """
        np.testing.assert_allclose(self.uut.nodalAverage(np.array([2.0, 2.0])),
                                   [2.0] * 4)
        np.testing.assert_allclose(self.uut.nodalAverage(np.array([1.0, 3.0])),
                                   [2.0, 1.0, 3.0, 2.0])

    def test_nodesWithTag(self) -> None:
        """
        The nodesWithTag method must return the sorted nodes of a tag.
        """
        np.testing.assert_array_equal([2, 3], self.uut.nodesWithTag('top'))
        with self.assertRaises(MeshError) as context:
            self.uut.nodesWithTag('hole')
        self.assertEqual("Boundary tag 'hole' not found in the mesh.",
                         str(context.exception))

    def test_boundaryEdgesOf(self) -> None:
        """
        The boundaryEdgesOf function must skip the shared diagonal.
        """
        self.assertEqual([(0, 1), (1, 3), (2, 3), (0, 2)],
                         boundaryEdgesOf(np.array(TRIANGLES)))

    def test_readMesh(self) -> None:
        """
        The readMesh function must parse the ASCII format.
        """
        with patch("builtins.open", mock_open(read_data=MESH_FILE)):
            mesh = readMesh('square.msh')
        np.testing.assert_array_equal(self.uut.nodes, mesh.nodes)
        np.testing.assert_array_equal(self.uut.triangles, mesh.triangles)
        self.assertEqual(TAGS, mesh.boundaryTags)

    def test_readMeshMalformed(self) -> None:
        """
        The readMesh function must reject a missing section header.
        """
        with patch("builtins.open", mock_open(read_data="vertices 1\n0 0\n")):
            with self.assertRaises(MeshError) as context:
                readMesh('square.msh')
        self.assertEqual("Expected 'nodes <count>' in square.msh.",
                         str(context.exception))

    def test_readMeshTruncated(self) -> None:
        """
        The readMesh function must reject a truncated section.
        """
        with patch("builtins.open", mock_open(read_data="nodes 3\n0 0\n")):
            with self.assertRaises(MeshError) as context:
                readMesh('square.msh')
        self.assertEqual("Truncated nodes section in square.msh.",
                         str(context.exception))

    def test_writeMesh(self) -> None:
        """
        The writeMesh function must write the format read by readMesh.
        """
        opener = mock_open()
        with patch("builtins.open", opener):
            writeMesh(self.uut, 'square.msh')
        written = ''.join(call.args[0]
                          for call in opener().write.call_args_list)
        with patch("builtins.open", mock_open(read_data=written)):
            mesh = readMesh('square.msh')
        np.testing.assert_array_equal(self.uut.nodes, mesh.nodes)
        np.testing.assert_array_equal(self.uut.boundaryEdges,
                                      mesh.boundaryEdges)
