import numpy as np
from scipy.spatial import cKDTree

from ..data.errors import MeshError

DUPLICATE_TOLERANCE = 1e-12


class Mesh:
    """
    Two-dimensional P1 triangle mesh.

    :param nodes: Node coordinates, shape (N, 2).
    :type nodes: array_like
    :param triangles: Node indices of each triangle, shape (M, 3),
                      counter-clockwise.
    :type triangles: array_like
    :param boundaryEdges: Node index pairs of the boundary edges, shape
                          (B, 2).
    :type boundaryEdges: array_like
    :param boundaryTags: Tag of each boundary edge.
    :type boundaryTags: list[str]

    :raises MeshError: If a triangle is not positively oriented, an index is
                       out of range, two nodes coincide or a boundary edge is
                       left untagged.
    """
    def __init__(self, nodes, triangles, boundaryEdges=None,
                 boundaryTags: list[str] | None = None) -> None:
        self.nodes = np.asarray(nodes, dtype=float).reshape(-1, 2)
        self.triangles = np.asarray(triangles, dtype=int).reshape(-1, 3)
        self.boundaryEdges = np.asarray(
            boundaryEdges if boundaryEdges is not None else [],
            dtype=int).reshape(-1, 2)
        self.boundaryTags = list(boundaryTags or [])
        if len(self.boundaryTags) != self.boundaryEdges.shape[0]:
            raise MeshError("Every boundary edge needs exactly one tag.")
        self._validate()
        self._gradients = self._shapeGradients()

    @property
    def nodeCount(self) -> int:
        return self.nodes.shape[0]

    @property
    def elementCount(self) -> int:
        return self.triangles.shape[0]

    @property
    def tags(self) -> set[str]:
        return set(self.boundaryTags)

    def isEmpty(self) -> bool:
        return self.nodeCount == 0 or self.elementCount == 0

    def areas(self) -> np.ndarray:
        """
        Triangle areas, shape (M,).
        """
        return 0.5 * self._signedDoubleAreas()

    def shapeGradients(self) -> np.ndarray:
        """
        Constant gradients of the three P1 shape functions of each triangle.

        :return: Array of shape (M, 3, 2).
        :rtype: np.ndarray
        """
        return self._gradients

    def fieldGradients(self, values: np.ndarray) -> np.ndarray:
        """
        Elementwise gradients of a nodal vector field,
        G[m] = sum_a values[a] (x) grad N_a.

        :param values: Nodal values, shape (N, 2).
        :type values: np.ndarray

        :return: Array of shape (M, 2, 2).
        :rtype: np.ndarray
        """
        return np.einsum('mai,maj->mij', values[self.triangles],
                         self._gradients)

    def centroidValues(self, values: np.ndarray) -> np.ndarray:
        return values[self.triangles].mean(axis=1)

    def centroids(self) -> np.ndarray:
        return self.centroidValues(self.nodes)

    def elementSizes(self) -> np.ndarray:
        """
        Longest edge of each triangle.
        """
        corners = self.nodes[self.triangles]
        edges = corners - np.roll(corners, -1, axis=1)
        return np.linalg.norm(edges, axis=2).max(axis=1)

    def nodalAverage(self, elementValues: np.ndarray) -> np.ndarray:
        """
        Area-weighted average of element values at the nodes.

        :param elementValues: Value per triangle, shape (M,).
        :type elementValues: np.ndarray

        :return: Value per node, shape (N,).
        :rtype: np.ndarray
        """
        areas = self.areas()
        weighted = np.zeros(self.nodeCount)
        weights = np.zeros(self.nodeCount)
        for corner in range(3):
            np.add.at(weighted, self.triangles[:, corner],
                      areas * elementValues)
            np.add.at(weights, self.triangles[:, corner], areas)
        return np.divide(weighted, weights, out=np.zeros_like(weighted),
                         where=weights > 0.0)

    def nodesWithTag(self, tag: str) -> np.ndarray:
        """
        Sorted indices of the nodes on the edges carrying a tag.

        :param tag: Boundary tag.
        :type tag: str

        :return: Node indices.
        :rtype: np.ndarray

        :raises MeshError: If no edge carries the tag.
        """
        selected = [edge for edge, edgeTag
                    in zip(self.boundaryEdges, self.boundaryTags)
                    if edgeTag == tag]
        if not selected:
            raise MeshError(f"Boundary tag '{tag}' not found in the mesh.")
        return np.unique(np.array(selected))

    def _signedDoubleAreas(self) -> np.ndarray:
        corners = self.nodes[self.triangles]
        first = corners[:, 1] - corners[:, 0]
        second = corners[:, 2] - corners[:, 0]
        return first[:, 0] * second[:, 1] - first[:, 1] * second[:, 0]

    def _shapeGradients(self) -> np.ndarray:
        if self.elementCount == 0:
            return np.zeros((0, 3, 2))
        corners = self.nodes[self.triangles]
        jacobian = np.stack((corners[:, 1] - corners[:, 0],
                             corners[:, 2] - corners[:, 0]), axis=2)
        # Rows of J^-1 are the gradients of N_1 and N_2
        inverse = np.linalg.inv(jacobian)
        gradients = np.empty((self.elementCount, 3, 2))
        gradients[:, 1:] = inverse
        gradients[:, 0] = -inverse.sum(axis=1)
        return gradients

    def _validate(self) -> None:
        if self.triangles.size and (self.triangles.min() < 0 or
                                    self.triangles.max() >= self.nodeCount):
            raise MeshError("Triangle node index out of range.")
        if self.boundaryEdges.size and (
                self.boundaryEdges.min() < 0 or
                self.boundaryEdges.max() >= self.nodeCount):
            raise MeshError("Boundary edge node index out of range.")
        inverted = np.flatnonzero(self._signedDoubleAreas() <= 0.0)
        if inverted.size:
            raise MeshError(f"Triangle {inverted[0]} is not positively "
                            f"oriented.")
        if self.nodeCount > 1:
            pairs = cKDTree(self.nodes).query_pairs(DUPLICATE_TOLERANCE)
            if pairs:
                i, j = min(pairs)
                raise MeshError(f"Nodes {i} and {j} coincide.")
        tagged = {tuple(sorted(edge)) for edge in self.boundaryEdges.tolist()}
        for edge in boundaryEdgesOf(self.triangles):
            if edge not in tagged:
                raise MeshError(f"Boundary edge {edge} has no tag.")


def boundaryEdgesOf(triangles: np.ndarray) -> list[tuple[int, int]]:
    """
    Edges used by exactly one triangle, as sorted index pairs in order of
    first appearance.
    """
    counts: dict[tuple[int, int], int] = {}
    for triangle in np.asarray(triangles, dtype=int).tolist():
        for corner in range(3):
            edge = tuple(sorted((triangle[corner], triangle[(corner + 1) % 3])))
            counts[edge] = counts.get(edge, 0) + 1
    return [edge for edge, count in counts.items() if count == 1]


def readMesh(path: str) -> Mesh:
    """
    Read a mesh in the ASCII format

    ``nodes N`` followed by N lines ``x y``, ``triangles M`` followed by M
    lines ``i j k`` (0-based) and ``boundary B`` followed by B lines
    ``i j tag``.

    :param path: Mesh file.
    :type path: str

    :return: The mesh.
    :rtype: Mesh

    :raises FileNotFoundError: If the file does not exist.
    :raises MeshError: If the file is malformed or the mesh invalid.
    """
    with open(path, 'r', encoding='utf-8') as file:
        lines = [line.split() for line in file if line.strip()]
    cursor = 0

    def section(name: str) -> list[list[str]]:
        nonlocal cursor
        if cursor >= len(lines) or len(lines[cursor]) != 2 \
                or lines[cursor][0] != name:
            raise MeshError(f"Expected '{name} <count>' in {path}.")
        try:
            count = int(lines[cursor][1])
        except ValueError:
            raise MeshError(f"Invalid {name} count in {path}.") from None
        body = lines[cursor + 1:cursor + 1 + count]
        if len(body) != count:
            raise MeshError(f"Truncated {name} section in {path}.")
        cursor += count + 1
        return body

    try:
        nodes = [[float(x), float(y)] for x, y in section('nodes')]
        triangles = [[int(i), int(j), int(k)]
                     for i, j, k in section('triangles')]
        boundary = section('boundary')
        edges = [[int(row[0]), int(row[1])] for row in boundary]
        tags = [row[2] for row in boundary]
    except (ValueError, IndexError) as error:
        raise MeshError(f"Malformed mesh file {path}: {error}") from None
    return Mesh(nodes, triangles, edges, tags)


def writeMesh(mesh: Mesh, path: str) -> None:
    """
    Write a mesh in the ASCII format read by ``readMesh``.
    """
    with open(path, 'w', encoding='utf-8') as file:
        file.write(f"nodes {mesh.nodeCount}\n")
        for x, y in mesh.nodes:
            file.write(f"{x:.17g} {y:.17g}\n")
        file.write(f"triangles {mesh.elementCount}\n")
        for i, j, k in mesh.triangles:
            file.write(f"{i} {j} {k}\n")
        file.write(f"boundary {len(mesh.boundaryTags)}\n")
        for (i, j), tag in zip(mesh.boundaryEdges, mesh.boundaryTags):
            file.write(f"{i} {j} {tag}\n")
