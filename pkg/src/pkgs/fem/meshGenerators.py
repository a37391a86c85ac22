import math

import numpy as np

from ..data.errors import MeshError
from .mesh import Mesh


def rectangleMesh(width: float = 1.0, height: float = 1.0, nx: int = 16,
                  ny: int = 16, origin: tuple[float, float] = (0.0, 0.0)
                  ) -> Mesh:
    """
    Structured triangulation of a rectangle with alternating diagonals.

    Boundary edges are tagged ``bottom``, ``right``, ``top`` and ``left``.

    :param width: Extent along x, > 0.
    :type width: float
    :param height: Extent along y, > 0.
    :type height: float
    :param nx: Cells along x, >= 1.
    :type nx: int
    :param ny: Cells along y, >= 1.
    :type ny: int
    :param origin: Lower-left corner.
    :type origin: tuple[float, float]

    :return: The mesh.
    :rtype: Mesh

    :raises MeshError: If a size or a cell count is not positive.
    """
    if not (width > 0.0 and height > 0.0 and nx >= 1 and ny >= 1):
        raise MeshError("Rectangle sizes and cell counts must be positive.")
    xs = origin[0] + np.linspace(0.0, width, nx + 1)
    ys = origin[1] + np.linspace(0.0, height, ny + 1)
    nodes = np.array([[x, y] for y in ys for x in xs])

    def index(i: int, j: int) -> int:
        return j * (nx + 1) + i

    triangles = []
    for j in range(ny):
        for i in range(nx):
            a, b = index(i, j), index(i + 1, j)
            c, d = index(i + 1, j + 1), index(i, j + 1)
            if (i + j) % 2 == 0:
                triangles += [[a, b, c], [a, c, d]]
            else:
                triangles += [[a, b, d], [b, c, d]]
    edges, tags = [], []
    for i in range(nx):
        edges += [[index(i, 0), index(i + 1, 0)],
                  [index(i + 1, ny), index(i, ny)]]
        tags += ['bottom', 'top']
    for j in range(ny):
        edges += [[index(nx, j), index(nx, j + 1)],
                  [index(0, j + 1), index(0, j)]]
        tags += ['right', 'left']
    return Mesh(nodes, triangles, edges, tags)


def squareWithHoleMesh(size: float = 1.0, radius: float = 0.15,
                       nTheta: int = 64, nRadial: int = 16,
                       grading: float = 1.1) -> Mesh:
    """
    Square specimen with a centred circular cavity, meshed as a structured
    ring from the cavity to the outer square.

    Boundary edges are tagged ``outer`` and ``cavity``. Radial layers grow
    geometrically by ``grading`` away from the cavity.

    :param size: Side of the square, whose lower-left corner is the origin.
    :type size: float
    :param radius: Cavity radius, 0 < radius < size / 2.
    :type radius: float
    :param nTheta: Angular divisions, a multiple of 8 so that the square
                   corners are nodes.
    :type nTheta: int
    :param nRadial: Radial layers, >= 1.
    :type nRadial: int
    :param grading: Ratio of successive layer thicknesses, > 0.
    :type grading: float

    :return: The mesh.
    :rtype: Mesh

    :raises MeshError: If the arguments are inconsistent.
    """
    if not 0.0 < radius < 0.5 * size:
        raise MeshError("Cavity radius must lie in (0, size / 2).")
    if nTheta < 8 or nTheta % 8 != 0:
        raise MeshError("nTheta must be a positive multiple of 8.")
    if nRadial < 1 or not grading > 0.0:
        raise MeshError("nRadial must be >= 1 and grading positive.")
    centre = np.array([0.5 * size, 0.5 * size])
    thicknesses = grading ** np.arange(nRadial)
    fractions = np.concatenate(([0.0], np.cumsum(thicknesses)))
    fractions /= fractions[-1]
    nodes = []
    for j in range(nRadial + 1):
        for k in range(nTheta):
            theta = 2.0 * math.pi * k / nTheta
            ray = np.array([math.cos(theta), math.sin(theta)])
            inner = radius * ray
            outer = 0.5 * size / np.max(np.abs(ray)) * ray
            nodes.append(centre + inner + fractions[j] * (outer - inner))

    def index(j: int, k: int) -> int:
        return j * nTheta + k % nTheta

    triangles = []
    for j in range(nRadial):
        for k in range(nTheta):
            a, b = index(j, k), index(j, k + 1)
            c, d = index(j + 1, k + 1), index(j + 1, k)
            if (j + k) % 2 == 0:
                triangles += [[a, b, c], [a, c, d]]
            else:
                triangles += [[a, b, d], [b, c, d]]
    nodes = np.array(nodes)
    triangles = np.array(triangles)
    corners = nodes[triangles]
    first = corners[:, 1] - corners[:, 0]
    second = corners[:, 2] - corners[:, 0]
    clockwise = first[:, 0] * second[:, 1] - first[:, 1] * second[:, 0] < 0.0
    triangles[clockwise] = triangles[clockwise][:, [0, 2, 1]]
    edges = [[index(0, k + 1), index(0, k)] for k in range(nTheta)] \
        + [[index(nRadial, k), index(nRadial, k + 1)] for k in range(nTheta)]
    tags = ['cavity'] * nTheta + ['outer'] * nTheta
    return Mesh(nodes, triangles, edges, tags)
