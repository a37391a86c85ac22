from dataclasses import dataclass

import numpy as np

from ..data.errors import DimensionMismatchError, EmptyMeshError
from ..fem.mesh import Mesh

VTK_TRIANGLE = 5


@dataclass(frozen=True, eq=False)
class VtkFields:
    """
    Nodal fields written alongside the mesh. ``points`` replaces the node
    coordinates, e.g. by the deformed positions.
    """
    mesh: Mesh
    displacement: np.ndarray
    damage: np.ndarray
    energyDensity: np.ndarray
    points: np.ndarray | None = None


def writeVtk(fields: VtkFields, path: str, title: str = "fracture-qr") -> None:
    """
    Write a legacy ASCII VTK 2.0 unstructured grid with the point data
    arrays displacement, damage_magnitude, damage and energy_density.

    :param fields: Mesh and nodal fields.
    :type fields: VtkFields
    :param path: Target file.
    :type path: str
    :param title: Header title line.
    :type title: str

    :raises EmptyMeshError: If the mesh has no node or no triangle.
    :raises DimensionMismatchError: If a field does not match the mesh.
    :raises OSError: If the file cannot be written.
    """
    mesh = fields.mesh
    if mesh.isEmpty():
        raise EmptyMeshError("Cannot write an empty mesh.")
    count = mesh.nodeCount
    displacement = np.asarray(fields.displacement, dtype=float)
    damage = np.asarray(fields.damage, dtype=float)
    density = np.asarray(fields.energyDensity, dtype=float).reshape(-1)
    if displacement.shape != (count, 2) or damage.shape != (count, 2) \
            or density.shape != (count,):
        raise DimensionMismatchError("VTK fields must be sized to the mesh.")
    magnitude = np.linalg.norm(damage, axis=1)
    lines = ["# vtk DataFile Version 2.0", title, "ASCII",
             "DATASET UNSTRUCTURED_GRID", f"POINTS {count} double"]
    points = mesh.nodes if fields.points is None \
        else np.asarray(fields.points, dtype=float)
    if points.shape != (count, 2):
        raise DimensionMismatchError("VTK points must be sized to the mesh.")
    lines += [f"{x:.12e} {y:.12e} {0.0:.12e}" for x, y in points]
    cells = mesh.elementCount
    lines.append(f"CELLS {cells} {4 * cells}")
    lines += [f"3 {i} {j} {k}" for i, j, k in mesh.triangles]
    lines.append(f"CELL_TYPES {cells}")
    lines += [str(VTK_TRIANGLE)] * cells
    lines.append(f"POINT_DATA {count}")
    lines.append("VECTORS displacement double")
    lines += [f"{u:.12e} {v:.12e} {0.0:.12e}" for u, v in displacement]
    lines += ["SCALARS damage_magnitude double 1", "LOOKUP_TABLE default"]
    lines += [f"{value:.12e}" for value in magnitude]
    lines.append("VECTORS damage double")
    lines += [f"{u:.12e} {v:.12e} {0.0:.12e}" for u, v in damage]
    lines += ["SCALARS energy_density double 1", "LOOKUP_TABLE default"]
    lines += [f"{value:.12e}" for value in density]
    with open(path, 'w', encoding='utf-8', newline='\n') as file:
        file.write("\n".join(lines) + "\n")
