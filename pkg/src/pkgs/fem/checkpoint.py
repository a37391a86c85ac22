import io

import numpy as np

from .mesh import Mesh
from .simulationState import SimulationState

MAGIC = b"FQRCKPT"
VERSION = 1


def saveCheckpoint(state: SimulationState, path: str) -> None:
    """
    Write a state to ``path``: the magic bytes ``FQRCKPT``, one version byte
    and an uncompressed npz archive with the mesh and all nodal fields.

    :param state: State to store.
    :type state: SimulationState
    :param path: Target file.
    :type path: str
    """
    payload = io.BytesIO()
    mesh = state.mesh
    np.savez(payload, nodes=mesh.nodes, triangles=mesh.triangles,
             boundaryEdges=mesh.boundaryEdges,
             boundaryTags=np.array(mesh.boundaryTags, dtype=str),
             y=state.y, d=state.d, frozen=state.frozen,
             frozenDirection=state.frozenDirection,
             lowerBounds=state.lowerBounds, step=np.array(state.step))
    with open(path, 'wb') as file:
        file.write(MAGIC + bytes([VERSION]) + payload.getvalue())


def loadCheckpoint(path: str) -> SimulationState:
    """
    Read a state written by ``saveCheckpoint``.

    :param path: Checkpoint file.
    :type path: str

    :return: The stored state.
    :rtype: SimulationState

    :raises ValueError: If the file is not a checkpoint or has an unknown
                        version.
    """
    with open(path, 'rb') as file:
        content = file.read()
    if not content.startswith(MAGIC) or len(content) <= len(MAGIC):
        raise ValueError(f"{path} is not a checkpoint file.")
    version = content[len(MAGIC)]
    if version != VERSION:
        raise ValueError(f"Unsupported checkpoint version {version}.")
    with np.load(io.BytesIO(content[len(MAGIC) + 1:])) as archive:
        mesh = Mesh(archive['nodes'], archive['triangles'],
                    archive['boundaryEdges'],
                    [str(tag) for tag in archive['boundaryTags']])
        return SimulationState(mesh, archive['y'], archive['d'],
                               archive['frozen'], archive['frozenDirection'],
                               archive['lowerBounds'], int(archive['step']))
