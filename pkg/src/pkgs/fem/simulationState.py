from dataclasses import dataclass, replace

import numpy as np

from .mesh import Mesh

BALL_TOLERANCE = 1e-10


@dataclass
class SimulationState:
    """
    Nodal deformation and damage fields of a phase-field simulation.

    ``frozen`` marks nodes whose damage is locked to ``frozenDirection``;
    ``lowerBounds`` holds componentwise lower bounds of d (0 or -inf).
    """
    mesh: Mesh
    y: np.ndarray
    d: np.ndarray
    frozen: np.ndarray
    frozenDirection: np.ndarray
    lowerBounds: np.ndarray
    step: int = 0

    @classmethod
    def reference(cls, mesh: Mesh) -> 'SimulationState':
        """
        Undeformed, undamaged state on a mesh.
        """
        count = mesh.nodeCount
        return cls(mesh, mesh.nodes.copy(), np.zeros((count, 2)),
                   np.zeros(count, dtype=bool), np.zeros((count, 2)),
                   np.full((count, 2), -np.inf))

    def copy(self) -> 'SimulationState':
        return replace(self, y=self.y.copy(), d=self.d.copy(),
                       frozen=self.frozen.copy(),
                       frozenDirection=self.frozenDirection.copy(),
                       lowerBounds=self.lowerBounds.copy())

    def damageMagnitude(self) -> np.ndarray:
        return np.linalg.norm(self.d, axis=1)

    def checkInvariants(self) -> None:
        """
        Check |d| <= 1 at every node and exact frozen values.

        :raises ValueError: If an invariant is violated.
        """
        magnitude = self.damageMagnitude()
        if magnitude.size and magnitude.max() > 1.0 + BALL_TOLERANCE:
            node = int(np.argmax(magnitude))
            raise ValueError(f"Damage magnitude {magnitude[node]:.12g} "
                             f"exceeds 1 at node {node}.")
        mismatch = np.flatnonzero(np.any(
            self.d[self.frozen] != self.frozenDirection[self.frozen], axis=1))
        if mismatch.size:
            node = int(np.flatnonzero(self.frozen)[mismatch[0]])
            raise ValueError(f"Frozen node {node} lost its direction.")
