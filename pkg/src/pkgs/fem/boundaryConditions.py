from dataclasses import dataclass, replace
from typing import Any, Mapping

import numpy as np

from ..data.enumerators import BoundaryKind, DataKeys
from ..data.errors import ConfigError, MeshError
from .mesh import Mesh


@dataclass(frozen=True, eq=False)
class BoundaryCondition:
    """
    Condition on the nodes of a tagged boundary.

    ``DIRICHLET_AFFINE`` imposes y = F0 x, ``DIRICHLET_ZERO`` imposes a zero
    displacement y = x, both restricted to the components selected by
    ``mask``. ``TRACTION_FREE`` imposes nothing.
    """
    tag: str
    kind: BoundaryKind
    F0: np.ndarray | None = None
    mask: tuple[bool, bool] = (True, True)

    @classmethod
    def affine(cls, tag: str, F0, mask: tuple[bool, bool] = (True, True)
               ) -> 'BoundaryCondition':
        F0 = np.asarray(F0, dtype=float)
        if F0.shape != (2, 2):
            raise ConfigError(f"{DataKeys.F0} must be 2x2, got shape "
                              f"{F0.shape}.")
        return cls(tag, BoundaryKind.DIRICHLET_AFFINE, F0, tuple(mask))

    @classmethod
    def zero(cls, tag: str, mask: tuple[bool, bool] = (True, True)
             ) -> 'BoundaryCondition':
        return cls(tag, BoundaryKind.DIRICHLET_ZERO, None, tuple(mask))

    @classmethod
    def tractionFree(cls, tag: str) -> 'BoundaryCondition':
        return cls(tag, BoundaryKind.TRACTION_FREE, None, (False, False))

    @classmethod
    def fromDict(cls, data: Mapping[str, Any]) -> 'BoundaryCondition':
        """
        Build a condition from a mapping with ``tag``, ``kind`` and, for
        affine conditions, ``F0``; ``mask`` is optional.

        :raises ConfigError: If the kind is unknown or a field is missing.
        """
        try:
            kind = BoundaryKind(data[DataKeys.KIND])
            tag = str(data[DataKeys.TAG])
        except KeyError as error:
            raise ConfigError(f"Boundary condition misses {error}.") from None
        except ValueError:
            raise ConfigError(f"Unknown boundary kind "
                              f"'{data[DataKeys.KIND]}'.") from None
        mask = tuple(bool(m) for m in data.get(DataKeys.MASK, (True, True)))
        match kind:
            case BoundaryKind.DIRICHLET_AFFINE:
                if DataKeys.F0 not in data:
                    raise ConfigError(f"Affine condition on '{tag}' misses "
                                      f"{DataKeys.F0}.")
                return cls.affine(tag, data[DataKeys.F0], mask)
            case BoundaryKind.DIRICHLET_ZERO:
                return cls.zero(tag, mask)
            case _:
                return cls.tractionFree(tag)

    def withF0(self, F0) -> 'BoundaryCondition':
        """
        Copy with another affine map, used to step a load program.
        """
        return replace(self, F0=np.asarray(F0, dtype=float))


@dataclass(frozen=True, eq=False)
class DirichletData:
    """
    Fixed nodal components and their values.
    """
    fixed: np.ndarray
    values: np.ndarray

    def apply(self, y: np.ndarray) -> np.ndarray:
        """
        Copy of y with the fixed components set.
        """
        constrained = y.copy()
        constrained[self.fixed] = self.values[self.fixed]
        return constrained


def dirichletData(mesh: Mesh, conditions: list[BoundaryCondition]
                  ) -> DirichletData:
    """
    Collect the Dirichlet constraints of a list of conditions. Later
    conditions win on shared nodes.

    :param mesh: The mesh.
    :type mesh: Mesh
    :param conditions: Boundary conditions.
    :type conditions: list[BoundaryCondition]

    :return: Fixed mask (N, 2) and values (N, 2).
    :rtype: DirichletData

    :raises ConfigError: If a tag does not exist in the mesh.
    """
    fixed = np.zeros((mesh.nodeCount, 2), dtype=bool)
    values = np.zeros((mesh.nodeCount, 2))
    for condition in conditions:
        try:
            nodes = mesh.nodesWithTag(condition.tag)
        except MeshError as error:
            raise ConfigError(str(error)) from None
        if condition.kind is BoundaryKind.TRACTION_FREE:
            continue
        positions = mesh.nodes[nodes]
        if condition.kind is BoundaryKind.DIRICHLET_AFFINE:
            target = positions @ np.asarray(condition.F0).T
        else:
            target = positions
        for component in range(2):
            if condition.mask[component]:
                fixed[nodes, component] = True
                values[nodes, component] = target[:, component]
    return DirichletData(fixed, values)
