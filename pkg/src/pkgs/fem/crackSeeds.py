import logging
import math
from dataclasses import dataclass
from typing import Any, Mapping

import numpy as np

from ..data.enumerators import DataKeys, SeedKind
from ..data.errors import ConfigError
from .simulationState import SimulationState

logger = logging.getLogger(__name__)

DISK_CUTOFF = 1e-3


@dataclass(frozen=True)
class CrackSeed:
    """
    Geometric pre-crack.

    A ``segment`` from ``start`` to ``end`` and an ``arc`` of ``radius``
    around ``centre`` between ``startAngle`` and ``endAngle`` freeze every
    node within ``halfWidth`` at unit damage; segments take the normal
    perpendicular to the segment, arcs the radial normal, unless
    ``direction`` is given. A ``disk`` freezes the nodes inside ``radius``
    at ``direction`` and seeds exp(-distance / epsilon) outside, cut at
    1e-3, without freezing.
    """
    kind: SeedKind
    start: tuple[float, float] = (0.0, 0.0)
    end: tuple[float, float] = (0.0, 0.0)
    centre: tuple[float, float] = (0.0, 0.0)
    radius: float = 0.0
    startAngle: float = 0.0
    endAngle: float = 2.0 * math.pi
    halfWidth: float | None = None
    direction: tuple[float, float] | None = None

    @classmethod
    def fromDict(cls, data: Mapping[str, Any]) -> 'CrackSeed':
        """
        Build a seed from a configuration mapping.

        :raises ConfigError: If the kind is unknown or a field is malformed.
        """
        try:
            kind = SeedKind(data[DataKeys.KIND])
        except (KeyError, ValueError):
            raise ConfigError(f"Unknown seed kind "
                              f"'{data.get(DataKeys.KIND)}'.") from None
        points = {DataKeys.START: 'start', DataKeys.END: 'end',
                  DataKeys.CENTRE: 'centre', DataKeys.DIRECTION: 'direction'}
        scalars = {DataKeys.RADIUS: 'radius',
                   DataKeys.START_ANGLE: 'startAngle',
                   DataKeys.END_ANGLE: 'endAngle',
                   DataKeys.HALF_WIDTH: 'halfWidth'}
        for key in data:
            if key not in points and key not in scalars \
                    and key != DataKeys.KIND:
                raise ConfigError(f"Unknown seed key '{key}'.")
        fields: dict[str, Any] = {}
        try:
            for key, value in data.items():
                if key in points:
                    x, y = value
                    fields[points[key]] = (float(x), float(y))
                elif key in scalars:
                    fields[scalars[key]] = float(value)
        except (TypeError, ValueError) as error:
            raise ConfigError(f"Invalid seed: {error}") from None
        return cls(kind, **fields)


def _unit(vector) -> np.ndarray:
    vector = np.asarray(vector, dtype=float)
    norm = float(np.linalg.norm(vector))
    if not norm > 0.0:
        raise ConfigError("Seed direction must be non-zero.")
    return vector / norm


def _segmentDistance(points: np.ndarray, start: np.ndarray,
                     end: np.ndarray) -> np.ndarray:
    axis = end - start
    length = float(axis @ axis)
    if length == 0.0:
        return np.linalg.norm(points - start, axis=1)
    along = np.clip((points - start) @ axis / length, 0.0, 1.0)
    return np.linalg.norm(points - start - along[:, None] * axis, axis=1)


def seedSupport(seed: CrackSeed, points: np.ndarray,
                epsilon: float) -> tuple[np.ndarray, np.ndarray]:
    """
    Nodes frozen by a seed and their unit directions.

    :param seed: The seed.
    :type seed: CrackSeed
    :param points: Node coordinates, shape (N, 2).
    :type points: np.ndarray
    :param epsilon: Regularization length, the default half-width.
    :type epsilon: float

    :return: Boolean mask (N,) and directions (N, 2).
    :rtype: tuple[np.ndarray, np.ndarray]
    """
    halfWidth = seed.halfWidth if seed.halfWidth is not None else epsilon
    directions = np.zeros_like(points)
    match seed.kind:
        case SeedKind.SEGMENT:
            start, end = np.array(seed.start), np.array(seed.end)
            mask = _segmentDistance(points, start, end) <= halfWidth
            if seed.direction is not None:
                normal = _unit(seed.direction)
            else:
                tangent = _unit(end - start)
                normal = np.array([-tangent[1], tangent[0]])
            directions[:] = normal
        case SeedKind.ARC:
            offset = points - np.array(seed.centre)
            distance = np.linalg.norm(offset, axis=1)
            angle = np.mod(np.arctan2(offset[:, 1], offset[:, 0])
                           - seed.startAngle, 2.0 * math.pi)
            span = seed.endAngle - seed.startAngle
            mask = (np.abs(distance - seed.radius) <= halfWidth) \
                & (angle <= span + 1e-12) & (distance > 0.0)
            if seed.direction is not None:
                directions[:] = _unit(seed.direction)
            else:
                safe = np.where(distance > 0.0, distance, 1.0)
                directions = offset / safe[:, None]
        case _:
            distance = np.linalg.norm(points - np.array(seed.centre), axis=1)
            mask = distance <= seed.radius
            directions[:] = _unit(seed.direction or (0.0, 1.0))
    return mask, directions


def applySeeds(state: SimulationState, seeds: list[CrackSeed],
               epsilon: float) -> SimulationState:
    """
    Initialize and freeze the damage of pre-cracks.

    :param state: State to seed; it is not modified.
    :type state: SimulationState
    :param seeds: Seeds in application order.
    :type seeds: list[CrackSeed]
    :param epsilon: Regularization length.
    :type epsilon: float

    :return: Seeded copy of the state.
    :rtype: SimulationState
    """
    seeded = state.copy()
    points = state.mesh.nodes
    for seed in seeds:
        mask, directions = seedSupport(seed, points, epsilon)
        seeded.d[mask] = directions[mask]
        seeded.frozen |= mask
        seeded.frozenDirection[mask] = directions[mask]
        if seed.kind is SeedKind.DISK:
            distance = np.linalg.norm(points - np.array(seed.centre), axis=1)
            halo = np.exp(-(distance - seed.radius) / epsilon)
            ring = ~seeded.frozen & (halo >= DISK_CUTOFF)
            magnitude = np.maximum(np.linalg.norm(seeded.d, axis=1), 0.0)
            update = ring & (halo > magnitude)
            seeded.d[update] = halo[update, None] * directions[update]
        logger.debug("Seed %s froze %d nodes", seed.kind.value,
                     int(mask.sum()))
    return seeded
