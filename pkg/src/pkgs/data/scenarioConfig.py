import logging
import math
import os
from dataclasses import dataclass
from typing import Any, Callable, Mapping

import numpy as np
import yaml as yaml

from ..fem.boundaryConditions import BoundaryCondition
from ..fem.crackSeeds import CrackSeed
from ..fem.mesh import Mesh, readMesh
from ..fem.meshGenerators import rectangleMesh, squareWithHoleMesh
from ..fem.phaseFieldParams import PhaseFieldParams, SolverSettings
from ..materials.materialModel import MaterialModel
from ..mechanics.crackEnergy import GenericRelaxationSettings
from .enumerators import DataKeys, FrozenCrackMode, MeshGenerator
from .enumerators import ScenarioName
from .errors import ConfigError, MeshError
from .materialData import MaterialData, stressUnitScale

logger = logging.getLogger(__name__)

MATERIALS_SRC = './data/materials.yml'
DEFAULT_MATERIAL = 'unit-neo-hookean'
DEFAULT_SPECIMEN_LENGTH = 1e-3
MESH_SCENARIOS = (ScenarioName.FROZEN_CRACK, ScenarioName.CYCLIC_SHEAR,
                  ScenarioName.CAVITY)
PROGRAM_SCENARIOS = (ScenarioName.CYCLIC_SHEAR, ScenarioName.CAVITY)

TOP_LEVEL_KEYS = {
    DataKeys.SCENARIO, DataKeys.MATERIAL, DataKeys.PARAMS, DataKeys.SOLVER,
    DataKeys.SPECIMEN_LENGTH, DataKeys.MESH, DataKeys.BOUNDARY_CONDITIONS,
    DataKeys.LOAD_PROGRAM, DataKeys.SEED_CRACKS, DataKeys.OUTPUT_DIR,
    DataKeys.SEED, DataKeys.CHECKPOINT, DataKeys.MODE, DataKeys.AMPLITUDE,
    DataKeys.DEFORMATION, DataKeys.SAMPLES, DataKeys.SPLITTING,
    DataKeys.BASELINE, DataKeys.SHRINK_AFTER, DataKeys.MIN_INCREMENT,
}
MATERIAL_KEYS = {DataKeys.PRESET, DataKeys.FAMILY, DataKeys.PARAMETERS,
                 DataKeys.GC, DataKeys.UNITS, DataKeys.NAME}
PARAMS_FIELDS = {DataKeys.EPSILON: ('epsilon', float),
                 DataKeys.ETA: ('eta', float),
                 DataKeys.D_C: ('dC', float),
                 DataKeys.STAGGER_TOL: ('staggerTol', float),
                 DataKeys.MAX_STAGGER: ('maxStagger', int)}
SOLVER_FIELDS = {DataKeys.MAX_ITERATIONS: ('maxIterations', int),
                 DataKeys.GRADIENT_TOLERANCE: ('gradientTolerance', float),
                 DataKeys.HISTORY: ('history', int),
                 DataKeys.MAX_BACKTRACKS: ('maxBacktracks', int),
                 DataKeys.ARMIJO: ('armijo', float),
                 DataKeys.INITIAL_STEP: ('initialStep', float)}
GENERATOR_FIELDS = {
    MeshGenerator.RECTANGLE: {DataKeys.WIDTH: ('width', float),
                              DataKeys.HEIGHT: ('height', float),
                              DataKeys.NX: ('nx', int),
                              DataKeys.NY: ('ny', int),
                              DataKeys.ORIGIN: ('origin', tuple)},
    MeshGenerator.SQUARE_WITH_HOLE: {DataKeys.SIZE: ('size', float),
                                     DataKeys.RADIUS: ('radius', float),
                                     DataKeys.N_THETA: ('nTheta', int),
                                     DataKeys.N_RADIAL: ('nRadial', int),
                                     DataKeys.GRADING: ('grading', float)},
}
SPLITTING_FIELDS = {DataKeys.LAMBDA: 'lam', DataKeys.MU: 'mu',
                    DataKeys.SIGMA0: 'sigma0', DataKeys.TAU: 'tau'}


@dataclass(frozen=True)
class LoadStep:
    """
    One step of a load program.

    ``load`` is the scalar amplitude the scenario maps to its affine
    boundary data; ``lowerBound`` holds the componentwise lower bounds of d
    during the step (0 or -inf).
    """
    step: int
    load: float
    phase: str = ''
    lowerBound: tuple[float, float] = (-math.inf, -math.inf)


def _convert(key: str, value: Any, kind: Callable[[Any], Any]) -> Any:
    try:
        if kind is tuple:
            first, second = value
            return (float(first), float(second))
        if kind is int and float(value) != int(value):
            raise ValueError
        return kind(value)
    except (TypeError, ValueError):
        raise ConfigError(f"{key} has an invalid value {value!r}.") from None


def _fields(block: Any, key: str,
            fields: Mapping[str, tuple[str, Callable[[Any], Any]]]
            ) -> dict[str, Any]:
    if block is None:
        return {}
    if not isinstance(block, Mapping):
        raise ConfigError(f"{key} must be a mapping.")
    converted = {}
    for name, value in block.items():
        if name not in fields:
            raise ConfigError(f"Unknown key '{name}' in {key}.")
        attribute, kind = fields[name]
        converted[attribute] = _convert(f"{key}.{name}", value, kind)
    return converted


def _lowerBound(value: Any) -> tuple[float, float]:
    if value is None:
        return (-math.inf, -math.inf)
    try:
        first, second = value
    except (TypeError, ValueError):
        raise ConfigError(f"{DataKeys.LOWER_BOUND} must list two "
                          f"components.") from None
    bounds = []
    for component in (first, second):
        if component is None:
            bounds.append(-math.inf)
        elif component == 0:
            bounds.append(0.0)
        else:
            raise ConfigError(f"{DataKeys.LOWER_BOUND} components must be 0 "
                              f"or null, got {component!r}.")
    return (bounds[0], bounds[1])


class ScenarioConfig:
    """
    Validated scenario configuration.

    The file is YAML (JSON is accepted as a subset of YAML). Material
    parameters given with a stress unit are made dimensionless on load:
    stresses are divided by the shear modulus and G_c by the shear modulus
    times ``specimen_length`` (in metres).
    """
    def __init__(self, dataSrc: str, outputDir: str | None = None,
                 meshPath: str | None = None, seed: int | None = None,
                 materialsSrc: str = MATERIALS_SRC) -> None:
        """
        Load and validate a scenario file.

        :param dataSrc: Path to the configuration file.
        :type dataSrc: str
        :param outputDir: Overrides ``output_dir``.
        :type outputDir: str | None
        :param meshPath: Overrides the ``mesh`` block with a mesh file.
        :type meshPath: str | None
        :param seed: Overrides ``seed``.
        :type seed: int | None
        :param materialsSrc: Material preset library.
        :type materialsSrc: str

        :raises FileNotFoundError: If the file does not exist.
        :raises yaml.YAMLError: If the file cannot be parsed.
        :raises ConfigError: If a value is missing or invalid.
        """
        with open(dataSrc, 'r', encoding='utf-8') as file:
            data = yaml.safe_load(file)
        if not isinstance(data, dict):
            raise ConfigError("Scenario configuration must be a mapping.")
        for key in data:
            if key not in TOP_LEVEL_KEYS:
                raise ConfigError(f"Unknown configuration key '{key}'.")
        self.baseDir = os.path.dirname(os.path.abspath(dataSrc))
        try:
            self.scenario = ScenarioName(data.get(DataKeys.SCENARIO))
        except ValueError:
            raise ConfigError(f"Unknown {DataKeys.SCENARIO} "
                              f"'{data.get(DataKeys.SCENARIO)}'.") from None

        self.specimenLength = _convert(
            DataKeys.SPECIMEN_LENGTH,
            data.get(DataKeys.SPECIMEN_LENGTH, DEFAULT_SPECIMEN_LENGTH), float)
        if not self.specimenLength > 0.0:
            raise ConfigError(f"{DataKeys.SPECIMEN_LENGTH} must be "
                              f"positive.")
        self.material = self._material(data.get(DataKeys.MATERIAL),
                                       materialsSrc)
        self.params = PhaseFieldParams(**_fields(data.get(DataKeys.PARAMS),
                                                 DataKeys.PARAMS,
                                                 PARAMS_FIELDS))
        self.solver = SolverSettings(**_fields(data.get(DataKeys.SOLVER),
                                               DataKeys.SOLVER,
                                               SOLVER_FIELDS))
        self.mesh = self._mesh(data.get(DataKeys.MESH), meshPath)
        self.boundaryConditions = self._boundaryConditions(
            data.get(DataKeys.BOUNDARY_CONDITIONS) or [])
        self.loadProgram = self._loadProgram(
            data.get(DataKeys.LOAD_PROGRAM) or [])
        try:
            self.seedCracks = [CrackSeed.fromDict(seed) for seed
                               in data.get(DataKeys.SEED_CRACKS) or []]
        except (AttributeError, TypeError):
            raise ConfigError(f"{DataKeys.SEED_CRACKS} must be a list of "
                              f"mappings.") from None
        self.outputDir = outputDir or str(data.get(
            DataKeys.OUTPUT_DIR, os.path.join('output', self.scenario.value)))
        self.seed = seed if seed is not None \
            else _convert(DataKeys.SEED, data.get(DataKeys.SEED, 0), int)
        self.checkpoint = bool(data.get(DataKeys.CHECKPOINT, False))
        try:
            self.mode = FrozenCrackMode(str(data.get(DataKeys.MODE, 'a')))
        except ValueError:
            raise ConfigError(f"Unknown frozen-crack {DataKeys.MODE} "
                              f"'{data.get(DataKeys.MODE)}'.") from None
        self.amplitude = _convert(DataKeys.AMPLITUDE,
                                  data.get(DataKeys.AMPLITUDE, 0.1), float)
        self.deformation = self._deformation(data.get(DataKeys.DEFORMATION))
        self.samples = _convert(DataKeys.SAMPLES,
                                data.get(DataKeys.SAMPLES, 721), int)
        if self.samples < 8:
            raise ConfigError(f"{DataKeys.SAMPLES} must be at least 8.")
        self.splitting = {SPLITTING_FIELDS[key]: value for key, value
                          in _fields(data.get(DataKeys.SPLITTING),
                                     DataKeys.SPLITTING,
                                     {key: (key, float) for key
                                      in SPLITTING_FIELDS}).items()}
        self.baseline = bool(data.get(DataKeys.BASELINE, True))
        self.shrinkAfter = _convert(DataKeys.SHRINK_AFTER,
                                    data.get(DataKeys.SHRINK_AFTER, 25), int)
        self.minIncrement = _convert(DataKeys.MIN_INCREMENT,
                                     data.get(DataKeys.MIN_INCREMENT, 1e-4),
                                     float)
        self._checkScenario()

    def relaxationSettings(self) -> GenericRelaxationSettings:
        """
        Settings of the generic relaxation, seeded with the configured
        random seed.
        """
        return GenericRelaxationSettings(seed=self.seed)

    def _material(self, block: Any, materialsSrc: str) -> MaterialModel:
        if block is None:
            block = {DataKeys.PRESET: DEFAULT_MATERIAL}
        elif isinstance(block, str):
            block = {DataKeys.PRESET: block}
        elif not isinstance(block, Mapping):
            raise ConfigError(f"{DataKeys.MATERIAL} must be a preset name or "
                              f"a mapping.")
        for key in block:
            if key not in MATERIAL_KEYS:
                raise ConfigError(f"Unknown key '{key}' in "
                                  f"{DataKeys.MATERIAL}.")
        merged: dict[str, Any] = {}
        if DataKeys.PRESET in block:
            try:
                merged = MaterialData(materialsSrc).getPreset(
                    block[DataKeys.PRESET])
            except ValueError as error:
                raise ConfigError(f"{DataKeys.MATERIAL}: {error}") from None
        parameters = dict(merged.get(DataKeys.PARAMETERS) or {})
        parameters.update(block.get(DataKeys.PARAMETERS) or {})
        merged.update({key: value for key, value in block.items()
                       if key != DataKeys.PRESET})
        merged[DataKeys.PARAMETERS] = parameters
        if DataKeys.FAMILY not in merged:
            raise ConfigError(f"{DataKeys.MATERIAL} misses "
                              f"{DataKeys.FAMILY}.")
        try:
            model = MaterialModel.fromDict(merged)
            unitScale = stressUnitScale(merged)
        except (TypeError, ValueError) as error:
            raise ConfigError(f"{DataKeys.MATERIAL}: {error}") from None
        if (merged.get(DataKeys.UNITS) or {}).get(DataKeys.STRESS_UNIT):
            mu = model.lameParameters()[0]
            model = model.scaled(mu, unitScale * self.specimenLength)
            logger.debug("Material scaled by mu = %.6g Pa", mu * unitScale)
        return model

    def _mesh(self, block: Any, meshPath: str | None) -> Mesh | None:
        if meshPath is not None:
            return self._readMesh(meshPath)
        if block is None:
            return None
        if not isinstance(block, Mapping):
            raise ConfigError(f"{DataKeys.MESH} must be a mapping.")
        if DataKeys.MESH_PATH in block:
            return self._readMesh(os.path.join(self.baseDir,
                                               str(block[DataKeys.MESH_PATH])))
        try:
            generator = MeshGenerator(block.get(DataKeys.GENERATOR))
        except ValueError:
            raise ConfigError(f"Unknown mesh {DataKeys.GENERATOR} "
                              f"'{block.get(DataKeys.GENERATOR)}'.") from None
        options = _fields({key: value for key, value in block.items()
                           if key != DataKeys.GENERATOR}, DataKeys.MESH,
                          GENERATOR_FIELDS[generator])
        build = rectangleMesh if generator is MeshGenerator.RECTANGLE \
            else squareWithHoleMesh
        try:
            return build(**options)
        except MeshError as error:
            raise ConfigError(f"{DataKeys.MESH}: {error}") from None

    def _readMesh(self, path: str) -> Mesh:
        if not os.path.isfile(path):
            raise ConfigError(f"{DataKeys.MESH}.{DataKeys.MESH_PATH}: file "
                              f"{path} does not exist.")
        try:
            return readMesh(path)
        except MeshError as error:
            raise ConfigError(f"{DataKeys.MESH}: {error}") from None

    def _boundaryConditions(self, block: Any) -> list[BoundaryCondition]:
        if not isinstance(block, list):
            raise ConfigError(f"{DataKeys.BOUNDARY_CONDITIONS} must be a "
                              f"list.")
        try:
            conditions = [BoundaryCondition.fromDict(entry)
                          for entry in block]
        except TypeError:
            raise ConfigError(f"{DataKeys.BOUNDARY_CONDITIONS} must be a "
                              f"list of mappings.") from None
        if self.mesh is not None:
            for condition in conditions:
                if condition.tag not in self.mesh.tags:
                    raise ConfigError(
                        f"{DataKeys.BOUNDARY_CONDITIONS}: tag "
                        f"'{condition.tag}' not found in the mesh.")
        return conditions

    def _loadProgram(self, block: Any) -> list[LoadStep]:
        if not isinstance(block, list):
            raise ConfigError(f"{DataKeys.LOAD_PROGRAM} must be a list.")
        program = []
        for entry in block:
            if not isinstance(entry, Mapping) or DataKeys.STEP not in entry \
                    or DataKeys.LOAD not in entry:
                raise ConfigError(f"Each {DataKeys.LOAD_PROGRAM} entry needs "
                                  f"{DataKeys.STEP} and {DataKeys.LOAD}.")
            step = LoadStep(
                _convert(DataKeys.STEP, entry[DataKeys.STEP], int),
                _convert(DataKeys.LOAD, entry[DataKeys.LOAD], float),
                str(entry.get(DataKeys.PHASE, '')),
                _lowerBound(entry.get(DataKeys.LOWER_BOUND)))
            if program and step.step <= program[-1].step:
                raise ConfigError(f"{DataKeys.LOAD_PROGRAM} steps must be "
                                  f"strictly increasing, got {step.step} "
                                  f"after {program[-1].step}.")
            program.append(step)
        return program

    def _deformation(self, value: Any) -> np.ndarray:
        if value is None:
            return np.array([[1.0, 0.0], [0.0, 1.5]])
        try:
            F = np.array(value, dtype=float)
        except (TypeError, ValueError):
            F = np.zeros(0)
        if F.shape != (2, 2):
            raise ConfigError(f"{DataKeys.DEFORMATION} must be a 2x2 "
                              f"matrix.")
        return F

    def _checkScenario(self) -> None:
        name = self.scenario.value
        if self.splitting.get('mu', 1.0) <= 0.0 \
                or self.splitting.get('lam', 0.0) < 0.0:
            raise ConfigError(f"{DataKeys.SPLITTING} needs {DataKeys.MU} > 0 "
                              f"and {DataKeys.LAMBDA} >= 0.")
        if self.scenario in MESH_SCENARIOS and self.mesh is None:
            raise ConfigError(f"{DataKeys.MESH} is required for scenario "
                              f"{name}.")
        if self.scenario in PROGRAM_SCENARIOS and not self.loadProgram:
            raise ConfigError(f"{DataKeys.LOAD_PROGRAM} must not be empty "
                              f"for scenario {name}.")
        if self.scenario is not ScenarioName.SPLITTING_DEMO \
                and self.material.dim != 2:
            raise ConfigError(f"{DataKeys.MATERIAL} must be two-dimensional "
                              f"for scenario {name}.")
