from typing import Callable

from ..data.enumerators import ScenarioName
from ..data.scenarioConfig import LoadStep, ScenarioConfig              # noqa: F401
from .cavity import runCavity                                          # noqa: F401
from .cyclicShear import runCyclicShear                                # noqa: F401
from .frozenCrack import modeDeformation, runFrozenCrack               # noqa: F401
from .landscape import runLandscape                                    # noqa: F401
from .splittingDemo import runSplittingDemo                            # noqa: F401

RUNNERS: dict[ScenarioName, Callable[[ScenarioConfig], list[str]]] = {
    ScenarioName.FROZEN_CRACK: runFrozenCrack,
    ScenarioName.CYCLIC_SHEAR: runCyclicShear,
    ScenarioName.CAVITY: runCavity,
    ScenarioName.LANDSCAPE: runLandscape,
    ScenarioName.SPLITTING_DEMO: runSplittingDemo,
}

__all__ = ['LoadStep', 'RUNNERS', 'ScenarioConfig', 'modeDeformation',
           'runCavity', 'runCyclicShear', 'runFrozenCrack', 'runLandscape',
           'runSplittingDemo']
