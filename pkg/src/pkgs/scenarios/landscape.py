import logging
import os

from ..data.scenarioConfig import ScenarioConfig
from ..mechanics.crackEnergy import CrackEnergy, findLocalMinima
from ..output.csvWriter import writeCsv
from .common import prepareOutput

logger = logging.getLogger(__name__)


def runLandscape(config: ScenarioConfig) -> list[str]:
    """
    Sample Wd(F, n(theta)) / mu over [0, pi] for the configured deformation
    and list its local minima.

    Writes ``landscape.csv`` (theta, wd_over_mu) and ``minima.csv``
    (theta, wd_over_mu).

    :param config: Scenario configuration.
    :type config: ScenarioConfig

    :return: Files written.
    :rtype: list[str]
    """
    outputDir = prepareOutput(config.outputDir)
    mu = config.material.lameParameters()[0]
    crackEnergy = CrackEnergy(config.material, config.relaxationSettings())
    landscape = [(theta, value / mu) for theta, value
                 in crackEnergy.getLandscape(config.deformation,
                                             config.samples)]
    minima = findLocalMinima(landscape)
    logger.info("Landscape has %d local minima", len(minima))
    curve = os.path.join(outputDir, 'landscape.csv')
    writeCsv(curve, ['theta', 'wd_over_mu'], landscape)
    extrema = os.path.join(outputDir, 'minima.csv')
    writeCsv(extrema, ['theta', 'wd_over_mu'], minima)
    logger.info("Wrote %s and %s", curve, extrema)
    return [curve, extrema]
