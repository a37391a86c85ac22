import logging
import os

from ..data.scenarioConfig import ScenarioConfig
from ..mechanics.splitting import splittingReport
from ..output.csvWriter import writeCsv
from .common import prepareOutput

logger = logging.getLogger(__name__)

HEADER = ['method', 'case', 'split_normal', 'split_shear', 'qr_normal',
          'qr_shear', 'intact_normal', 'intact_shear', 'expectation']


def runSplittingDemo(config: ScenarioConfig) -> list[str]:
    """
    Write the splitting comparison report as ``splitting.csv``.

    :raises NonPositiveError: If mu <= 0 or lambda < 0.
    """
    outputDir = prepareOutput(config.outputDir)
    rows = [[row.method.value, row.case, row.splitNormal, row.splitShear,
             row.qrNormal, row.qrShear, row.intactNormal, row.intactShear,
             row.expectation] for row in splittingReport(**config.splitting)]
    path = os.path.join(outputDir, 'splitting.csv')
    writeCsv(path, HEADER, rows)
    logger.info("Wrote %s", path)
    return [path]
