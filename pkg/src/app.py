import argparse
import sys

import yaml as yaml

from logger import LOG_LEVELS, configureLogging, getLogger
from pkgs.data.enumerators import ScenarioName
from pkgs.data.errors import ConfigError, LineSearchFailedError
from pkgs.data.errors import NotConvergedError, RelaxationDivergedError
from pkgs.data.scenarioConfig import ScenarioConfig
from pkgs.scenarios import RUNNERS

logger = getLogger(__name__)

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_SOLVER = 3


def buildParser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='fracture-qr',
        description="Phase-field fracture scenarios with the QR-frame "
                    "effective crack energy.")
    parser.add_argument('scenario', choices=[name.value for name
                                             in ScenarioName],
                        help="scenario to run")
    parser.add_argument('--config', required=True,
                        help="scenario configuration file (YAML or JSON)")
    parser.add_argument('--output', help="output directory, overrides "
                                         "output_dir")
    parser.add_argument('--mesh', help="mesh file, overrides the mesh block")
    parser.add_argument('--seed', type=int, help="random seed, overrides "
                                                 "seed")
    parser.add_argument('--log-level', default='INFO', choices=LOG_LEVELS,
                        help="logging threshold")
    parser.add_argument('--log-file', help="also log to this file")
    return parser


def main(argv: list[str] | None = None) -> int:
    """
    Run one scenario from the command line.

    :param argv: Arguments without the program name, or None for sys.argv.
    :type argv: list[str] | None

    :return: 0 on success, 2 on configuration or file errors, 3 when a
             solver does not converge.
    :rtype: int
    """
    args = buildParser().parse_args(argv)
    configureLogging(args.log_level, args.log_file)
    try:
        config = ScenarioConfig(args.config, outputDir=args.output,
                                meshPath=args.mesh, seed=args.seed)
        if config.scenario.value != args.scenario:
            raise ConfigError(f"Configuration is for scenario "
                              f"{config.scenario.value}, not "
                              f"{args.scenario}.")
        logger.info("Running %s from %s", args.scenario, args.config)
        written = RUNNERS[config.scenario](config)
    except (ConfigError, OSError, yaml.YAMLError) as error:
        logger.error("%s", error)
        return EXIT_CONFIG
    except (NotConvergedError, LineSearchFailedError,
            RelaxationDivergedError) as error:
        logger.error("%s", error)
        return EXIT_SOLVER
    logger.info("Finished %s: %d files written", args.scenario, len(written))
    return EXIT_OK


if __name__ == '__main__':
    sys.exit(main())
