import logging

LOG_FORMAT = '%(asctime)s %(levelname)s %(name)s: %(message)s'
LOG_LEVELS = ('DEBUG', 'INFO', 'WARNING', 'ERROR')


def configureLogging(level: str = 'INFO',
                     logFile: str | None = None) -> logging.Logger:
    """
    Configure the root logger with a console handler and, optionally, a
    file handler. Calling it again replaces the handlers.

    :param level: One of DEBUG, INFO, WARNING, ERROR.
    :type level: str
    :param logFile: Path of the log file, or None.
    :type logFile: str | None

    :return: The root logger.
    :rtype: logging.Logger

    :raises ValueError: If the level is unknown.
    """
    if level not in LOG_LEVELS:
        raise ValueError(f"Log level {level} not supported.")
    handlers: list[logging.Handler] = [logging.StreamHandler()]
    if logFile is not None:
        handlers.append(logging.FileHandler(logFile, encoding='utf-8'))
    logging.basicConfig(level=level, format=LOG_FORMAT, handlers=handlers,
                        force=True)
    return logging.getLogger()


def getLogger(name: str) -> logging.Logger:
    return logging.getLogger(name)
