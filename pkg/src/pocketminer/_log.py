import logging


def log_event(logger: logging.Logger, event: str, level: int = logging.INFO, **fields) -> None:
    """Emit ``event key=value ...`` as a single structured log line."""
    if logger.isEnabledFor(level):
        parts = [event] + [f"{k}={v}" for k, v in fields.items()]
        logger.log(level, " ".join(parts))


def configure(verbose: bool = False) -> None:
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.INFO,
        format="%(asctime)s %(name)s %(message)s",
    )
