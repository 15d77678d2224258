import logging
import sys


def setup_logging(level: str = "INFO") -> None:
    """Configure root logging for an entry point (API server or CLI)"""
    logging.basicConfig(
        level=getattr(logging, level.upper(), logging.INFO),
        format='%(asctime)s [%(levelname)s] %(message)s',
        handlers=[
            logging.StreamHandler(sys.stderr)
        ],
        force=True,
    )
