"""
Model change toolkit - Main entry point.

Receives, evicts and revises models of EL-bottom and ALC concepts from the
command line; see `python src/main.py --help`.
"""

import sys
import logging
from pathlib import Path

# Add src to path for imports
sys.path.insert(0, str(Path(__file__).parent.parent))

from src.cli.commands import run
from src.config.config_parser import load_config_or_default


def setup_logging(level: str = "WARNING"):
    """Configure logging for the application; stdout is left to command output."""
    logging.basicConfig(
        level=getattr(logging, level.upper(), logging.WARNING),
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        handlers=[
            logging.StreamHandler(sys.stderr),
        ]
    )


def main():
    """Main entry point for the application."""
    config = load_config_or_default()
    setup_logging(config.log_level)
    logger = logging.getLogger(__name__)
    logger.info("Starting model change toolkit")
    sys.exit(run(sys.argv[1:], config))


if __name__ == "__main__":
    main()
