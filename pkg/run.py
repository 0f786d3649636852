#!/usr/bin/env python3
"""
berkram Application Entry Point.

This script serves as the main entry point for the berkram command line
tool. It handles initialization, configuration loading, and exit codes.

Author: Tom Pravetz
License: MIT

Usage:
    python run.py example 6.1 --p 3
    python run.py tau --map ex63 --p 3 --point 0,0 --json

Environment Variables:
    See .env.example for the available settings.
"""

import sys
import logging

from dotenv import load_dotenv

from src.config import Config, setup_logging
from src.cli_interface import main as cli_main

# Load environment variables from .env file
load_dotenv()

logger = logging.getLogger(__name__)


def main() -> None:
    """
    Main entry point for berkram.

    Initializes logging, loads configuration, and runs the command line.
    Exits with the status returned by the command.

    Raises:
        SystemExit: Always, carrying the command's exit status
    """
    try:
        # Setup logging configuration first
        setup_logging()

        # Load and validate configuration
        config = Config()
        logger.info(f"Configuration loaded: {config}")

        status = cli_main(sys.argv[1:], config)

    except KeyboardInterrupt:
        logger.info("Received keyboard interrupt, stopping")
        print("\n🛑 Interrupted.", file=sys.stderr)
        sys.exit(130)

    except Exception as e:
        logger.critical(f"Fatal error: {e}", exc_info=True)
        print(f"❌ Fatal error: {e}", file=sys.stderr)
        print("Check the logs for more details.", file=sys.stderr)
        sys.exit(1)

    sys.exit(status)


if __name__ == "__main__":
    main()
