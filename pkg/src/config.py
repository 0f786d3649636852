"""
Configuration management for berkram.

This module provides centralized configuration for the berkram command line
tool, including environment variable handling, validation, and logging setup.
Library functions take these values as keyword arguments; only the CLI
reads them from here.

Author: Tom Pravetz
License: MIT
"""

import os
import logging
from typing import List, Optional


def setup_logging(level: Optional[str] = None, log_file: Optional[str] = None) -> None:
    """
    Setup logging configuration for the application.

    Logs go to stderr so that reports written to stdout stay machine-readable.
    A file handler is added when a log file is configured.

    Args:
        level: Logging level as string (DEBUG, INFO, WARNING, ERROR).
               If None, reads from LOG_LEVEL environment variable.
               Defaults to WARNING if not specified.
        log_file: Optional path of a log file. If None, reads LOG_FILE.

    Raises:
        ValueError: If an invalid logging level is provided.
    """
    log_level = level or os.getenv('LOG_LEVEL', 'WARNING')
    log_file = log_file if log_file is not None else os.getenv('LOG_FILE', '')

    try:
        numeric_level = getattr(logging, log_level.upper())
    except AttributeError:
        raise ValueError(f"Invalid logging level: {log_level}")

    handlers: List[logging.Handler] = [logging.StreamHandler()]
    if log_file:
        handlers.append(logging.FileHandler(log_file, encoding='utf-8'))

    logging.basicConfig(
        level=numeric_level,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        handlers=handlers,
        force=True,
    )


class Config:
    """
    Configuration class for berkram.

    Manages all tunable limits through environment variables with sensible
    defaults and validation.

    Attributes:
        hensel_precision: Target p-adic precision for located critical points
        root_candidate_limit: Maximum rational-root candidates tried per polynomial
        reduction_max_steps: Maximum target zoom steps when a reduction is constant
        sweep_workers: Worker threads used by sampling sweeps
        output_dir: Directory that relative output paths are resolved against
    """

    def __init__(self) -> None:
        """
        Initialize configuration from environment variables.

        Raises:
            ValueError: If a setting is not a valid number or is out of range
        """
        # Root location
        self.hensel_precision: int = int(os.getenv('BERKRAM_HENSEL_PRECISION', '20'))
        self.root_candidate_limit: int = int(
            os.getenv('BERKRAM_ROOT_CANDIDATE_LIMIT', '4096')
        )

        # Multiplicity computation
        self.reduction_max_steps: int = int(
            os.getenv('BERKRAM_REDUCTION_MAX_STEPS', '64')
        )

        # Sweeps
        self.sweep_workers: int = int(os.getenv('BERKRAM_SWEEP_WORKERS', '1'))

        # Output
        self.output_dir: str = os.getenv('BERKRAM_OUTPUT_DIR', '.')

        self._validate()

    def _validate(self) -> None:
        """
        Validate configuration settings.

        Raises:
            ValueError: If a setting is out of range
        """
        if self.hensel_precision < 1:
            raise ValueError(
                f"Hensel precision must be >= 1, got: {self.hensel_precision}"
            )

        if self.root_candidate_limit < 1:
            raise ValueError(
                f"Root candidate limit must be >= 1, got: {self.root_candidate_limit}"
            )

        if self.reduction_max_steps < 1:
            raise ValueError(
                f"Reduction step limit must be >= 1, got: {self.reduction_max_steps}"
            )

        if self.sweep_workers < 1:
            raise ValueError(f"Sweep workers must be >= 1, got: {self.sweep_workers}")

    def resolve_output(self, path: str) -> str:
        """Resolve an output path against the configured output directory."""
        if os.path.isabs(path):
            return path
        return os.path.join(self.output_dir, path)

    def __repr__(self) -> str:
        """Return string representation of configuration."""
        return (
            f"Config(hensel_precision={self.hensel_precision}, "
            f"root_candidate_limit={self.root_candidate_limit}, "
            f"reduction_max_steps={self.reduction_max_steps}, "
            f"sweep_workers={self.sweep_workers}, output_dir='{self.output_dir}')"
        )
