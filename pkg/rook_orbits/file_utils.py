"""
Location of the F4 data file.
"""

import logging
import os
from importlib import resources
from pathlib import Path
from typing import Optional

from rook_orbits.constants import DATA_ENV_VAR, DATA_FILE_NAME, DATA_PACKAGE_DIR
from rook_orbits.exceptions import DataFileError

logger = logging.getLogger(__name__)


def packaged_data_file() -> Path:
    """The data file shipped inside the package."""
    return Path(str(resources.files('rook_orbits').joinpath(DATA_PACKAGE_DIR, DATA_FILE_NAME)))


def resolve_data_file(explicit: Optional[str | Path] = None) -> Path:
    """
    Find the data file to load.

    Searches in priority order: the explicit path, the path in the
    ROOK_ORBITS_DATA environment variable, then the packaged default.

    Args:
        explicit: Path given with --data, or None

    Returns:
        Path to an existing data file

    Raises:
        DataFileError: If the chosen file does not exist
    """
    from_env = os.environ.get(DATA_ENV_VAR)
    if explicit:
        path, source = Path(explicit), '--data'
    elif from_env:
        path, source = Path(from_env), f"${DATA_ENV_VAR}"
    else:
        path, source = packaged_data_file(), 'packaged default'

    if not path.is_file():
        logger.error(f"Data file: NOT FOUND ({source})")
        logger.error(f"  Searched for: {path}")
        raise DataFileError(f"Data file not found: {path}")

    logger.info(f"Data file: {path.name} ({source})")
    return path
