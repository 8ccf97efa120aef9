"""
File helpers for the ranked delegation toolkit.

Instances, base graphs and experiment configs may be named by path or by bare
file name; bare names are looked up under the project's input/ tree (see
utils.path_constants.SEARCH_LOCATIONS), so every command works from any
working directory.
"""

import logging
import os
from pathlib import Path
from typing import Optional

from utils.path_constants import OUTPUT_DIR_NAME, SEARCH_LOCATIONS, FileKind

logger = logging.getLogger(__name__)


def get_project_root() -> str:
    """The directory holding ranked_delegation.py, utils/ and input/."""
    return str(Path(__file__).resolve().parent.parent)


def find_file(filename: str, kind: FileKind = FileKind.INSTANCE) -> Optional[str]:
    """
    Args:
        filename: a path, or a bare name such as "fig1.txt" or "copy_ring.txt"
        kind: selects the directories searched for bare names

    Returns:
        Absolute path of the first match, or None
    """
    if os.path.isfile(filename):
        return os.path.abspath(filename)

    root = get_project_root()
    candidates = [os.path.join(root, location, filename) for location in SEARCH_LOCATIONS[kind]]
    for candidate in candidates:
        if os.path.isfile(candidate):
            logger.debug(f"Resolved {kind.value} '{filename}' to {candidate}")
            return candidate
    logger.warning(f"No {kind.value} named '{filename}'; tried {candidates}")
    return None


def require_file(filename: str, kind: FileKind = FileKind.INSTANCE) -> str:
    """
    Like find_file, but a miss is an error.

    Raises:
        FileNotFoundError: no candidate exists
    """
    path = find_file(filename, kind)
    if path is None:
        raise FileNotFoundError(f"{kind.value.capitalize()} not found: {filename}")
    return path


def ensure_directory(directory: str) -> str:
    os.makedirs(directory, exist_ok=True)
    return os.path.abspath(directory)


def get_output_directory() -> str:
    """project_root/output, created on first use."""
    return ensure_directory(os.path.join(get_project_root(), OUTPUT_DIR_NAME))
