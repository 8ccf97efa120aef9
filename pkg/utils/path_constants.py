"""
Directory names and the search table for input files.
"""

import os
from enum import Enum
from typing import Dict, Tuple

INPUT_DIR_NAME = "input"
OUTPUT_DIR_NAME = "output"
FIXTURES_DIR_NAME = os.path.join(INPUT_DIR_NAME, "fixtures")

FIG1_FILENAME = "fig1.txt"


class FileKind(Enum):
    INSTANCE = "instance"
    CONFIG = "experiment config"
    BASE_GRAPH = "base graph"


# Directories relative to the project root, tried in order after the path as given.
SEARCH_LOCATIONS: Dict[FileKind, Tuple[str, ...]] = {
    FileKind.INSTANCE: (INPUT_DIR_NAME, FIXTURES_DIR_NAME, OUTPUT_DIR_NAME, ""),
    FileKind.CONFIG: (INPUT_DIR_NAME, ""),
    FileKind.BASE_GRAPH: (INPUT_DIR_NAME, OUTPUT_DIR_NAME),
}


def get_absolute_input_path() -> str:
    from utils import get_project_root
    return os.path.join(get_project_root(), INPUT_DIR_NAME)


def get_absolute_fixtures_path() -> str:
    """Where archived counterexamples live."""
    from utils import get_project_root
    return os.path.join(get_project_root(), FIXTURES_DIR_NAME)
