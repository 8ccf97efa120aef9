import os

import pytest

from utils import ensure_directory, find_file, get_output_directory, get_project_root, require_file
from utils.path_constants import (
    FIG1_FILENAME,
    OUTPUT_DIR_NAME,
    SEARCH_LOCATIONS,
    FileKind,
    get_absolute_fixtures_path,
    get_absolute_input_path,
)


def test_get_project_root_returns_existing_directory():
    root = get_project_root()
    assert os.path.isdir(root)
    assert os.path.isfile(os.path.join(root, 'README.md'))
    assert os.path.isfile(os.path.join(root, 'ranked_delegation.py'))
    assert os.path.isdir(os.path.join(root, 'utils'))


def test_find_file_searches_instance_locations():
    assert find_file(FIG1_FILENAME) == os.path.join(get_absolute_input_path(), FIG1_FILENAME)


def test_find_file_finds_fixtures_by_bare_name():
    path = find_file('copy_ring.txt')
    assert path == os.path.join(get_absolute_fixtures_path(), 'copy_ring.txt')


def test_find_file_accepts_root_relative_paths():
    path = find_file(os.path.join('input', 'fixtures', 'dfd_guru.txt'))
    assert path and path.endswith('dfd_guru.txt')


def test_find_file_missing_returns_none():
    assert find_file('no_such_instance.txt') is None


def test_find_file_accepts_existing_path(tmp_path):
    target = tmp_path / 'mine.txt'
    target.write_text('casting: c\n')
    assert find_file(str(target)) == str(target)


def test_configs_are_not_searched_among_fixtures():
    assert find_file('copy_ring.txt', FileKind.CONFIG) is None
    assert find_file('experiment_friendship.json', FileKind.CONFIG)


def test_require_file_names_the_kind():
    with pytest.raises(FileNotFoundError, match="Base graph not found"):
        require_file('absent_edges.txt', FileKind.BASE_GRAPH)


def test_ensure_directory_creates_path(tmp_path):
    path = ensure_directory(str(tmp_path / 'sub' / 'deeper'))
    assert os.path.isdir(path)


def test_get_output_directory_exists():
    out_dir = get_output_directory()
    assert out_dir == os.path.join(get_project_root(), OUTPUT_DIR_NAME)
    assert os.path.isdir(out_dir)


def test_output_holds_instances_but_not_configs():
    assert OUTPUT_DIR_NAME in SEARCH_LOCATIONS[FileKind.INSTANCE]
    assert OUTPUT_DIR_NAME not in SEARCH_LOCATIONS[FileKind.CONFIG]


def test_bare_names_resolve_from_any_working_directory(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    assert find_file(FIG1_FILENAME) == os.path.join(get_absolute_input_path(), FIG1_FILENAME)
    assert find_file(os.path.join('input', FIG1_FILENAME))
