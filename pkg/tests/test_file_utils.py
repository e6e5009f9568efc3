"""
Tests for data file resolution.
"""

import pytest

from rook_orbits.exceptions import DataFileError
from rook_orbits.file_utils import packaged_data_file, resolve_data_file


class TestResolveDataFile:
    """Tests for resolve_data_file function."""

    def test_packaged_default(self, monkeypatch):
        """Test falling back to the packaged file."""
        monkeypatch.delenv('ROOK_ORBITS_DATA', raising=False)
        path = resolve_data_file()
        assert path == packaged_data_file()
        assert path.name == 'f4_tables.json'
        assert path.is_file()

    def test_explicit_path(self, tmp_path):
        """Test an explicit --data path."""
        data_file = tmp_path / "tables.json"
        data_file.write_text("{}")
        assert resolve_data_file(data_file) == data_file

    def test_environment_variable(self, tmp_path, monkeypatch):
        """Test the ROOK_ORBITS_DATA environment variable."""
        data_file = tmp_path / "from_env.json"
        data_file.write_text("{}")
        monkeypatch.setenv('ROOK_ORBITS_DATA', str(data_file))
        assert resolve_data_file() == data_file

    def test_explicit_beats_environment(self, tmp_path, monkeypatch):
        """Test that --data takes priority over the environment."""
        explicit = tmp_path / "explicit.json"
        explicit.write_text("{}")
        from_env = tmp_path / "from_env.json"
        from_env.write_text("{}")
        monkeypatch.setenv('ROOK_ORBITS_DATA', str(from_env))
        assert resolve_data_file(explicit) == explicit

    def test_missing_file(self, tmp_path):
        """Test that a missing file raises DataFileError."""
        with pytest.raises(DataFileError, match="not found"):
            resolve_data_file(tmp_path / "missing.json")

    def test_missing_environment_file(self, tmp_path, monkeypatch):
        """Test that a dangling environment path is not silently skipped."""
        monkeypatch.setenv('ROOK_ORBITS_DATA', str(tmp_path / "gone.json"))
        with pytest.raises(DataFileError):
            resolve_data_file()
