"""
Unit tests for RunConfig
"""

import os
import shutil
import tempfile
import unittest
from pathlib import Path
from unittest import mock

import yaml

from repdensity.config import ENV_CACHE_DIR, RunConfig, TableSettings
from repdensity.density_engine import EngineOptions
from repdensity.exceptions import InvalidInputError


def find_config_dir() -> Path:
    current = Path(__file__).parent
    while current != current.parent:
        if (current / "config" / "schema.yaml").exists():
            return current / "config"
        current = current.parent
    return Path(__file__).parent.parent.parent.parent / "config"


class TestShippedConfigs(unittest.TestCase):
    """The YAML files under config/ load and validate"""

    def setUp(self):
        self.config_dir = find_config_dir()

    def test_default(self):
        config = RunConfig(self.config_dir / "default.yaml")
        self.assertEqual(config.table.m, (2, 3))
        self.assertEqual(config.table.nmax, 8)
        self.assertEqual(config.engine.workers, 1)
        self.assertEqual(config.verify.counterexample_radius, 1000)
        self.assertEqual(config.schema_path.name, "schema.yaml")

    def test_inheritance(self):
        config = RunConfig(self.config_dir / "quick.yaml")
        self.assertEqual(config.parents, ["default.yaml"])
        # own values
        self.assertEqual(config.table.nmax, 5)
        self.assertEqual(config.verify.cone_multipliers, (5, 10, 25))
        # inherited values
        self.assertEqual(config.table.format, "markdown")
        self.assertEqual(config.verify.seed, 0)

    def test_paper_table_cache_dir_is_resolved(self):
        config = RunConfig(self.config_dir / "paper_table.yaml")
        self.assertTrue(config.engine.cache_enabled)
        self.assertTrue(Path(config.engine.cache_dir).is_absolute())
        self.assertEqual(Path(config.engine.cache_dir).name, ".repdensity_cache")


class TestRunConfig(unittest.TestCase):
    """Loading, validation and precedence"""

    def setUp(self):
        self.temp_dir = tempfile.mkdtemp()
        self.temp_path = Path(self.temp_dir)
        shutil.copy(find_config_dir() / "schema.yaml", self.temp_path / "schema.yaml")

    def tearDown(self):
        shutil.rmtree(self.temp_dir)

    def write(self, name: str, content: dict) -> Path:
        path = self.temp_path / name
        with open(path, 'w') as f:
            yaml.dump(content, f)
        return path

    def test_defaults(self):
        with mock.patch.dict(os.environ, {}, clear=True):
            config = RunConfig.default()
        self.assertEqual(config.engine, EngineOptions())
        self.assertEqual(config.table, TableSettings())
        self.assertIsNone(config.path)

    def test_environment_cache_dir(self):
        with mock.patch.dict(os.environ, {ENV_CACHE_DIR: self.temp_dir}):
            config = RunConfig.default()
        self.assertTrue(config.engine.cache_enabled)
        self.assertEqual(config.engine.cache_dir, self.temp_dir)

    def test_file_beats_environment(self):
        path = self.write("run.yaml", {"schema": "schema.yaml", "engine": {"cache_dir": "cache"}})
        with mock.patch.dict(os.environ, {ENV_CACHE_DIR: "/elsewhere"}):
            config = RunConfig(path)
        self.assertEqual(config.engine.cache_dir, str((self.temp_path / "cache").resolve()))

    def test_cache_can_be_disabled(self):
        path = self.write("run.yaml", {"schema": "schema.yaml", "engine": {"cache_enabled": False}})
        with mock.patch.dict(os.environ, {ENV_CACHE_DIR: self.temp_dir}):
            config = RunConfig(path)
        self.assertFalse(config.engine.cache_enabled)

    def test_flags_beat_file(self):
        path = self.write("run.yaml", {
            "schema": "schema.yaml",
            "engine": {"workers": 2},
            "table": {"format": "csv"},
        })
        config = RunConfig(path).override(workers=6, table_format="json", samples=50)
        self.assertEqual(config.engine.workers, 6)
        self.assertEqual(config.table.format, "json")
        self.assertEqual(config.verify.samples, 50)
        # untouched settings survive
        self.assertEqual(config.verify.seed, 0)

    def test_override_cache_dir_enables_cache(self):
        config = RunConfig.default().override(cache_dir=self.temp_dir)
        self.assertTrue(config.engine.cache_enabled)

    def test_schema_errors_raise(self):
        path = self.write("run.yaml", {"schema": "schema.yaml", "engine": {"workers": 0}})
        with self.assertRaises(ValueError) as ctx:
            RunConfig(path)
        self.assertIn("below_minimum", str(ctx.exception))

    def test_unknown_section_key(self):
        path = self.write("run.yaml", {"schema": "schema.yaml", "table": {"columns": 3}})
        with self.assertRaises(ValueError):
            RunConfig(path)

    def test_bad_format(self):
        with self.assertRaises(ValueError):
            TableSettings(format="xlsx")

    def test_engine_options_errors_are_value_errors(self):
        path = self.write("run.yaml", {"engine": {"cache_enabled": True}})
        with self.assertRaises(InvalidInputError), mock.patch.dict(os.environ, {}, clear=True):
            RunConfig(path)

    def test_missing_file(self):
        with self.assertRaises(FileNotFoundError):
            RunConfig(self.temp_path / "absent.yaml")

    def test_missing_parent(self):
        path = self.write("run.yaml", {"schema": "schema.yaml", "parents": ["absent.yaml"]})
        with self.assertRaises(FileNotFoundError):
            RunConfig(path)

    def test_invalid_yaml(self):
        path = self.temp_path / "broken.yaml"
        path.write_text("engine: [unclosed\n")
        with self.assertRaises(ValueError):
            RunConfig(path)

    def test_no_schema_warns(self):
        path = self.write("run.yaml", {"table": {"nmax": 3}})
        with self.assertLogs("repdensity.config.run_config", level="WARNING"):
            config = RunConfig(path)
        self.assertEqual(config.table.nmax, 3)

    def test_schema_warnings_are_kept(self):
        path = self.write("run.yaml", {"schema": "schema.yaml", "colour": "blue"})
        self.assertEqual(
            RunConfig(path).warnings, ["[unknown_field] Unknown field 'colour' is ignored"]
        )
        self.assertEqual(RunConfig.default().warnings, [])

    def test_list_merge_replaces_by_default(self):
        self.write("base.yaml", {"schema": "schema.yaml", "table": {"m": [2, 3]}})
        path = self.write(
            "run.yaml", {"schema": "schema.yaml", "parents": ["base.yaml"], "table": {"m": [3, 5]}}
        )
        self.assertEqual(RunConfig(path).table.m, (3, 5))

    def test_list_merge_union(self):
        self.write("base.yaml", {"schema": "schema.yaml", "table": {"m": [2, 3]}})
        path = self.write("run.yaml", {
            "schema": "schema.yaml",
            "parents": ["base.yaml"],
            "list_merge": "union",
            "table": {"m": [3, 5]},
        })
        self.assertEqual(RunConfig(path).table.m, (2, 3, 5))

    def test_list_merge_append(self):
        self.write("base.yaml", {"schema": "schema.yaml", "verify": {"cone_multipliers": [5]}})
        path = self.write("run.yaml", {
            "schema": "schema.yaml",
            "parents": ["base.yaml"],
            "list_merge": "append",
            "verify": {"cone_multipliers": [10, 25]},
        })
        self.assertEqual(RunConfig(path).verify.cone_multipliers, (5, 10, 25))

    def test_unknown_list_merge(self):
        path = self.write("run.yaml", {"schema": "schema.yaml", "list_merge": "zip"})
        with self.assertRaises(ValueError):
            RunConfig(path)

    def test_to_yaml(self):
        path = self.write("run.yaml", {"schema": "schema.yaml", "parents": [], "table": {"m": [5]}})
        config = RunConfig(path)
        text = config.to_yaml()
        self.assertIn("table:", text)
        self.assertNotIn("parents", text)
        self.assertEqual(yaml.safe_load(text)["table"]["m"], [5])


if __name__ == "__main__":
    unittest.main()
