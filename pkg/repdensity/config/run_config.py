import os
import yaml
from pathlib import Path
from dataclasses import dataclass, field, replace
from copy import deepcopy
import logging

from ..density_engine import EngineOptions
from ..verification import VerifyOptions
from .merge_yaml import merge_yaml
from .schema_validator import SchemaValidator, ValidationResult

logger = logging.getLogger(__name__)

ENV_CACHE_DIR = "REPDENSITY_CACHE_DIR"
FORMATS = ("markdown", "csv", "json")


@dataclass(frozen=True)
class TableSettings:
    """Rows and columns of the density table."""
    nmax: int = 8
    m: tuple[int, ...] = (2, 3)
    format: str = "markdown"

    def __post_init__(self):
        if self.nmax < 1:
            raise ValueError(f"table.nmax must be positive, got {self.nmax}")
        if any(m < 1 for m in self.m):
            raise ValueError(f"table.m must hold positive integers, got {list(self.m)}")
        if self.format not in FORMATS:
            raise ValueError(f"table.format must be one of {FORMATS}, got {self.format!r}")


class RunConfig:
    """
    Run configuration loaded from YAML with inheritance support.

    Values resolve, strongest first: command-line overrides, the file
    (child over parents), the REPDENSITY_CACHE_DIR environment variable,
    built-in defaults.

    Attributes:
        engine: Options of the density engine
        table: Settings of the density table
        verify: Settings of the verification suites
        parents: Parent YAML files, relative to the file
    """

    def __init__(self, path: str | Path | None = None, schema_path: str | Path | None = None):
        """
        Load a run configuration with parent merging and validation.

        Args:
            path: YAML run configuration, or None for the defaults
            schema_path: Optional schema (defaults to the file's schema field)

        Raises:
            FileNotFoundError: If the file, a parent or the schema is missing
            ValueError: If the YAML is malformed or fails schema validation
        """
        self.path = Path(path) if path else None
        self.schema_path = Path(schema_path) if schema_path else None
        self.parents: list[str] = []
        self.engine = EngineOptions()
        self.table = TableSettings()
        self.verify = VerifyOptions()
        self._raw: dict = {}
        self._warnings: list[str] = []
        self._schema_results: list[ValidationResult] = []

        if self.path is not None:
            self._build_config()
            if not self.schema_path and 'schema' in self._raw:
                self.schema_path = self.path.parent / self._raw['schema']
                logger.info(f"Using schema from configuration: {self._raw['schema']}")
            if self.schema_path:
                self._validate_with_schema()
            else:
                logger.warning(f"No schema found for {self.path.name} - validation skipped")

        self._extract_sections()

    @classmethod
    def default(cls) -> "RunConfig":
        """Built-in defaults plus the environment."""
        return cls()

    def _build_config(self) -> None:
        if not self.path.exists():
            raise FileNotFoundError(f"YAML file not found: {self.path}")

        try:
            with open(self.path, 'r') as f:
                own = yaml.safe_load(f) or {}
        except yaml.YAMLError as e:
            raise ValueError(f"Invalid YAML in {self.path}: {e}")

        # the file itself decides how its lists combine with its parents'
        strategy = (own.get('list_merge') if isinstance(own, dict) else None) or 'replace'
        self._raw = merge_yaml(self._collect_yaml_files(own), list_merge_strategy=strategy)

    def _collect_yaml_files(self, own: dict) -> list[str]:
        yaml_files = []
        if 'parents' in own:
            self.parents = own['parents'] if isinstance(own['parents'], list) else [own['parents']]
            for parent_file in self.parents:
                parent_path = self.path.parent / parent_file
                if not parent_path.exists():
                    raise FileNotFoundError(f"Parent file not found: {parent_path}")
                yaml_files.append(str(parent_path))

        yaml_files.append(str(self.path))  # the file itself overrides its parents
        return yaml_files

    def _validate_with_schema(self) -> None:
        validator = SchemaValidator(self.schema_path)
        self._schema_results = validator.validate(self._raw)
        warnings = validator.get_warnings()
        for warning in warnings:
            self._warnings.append(f"[{warning.rule}] {warning.message}")
            logger.debug(f"{self.path.name}: {warning.message}")

        errors = validator.get_errors()
        logger.info(f"Schema validation complete: {len(errors)} errors, {len(warnings)} warnings")
        if errors:
            details = "\n".join(f"[{error.rule}] {error.message}" for error in errors)
            raise ValueError(f"Run configuration {self.path} is invalid:\n{details}")

    def _resolve_dir(self, value: str) -> str:
        directory = Path(value).expanduser()
        if not directory.is_absolute() and self.path is not None:
            directory = self.path.parent / directory
        return str(directory.resolve())

    def _extract_sections(self) -> None:
        try:
            self._build_sections()
        except TypeError as e:
            raise ValueError(f"Invalid run configuration section: {e}")

    def _build_sections(self) -> None:
        engine = dict(self._raw.get('engine') or {})
        cache_dir = engine.pop('cache_dir', None)
        if cache_dir:
            cache_dir = self._resolve_dir(cache_dir)
        elif os.environ.get(ENV_CACHE_DIR):
            cache_dir = os.environ[ENV_CACHE_DIR]
        cache_enabled = engine.pop('cache_enabled', None)
        if cache_enabled is None:
            cache_enabled = cache_dir is not None
        self.engine = EngineOptions(
            cache_enabled=bool(cache_enabled), cache_dir=cache_dir, **engine
        )

        table = dict(self._raw.get('table') or {})
        if 'm' in table:
            table['m'] = tuple(table['m'])
        self.table = TableSettings(**table)

        verify = dict(self._raw.get('verify') or {})
        if 'cone_multipliers' in verify:
            verify['cone_multipliers'] = tuple(verify['cone_multipliers'])
        self.verify = VerifyOptions(**verify)

    def override(
        self,
        workers: int | None = None,
        budget_points: int | None = None,
        cache_dir: str | None = None,
        table_format: str | None = None,
        samples: int | None = None,
        counterexample_radius: int | None = None,
    ) -> "RunConfig":
        """Apply command-line values; None leaves a setting alone."""
        engine = {}
        if workers is not None:
            engine['workers'] = workers
        if budget_points is not None:
            engine['budget_points'] = budget_points
        if cache_dir is not None:
            engine['cache_dir'] = cache_dir
            engine['cache_enabled'] = True
        self.engine = replace(self.engine, **engine)

        if table_format is not None:
            self.table = replace(self.table, format=table_format)

        verify = {}
        if samples is not None:
            verify['samples'] = samples
        if counterexample_radius is not None:
            verify['counterexample_radius'] = counterexample_radius
        self.verify = replace(self.verify, **verify)
        return self

    @property
    def warnings(self) -> list[str]:
        return list(self._warnings)

    def to_dict(self, include_parents: bool = False) -> dict:
        """Resolved configuration as plain data."""
        result = deepcopy(self._raw)
        result['engine'] = {
            'workers': self.engine.workers,
            'budget_points': self.engine.budget_points,
            'block_points': self.engine.block_points,
            'cache_enabled': self.engine.cache_enabled,
            'cache_dir': self.engine.cache_dir,
        }
        result['table'] = {
            'nmax': self.table.nmax,
            'm': list(self.table.m),
            'format': self.table.format,
        }
        result['verify'] = {
            'samples': self.verify.samples,
            'seed': self.verify.seed,
            'counterexample_radius': self.verify.counterexample_radius,
            'cone_multipliers': list(self.verify.cone_multipliers),
        }
        if not include_parents:
            result.pop('parents', None)
        return result

    def to_yaml(self, include_parents: bool = False) -> str:
        return yaml.dump(self.to_dict(include_parents), default_flow_style=False, sort_keys=False)

    def __repr__(self) -> str:
        source = self.path.name if self.path else "defaults"
        table = f"{list(self.table.m)}x{self.table.nmax}"
        return f"RunConfig({source}, workers={self.engine.workers}, table={table})"
