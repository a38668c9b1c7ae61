import re
import yaml
from pathlib import Path
from typing import Any
from dataclasses import dataclass
import logging

logger = logging.getLogger(__name__)


@dataclass
class ValidationResult:
    """Result of a validation check"""
    field: str
    rule: str
    severity: str  # 'error', 'warning', 'info'
    message: str
    value: Any = None
    expected: Any = None


class SchemaValidator:
    """
    Validates run configurations against a schema

    The schema lists required and optional root keys under ``root`` and
    describes each key under ``fields``. A field rule may carry ``type``,
    ``min``/``max``, ``allowed_values``, ``pattern``, ``item_type``,
    ``min_items`` and, for mappings, nested ``fields``.

    Usage:
        validator = SchemaValidator("config/schema.yaml")
        results = validator.validate(config_dict)
    """

    def __init__(self, schema_path: str | Path):
        self.schema_path = Path(schema_path)
        self.schema = self._load_schema()
        self.results: list[ValidationResult] = []

    def _load_schema(self) -> dict:
        if not self.schema_path.exists():
            raise FileNotFoundError(f"Schema file not found: {self.schema_path}")

        try:
            with open(self.schema_path, 'r') as f:
                schema = yaml.safe_load(f) or {}
                logger.debug(f"Loaded schema from {self.schema_path}")
                return schema
        except yaml.YAMLError as e:
            raise ValueError(f"Invalid YAML in schema file: {e}")

    def validate(self, config: dict) -> list[ValidationResult]:
        """
        Validate a run configuration against the schema

        Args:
            config: Merged configuration dictionary

        Returns:
            List of validation results
        """
        self.results = []
        self._validate_root(config)
        fields_schema = self.schema.get('fields', {})
        for name, value in config.items():
            if name in fields_schema:
                self._validate_field(name, value, fields_schema[name])
        self._validate_table_moduli(config.get('table'))
        return self.results

    def _validate_root(self, config: dict) -> None:
        root_schema = self.schema.get('root', {})
        required_fields = root_schema.get('required', [])
        for field_name in required_fields:
            if field_name not in config or config[field_name] is None:
                self.results.append(ValidationResult(
                    field=field_name,
                    rule='required_field',
                    severity='error',
                    message=f"Required field '{field_name}' is missing",
                    expected=f"Field '{field_name}' must be present"
                ))

        known = set(required_fields) | set(root_schema.get('optional', []))
        for field_name in config:
            if field_name not in known:
                self.results.append(ValidationResult(
                    field=field_name,
                    rule='unknown_field',
                    severity='warning',
                    message=f"Unknown field '{field_name}' is ignored",
                    value=field_name,
                    expected=sorted(known)
                ))

    def _validate_field(self, name: str, value: Any, schema: dict) -> None:
        if value is None:
            return

        expected_type = schema.get('type')
        if expected_type and not self._check_type(value, expected_type):
            self.results.append(ValidationResult(
                field=name,
                rule='invalid_type',
                severity='error',
                message=(
                    f"Field '{name}' should be type {expected_type}, got {type(value).__name__}"
                ),
                value=value,
                expected=expected_type
            ))
            return

        pattern = schema.get('pattern')
        if isinstance(value, str) and pattern and not re.match(pattern, value):
            self.results.append(ValidationResult(
                field=name,
                rule='invalid_pattern',
                severity='error',
                message=f"Field '{name}' value '{value}' doesn't match required pattern",
                value=value,
                expected=f"Pattern: {schema['pattern']}"
            ))

        if isinstance(value, (int, float)) and not isinstance(value, bool):
            self._validate_range(name, value, schema)

        if isinstance(value, list):
            self._validate_list_field(name, value, schema)
        elif isinstance(value, dict):
            nested = schema.get('fields', {})
            for field_name, field_value in value.items():
                if field_name in nested:
                    self._validate_field(f"{name}.{field_name}", field_value, nested[field_name])
                else:
                    logger.debug(f"Unknown field '{name}.{field_name}'")

        allowed = schema.get('allowed_values')
        if allowed is not None and not isinstance(value, (list, dict)) and value not in allowed:
            self.results.append(ValidationResult(
                field=name,
                rule='invalid_value',
                severity='error',
                message=f"Field '{name}' has unsupported value: '{value}'",
                value=value,
                expected=schema['allowed_values']
            ))

    def _validate_range(self, name: str, value: int | float, schema: dict) -> None:
        if 'min' in schema and value < schema['min']:
            self.results.append(ValidationResult(
                field=name,
                rule='below_minimum',
                severity='error',
                message=f"Field '{name}' value {value} is below minimum",
                value=value,
                expected=f">= {schema['min']}"
            ))
        if 'max' in schema and value > schema['max']:
            self.results.append(ValidationResult(
                field=name,
                rule='above_maximum',
                severity='error',
                message=f"Field '{name}' value {value} is above maximum",
                value=value,
                expected=f"<= {schema['max']}"
            ))

    def _validate_list_field(self, name: str, items: list, schema: dict) -> None:
        min_items = schema.get('min_items', 0)
        if len(items) < min_items:
            self.results.append(ValidationResult(
                field=name,
                rule='min_items',
                severity='error',
                message=f"Field '{name}' has {len(items)} items, minimum required is {min_items}",
                value=len(items),
                expected=f">= {min_items}"
            ))

        item_type = schema.get('item_type')
        for i, item in enumerate(items):
            if item_type and not self._check_type(item, item_type):
                self.results.append(ValidationResult(
                    field=f"{name}[{i}]",
                    rule='invalid_item_type',
                    severity='error',
                    message=f"Item {i} in '{name}' has wrong type (expected {item_type})",
                    value=type(item).__name__,
                    expected=item_type
                ))
            elif 'allowed_values' in schema and item not in schema['allowed_values']:
                self.results.append(ValidationResult(
                    field=f"{name}[{i}]",
                    rule='invalid_value',
                    severity='error',
                    message=f"Item {i} in '{name}' has unsupported value: '{item}'",
                    value=item,
                    expected=schema['allowed_values']
                ))
            elif isinstance(item, int) and not isinstance(item, bool):
                self._validate_range(f"{name}[{i}]", item, schema)

    def _validate_table_moduli(self, table: Any) -> None:
        """Repeated moduli in table.m would print the same row twice."""
        if not isinstance(table, dict) or not isinstance(table.get('m'), list):
            return
        seen = set()
        duplicates = set()
        for m in table['m']:
            if m in seen:
                duplicates.add(m)
            seen.add(m)
        if duplicates:
            self.results.append(ValidationResult(
                field='table.m',
                rule='duplicate_moduli',
                severity='warning',
                message=f"Duplicate moduli in table.m: {sorted(duplicates)}",
                value=sorted(duplicates),
                expected="Unique moduli"
            ))

    def _check_type(self, value: Any, expected_type: str | list[str]) -> bool:
        if isinstance(expected_type, list):
            return any(self._check_type(value, t) for t in expected_type)

        if expected_type == 'int':
            return isinstance(value, int) and not isinstance(value, bool)
        type_map = {
            'str': str,
            'float': (int, float),
            'bool': bool,
            'list': list,
            'dict': dict,
            'null': type(None),
            'any': object
        }
        return isinstance(value, type_map.get(expected_type, object))

    def get_errors(self) -> list[ValidationResult]:
        return [r for r in self.results if r.severity == 'error']

    def get_warnings(self) -> list[ValidationResult]:
        return [r for r in self.results if r.severity == 'warning']

    def is_valid(self) -> bool:
        """True when no error-level result was recorded"""
        return len(self.get_errors()) == 0

    def summary(self) -> str:
        errors = self.get_errors()
        warnings = self.get_warnings()

        lines = []
        lines.append("Schema Validation Summary")
        lines.append("-" * 40)
        lines.append(f"Total Results: {len(self.results)}")
        lines.append(f"  Errors: {len(errors)}")
        lines.append(f"  Warnings: {len(warnings)}")
        lines.append(f"Valid: {self.is_valid()}")

        if errors:
            lines.append("\nErrors (first 5):")
            for err in errors[:5]:
                lines.append(f"  [{err.rule}] {err.message}")
                if err.expected:
                    lines.append(f"    Expected: {err.expected}")
            if len(errors) > 5:
                lines.append(f"  ... and {len(errors) - 5} more errors")

        if warnings:
            lines.append("\nWarnings (first 5):")
            for warn in warnings[:5]:
                lines.append(f"  [{warn.rule}] {warn.message}")
            if len(warnings) > 5:
                lines.append(f"  ... and {len(warnings) - 5} more warnings")

        return "\n".join(lines)
