"""
Run configuration: YAML files with parent inheritance, validated against a
schema, resolved into engine, table and verification settings.
"""

from .merge_yaml import merge_yaml
from .run_config import ENV_CACHE_DIR, FORMATS, RunConfig, TableSettings
from .schema_validator import SchemaValidator, ValidationResult

__all__ = [
    "ENV_CACHE_DIR",
    "FORMATS",
    "RunConfig",
    "TableSettings",
    "merge_yaml",
    "SchemaValidator",
    "ValidationResult",
]
