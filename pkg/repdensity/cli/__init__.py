"""
Command-line surface: ``repdensity density|table|bounds|verify``.
"""

from .labels import parse_algebra, parse_group, parse_variant
from .main import build_parser, compute, main
from .render import CSV_COLUMNS, OutputRecord, density_frame

__all__ = [
    "CSV_COLUMNS",
    "OutputRecord",
    "build_parser",
    "compute",
    "density_frame",
    "main",
    "parse_algebra",
    "parse_group",
    "parse_variant",
]
