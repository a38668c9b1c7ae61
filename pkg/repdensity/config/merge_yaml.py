import yaml
from pathlib import Path
from typing import Any
from copy import deepcopy

LIST_STRATEGIES = ("replace", "append", "union")


def merge_yaml(
    paths: list[str | Path],
    list_merge_strategy: str = "replace",
) -> dict[str, Any]:
    """
    Merge run configuration files in order, later files winning

    Args:
        paths: YAML files, parents first
        list_merge_strategy: How lists such as ``table.m`` combine:
            - "replace": the later list wins (default)
            - "append": later items are appended
            - "union": appended without repeating items already present

    Returns:
        Merged dictionary

    Examples:
        config = merge_yaml(["default.yaml", "paper_table.yaml"])
    """
    if list_merge_strategy not in LIST_STRATEGIES:
        raise ValueError(
            f"Unknown list merge strategy {list_merge_strategy!r}, "
            f"expected one of {LIST_STRATEGIES}"
        )

    def merge_lists(base: list, override: list) -> list:
        if list_merge_strategy == "append":
            return base + override
        if list_merge_strategy == "union":
            return base + [item for item in override if item not in base]
        return deepcopy(override)

    def deep_merge(base: Any, override: Any) -> Any:
        if isinstance(base, dict) and isinstance(override, dict):
            result = deepcopy(base)
            for key, value in override.items():
                result[key] = deep_merge(result[key], value) if key in result else deepcopy(value)
            return result
        if isinstance(base, list) and isinstance(override, list):
            return merge_lists(base, override)
        # null in a child keeps the parent's value
        if override is None:
            return deepcopy(base)
        return deepcopy(override)

    merged: dict[str, Any] = {}
    for path in paths:
        with open(path, "r") as f:
            try:
                content = yaml.safe_load(f) or {}
            except yaml.YAMLError as e:
                raise ValueError(f"Invalid YAML in {path}: {e}")
        if not isinstance(content, dict):
            raise ValueError(f"{path} must hold a mapping, got {type(content).__name__}")
        merged = deep_merge(merged, content)

    return merged
