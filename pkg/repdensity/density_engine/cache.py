import hashlib
import json
import logging
import threading
from pathlib import Path

from .result import ENGINE_VERSION, ExactDensity

CACHE_FILE = "densities.jsonl"


def record_key(label: str, m: int, engine_version: str = ENGINE_VERSION) -> str:
    return hashlib.sha256(f"{label}|{m}|{engine_version}".encode()).hexdigest()


class DensityCache:
    """Load and persist exact densities as JSON lines."""

    def __init__(self, cache_dir: str | Path, engine_version: str = ENGINE_VERSION):
        """
        Initialize the cache.

        Args:
            cache_dir: Directory holding densities.jsonl, created on first write
            engine_version: Records written by other versions are ignored
        """
        self.cache_dir = Path(cache_dir)
        self.path = self.cache_dir / CACHE_FILE
        self.engine_version = engine_version
        self._records: dict[str, ExactDensity] | None = None
        self._lock = threading.Lock()
        self.logger = logging.getLogger(__name__)

    def _load(self) -> dict[str, ExactDensity]:
        if self._records is not None:
            return self._records

        records: dict[str, ExactDensity] = {}
        if self.path.exists():
            self.logger.debug(f"Loading cached densities from {self.path}")
            with open(self.path, "r") as f:
                for line_number, line in enumerate(f, start=1):
                    if not line.strip():
                        continue
                    try:
                        record = json.loads(line)
                        if record.get("engine_version") != self.engine_version:
                            continue
                        records[record["key"]] = ExactDensity.from_record(record)
                    except (ValueError, KeyError, TypeError) as e:
                        self.logger.warning(
                            f"Skipping malformed cache line {line_number} in {self.path}: {e}"
                        )
        self._records = records
        return records

    def get(self, label: str, m: int) -> ExactDensity | None:
        """Return the cached density, or None."""
        with self._lock:
            result = self._load().get(record_key(label, m, self.engine_version))
        if result is not None:
            self.logger.info(f"Cache hit for {label}, m={m}")
        return result

    def put(self, result: ExactDensity) -> None:
        """Append a density; later lines win on reload."""
        key = record_key(result.label, result.m, self.engine_version)
        record = {"key": key, **result.to_record(self.engine_version)}
        with self._lock:
            self.cache_dir.mkdir(parents=True, exist_ok=True)
            with open(self.path, "a") as f:
                f.write(json.dumps(record, sort_keys=True) + "\n")
            self._load()[key] = result
        self.logger.debug(f"Cached {result.label}, m={result.m}")

    def __len__(self) -> int:
        with self._lock:
            return len(self._load())
