"""Size caps shared by the enumeration engine and the oracles."""

from __future__ import annotations

from dataclasses import dataclass, replace
from pathlib import Path


@dataclass(frozen=True)
class Caps:
    max_elements: int = 20
    max_oracle_elements: int = 12
    max_oracle_n: int = 12
    workers: int = 1

    def with_overrides(self, **kw) -> "Caps":
        return replace(self, **{k: v for k, v in kw.items() if v is not None})


DEFAULT_CAPS = Caps()

_KEYS = {"max_elements", "max_oracle_elements", "max_oracle_n", "workers"}


def load_config(path: str | Path) -> dict[str, int]:
    """Read ``key=value`` lines; blank lines and ``#`` comments are ignored."""
    values: dict[str, int] = {}
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"{path}:{lineno}: expected key=value")
        key, value = (s.strip() for s in line.split("=", 1))
        if key not in _KEYS:
            raise ValueError(f"{path}:{lineno}: unknown key {key!r}")
        values[key] = int(value)
    return values
