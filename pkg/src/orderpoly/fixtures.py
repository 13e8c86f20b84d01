"""OEIS-style b-file fixtures, read and written offline."""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path

_ID = re.compile(r"A\d{6}")
_OFFSET = re.compile(r"offset\s*=\s*(-?\d+)")


class FixtureError(ValueError):
    pass


@dataclass(frozen=True)
class SequenceFixture:
    id: str
    offset: int
    values: tuple[int, ...]

    def __post_init__(self):
        if not _ID.fullmatch(self.id):
            raise FixtureError(f"bad sequence id {self.id!r}; expected A + 6 digits")
        if not self.values:
            raise FixtureError(f"{self.id}: no values")

    def __getitem__(self, index: int) -> int:
        """Value at OEIS index ``index`` (not list position)."""
        pos = index - self.offset
        if pos < 0 or pos >= len(self.values):
            raise IndexError(f"{self.id} has no term at index {index}")
        return self.values[pos]

    @property
    def last_index(self) -> int:
        return self.offset + len(self.values) - 1


def parse_bfile(text: str, ident: str) -> SequenceFixture:
    offset = None
    first = None
    values = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            m = _OFFSET.search(line)
            if m and offset is None:
                offset = int(m.group(1))
            continue
        parts = line.split()
        if len(parts) != 2:
            raise FixtureError(f"{ident} line {lineno}: expected '<index> <value>'")
        try:
            index, value = int(parts[0]), int(parts[1])
        except ValueError:
            raise FixtureError(f"{ident} line {lineno}: non-integer entry") from None
        if first is None:
            first = index
        elif index != first + len(values):
            raise FixtureError(f"{ident} line {lineno}: index {index} out of sequence")
        values.append(value)
    if first is None:
        raise FixtureError(f"{ident}: no values")
    if offset is not None and offset != first:
        raise FixtureError(f"{ident}: header offset {offset} but first index {first}")
    return SequenceFixture(ident, first, tuple(values))


def format_bfile(fx: SequenceFixture, notes=()) -> str:
    lines = [f"# {fx.id} offset={fx.offset}"] + [f"# {n}" for n in notes]
    lines += [f"{fx.offset + i} {v}" for i, v in enumerate(fx.values)]
    return "\n".join(lines) + "\n"


def default_dir() -> Path:
    return Path(__file__).with_name("fixtures")


def load_fixture(ident: str, directory: str | Path | None = None) -> SequenceFixture:
    path = Path(directory or default_dir()) / f"{ident}.txt"
    return parse_bfile(path.read_text(), ident)


def triangle_rows(fx: SequenceFixture, first_row: int, row_len) -> dict[int, list[int]]:
    """Split a flattened triangle into rows; row_len(n) gives the length of row n."""
    rows = {}
    pos, n = 0, first_row
    while pos + row_len(n) <= len(fx.values):
        rows[n] = list(fx.values[pos:pos + row_len(n)])
        pos += row_len(n)
        n += 1
    return rows
