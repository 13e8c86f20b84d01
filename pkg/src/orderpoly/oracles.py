"""Exhaustive enumeration oracles.

These count objects straight from their definitions (fillings, tableaux,
path families, words) and share no code with the product and determinant
formulas they are used to check.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Sequence

from .poset import CapExceeded, Partition

Point = tuple[int, int]


def _shape(lam) -> Partition:
    return lam if isinstance(lam, Partition) else Partition(lam)


def plane_partition_count(lam, n: int, max_cells: int = 10, max_n: int = 6) -> int:
    """Fillings of shape lam from {0..n}, weakly decreasing along rows and columns."""
    lam = _shape(lam)
    if lam.size > max_cells or n > max_n:
        raise CapExceeded(f"plane partition oracle capped at |lambda| <= {max_cells}, n <= {max_n}")
    cells = lam.cells()
    fill: dict[Point, int] = {}

    def place(k: int) -> int:
        if k == len(cells):
            return 1
        i, j = cells[k]
        hi = n
        if j > 1:
            hi = min(hi, fill[(i, j - 1)])
        if i > 1:
            hi = min(hi, fill[(i - 1, j)])
        total = 0
        for v in range(hi + 1):
            fill[(i, j)] = v
            total += place(k + 1)
        return total

    return place(0)


def rssyt_count(lam, n: int, max_cells: int = 8, max_n: int = 8) -> int:
    """Reverse semistandard tableaux of shape lam with entries in {1..n}:
    weakly decreasing rows, strictly decreasing columns."""
    lam = _shape(lam)
    if lam.size > max_cells or n > max_n:
        raise CapExceeded(f"RSSYT oracle capped at |lambda| <= {max_cells}, n <= {max_n}")
    cells = lam.cells()
    fill: dict[Point, int] = {}

    def place(k: int) -> int:
        if k == len(cells):
            return 1
        i, j = cells[k]
        hi = n
        if j > 1:
            hi = min(hi, fill[(i, j - 1)])
        if i > 1:
            hi = min(hi, fill[(i - 1, j)] - 1)
        total = 0
        for v in range(1, hi + 1):
            fill[(i, j)] = v
            total += place(k + 1)
        return total

    return place(0)


def standard_tableaux(lam) -> list[dict[Point, int]]:
    """All SYT of shape lam, as cell -> entry maps."""
    lam = _shape(lam)
    rows = list(lam.parts)
    filled = [0] * len(rows)
    current: dict[Point, int] = {}
    out = []
    m = lam.size

    def grow(k: int) -> None:
        if k > m:
            out.append(dict(current))
            return
        for r in range(len(rows)):
            if filled[r] < rows[r] and (r == 0 or filled[r - 1] > filled[r]):
                filled[r] += 1
                current[(r + 1, filled[r])] = k
                grow(k + 1)
                del current[(r + 1, filled[r])]
                filled[r] -= 1

    grow(1)
    return out


def syt_descents(tableau: dict[Point, int]) -> int:
    """Number of i such that i + 1 sits in a lower row than i."""
    row_of = {v: cell[0] for cell, v in tableau.items()}
    return sum(1 for i in range(1, len(row_of)) if row_of[i + 1] > row_of[i])


# -- lattice paths ----------------------------------------------------------


@dataclass(frozen=True)
class PathSystem:
    """Start and end points for families of east/north lattice paths;
    path i runs from starts[i] to ends[i]."""

    starts: tuple[Point, ...]
    ends: tuple[Point, ...]

    def __post_init__(self):
        if len(self.starts) != len(self.ends):
            raise ValueError("PathSystem needs as many starts as ends")


def first_proof_paths(lam, n: int) -> PathSystem:
    """Starts (-lam_{t-j+1} - (j-1), j-1), ends (0, n+i-1)."""
    lam = _shape(lam)
    t = lam.length
    starts = tuple((-lam[t - j] - (j - 1), j - 1) for j in range(1, t + 1))
    ends = tuple((0, n + i - 1) for i in range(1, t + 1))
    return PathSystem(starts, ends)


def second_proof_paths(lam, n: int) -> PathSystem:
    """Starts (j, t-j), ends (n+i, lam_i + t - i)."""
    lam = _shape(lam)
    t = lam.length
    starts = tuple((j, t - j) for j in range(1, t + 1))
    ends = tuple((n + i, lam[i - 1] + t - i) for i in range(1, t + 1))
    return PathSystem(starts, ends)


@lru_cache(maxsize=4096)
def _paths(start: Point, end: Point) -> tuple[frozenset, ...]:
    (x0, y0), (x1, y1) = start, end
    if x1 < x0 or y1 < y0:
        return ()
    out = []
    walk = [start]

    def step(x: int, y: int) -> None:
        if (x, y) == end:
            out.append(frozenset(walk))
            return
        if x < x1:
            walk.append((x + 1, y))
            step(x + 1, y)
            walk.pop()
        if y < y1:
            walk.append((x, y + 1))
            step(x, y + 1)
            walk.pop()

    step(x0, y0)
    return tuple(out)


def path_count(start: Point, end: Point) -> int:
    return len(_paths(start, end))


def lgv_count(system: PathSystem, max_nodes: int = 10**7) -> int:
    """Count path families with pairwise vertex-disjoint paths, exhaustively.

    Families are built path by path, pruning as soon as a path touches an
    earlier one; ``max_nodes`` caps the number of partial families visited.
    """
    families = [_paths(s, e) for s, e in zip(system.starts, system.ends)]
    visited = 0

    def choose(i: int, used: frozenset) -> int:
        nonlocal visited
        if i == len(families):
            return 1
        total = 0
        for p in families[i]:
            visited += 1
            if visited > max_nodes:
                raise CapExceeded(f"path family search exceeded {max_nodes} nodes")
            if not used & p:
                total += choose(i + 1, used | p)
        return total

    return choose(0, frozenset())


def lgv_matrix(system: PathSystem) -> list[list[int]]:
    """Entry (i, j) counts paths from start j to end i."""
    return [[path_count(s, e) for s in system.starts] for e in system.ends]


# -- multiset words ---------------------------------------------------------


def multiset_descents_bruteforce(mults: Sequence[int]) -> list[int]:
    """Descent distribution over distinct words, via itertools; tiny inputs only."""
    letters = [v for v, m in enumerate(mults, 1) for _ in range(m)]
    tally: dict[int, int] = {}
    for w in set(permutations(letters)):
        d = sum(1 for a, b in zip(w, w[1:]) if a > b)
        tally[d] = tally.get(d, 0) + 1
    return [tally.get(i, 0) for i in range(max(tally) + 1)]


def multiset_descents_enumerate(mults: Sequence[int]) -> list[int]:
    """Descent distribution over all words with the given letter multiplicities.

    Words are generated letter by letter; subtrees with the same remaining
    multiset and last letter are counted once and reused.
    """
    mults = tuple(mults)

    @lru_cache(maxsize=None)
    def tail(remaining: tuple[int, ...], last: int) -> tuple[int, ...]:
        if not any(remaining):
            return (1,)
        acc: list[int] = []
        for v, m in enumerate(remaining):
            if not m:
                continue
            rest = remaining[:v] + (m - 1,) + remaining[v + 1:]
            sub = tail(rest, v)
            shift = 1 if v < last else 0
            if len(acc) < len(sub) + shift:
                acc.extend([0] * (len(sub) + shift - len(acc)))
            for i, c in enumerate(sub):
                acc[i + shift] += c
        return tuple(acc)

    out = list(tail(mults, -1))
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out
