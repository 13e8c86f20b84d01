"""Ehrhart series of order polytopes from linear extensions, plus the
brute-force lattice-point oracle they are checked against."""

from __future__ import annotations

import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .config import DEFAULT_CAPS, Caps
from .exact import EhrSeries, Polynomial, poly_interpolate, series_coefficient
from .poset import CapExceeded, Poset


@dataclass(frozen=True)
class ExtensionStats:
    total: int
    by_descents: tuple[int, ...]


def _tally_from(P: Poset, first: int) -> list[int]:
    """Descent tally over all linear extensions that start with ``first``.

    The rest of an extension depends only on which elements are placed
    and on the last one, so (placed, last) states are counted once.
    """
    full = (1 << P.p) - 1
    below = [P.below(v) for v in range(P.p)]
    memo: dict[tuple[int, int], tuple[int, ...]] = {}

    def rest(placed: int, last: int) -> tuple[int, ...]:
        if placed == full:
            return (1,)
        key = (placed, last)
        hit = memo.get(key)
        if hit is not None:
            return hit
        acc: list[int] = []
        for v in range(P.p):
            if placed >> v & 1 or below[v] & ~placed:
                continue
            sub = rest(placed | 1 << v, v)
            shift = 1 if v < last else 0
            if len(acc) < len(sub) + shift:
                acc.extend([0] * (len(sub) + shift - len(acc)))
            for i, c in enumerate(sub):
                acc[i + shift] += c
        memo[key] = out = tuple(acc)
        return out

    return list(rest(1 << first, first))


def _branch(args):
    P, first = args
    return _tally_from(P, first)


def extension_stats(P: Poset, caps: Caps = DEFAULT_CAPS) -> ExtensionStats:
    """Descent distribution over all linear extensions of P.

    Extensions are read as permutations of the (natural) labels; the
    tally is accumulated over order ideals rather than extension by
    extension (see linear_extensions for the explicit stream).
    """
    if P.p > caps.max_elements:
        raise CapExceeded(
            f"poset has {P.p} elements; extension enumeration is capped at "
            f"{caps.max_elements} (raise --max-elements to override)"
        )
    if P.p == 0:
        return ExtensionStats(1, (1,))
    sys.setrecursionlimit(max(sys.getrecursionlimit(), 4 * P.p + 100))
    firsts = P.minimal()
    if caps.workers > 1 and len(firsts) > 1:
        with ProcessPoolExecutor(max_workers=caps.workers) as pool:
            parts = list(pool.map(_branch, [(P, v) for v in firsts]))
    else:
        parts = [_branch((P, v)) for v in firsts]
    width = max(len(t) for t in parts)
    tally = [sum(t[i] for t in parts if i < len(t)) for i in range(width)]
    while len(tally) > 1 and tally[-1] == 0:
        tally.pop()
    return ExtensionStats(sum(tally), tuple(tally))


def linear_extensions(P: Poset, caps: Caps = DEFAULT_CAPS):
    """Yield linear extensions as label tuples, in the enumeration order used
    by extension_stats."""
    if P.p > caps.max_elements:
        raise CapExceeded(f"poset has {P.p} elements; capped at {caps.max_elements}")
    full = (1 << P.p) - 1
    word: list[int] = []

    def grow(placed: int):
        if placed == full:
            yield tuple(word)
            return
        for v in range(P.p):
            if placed >> v & 1 or P.below(v) & ~placed:
                continue
            word.append(v)
            yield from grow(placed | 1 << v)
            word.pop()

    yield from grow(0)


def descents(word) -> int:
    return sum(1 for a, b in zip(word, word[1:]) if a > b)


def ehr_series(P: Poset, caps: Caps = DEFAULT_CAPS) -> EhrSeries:
    stats = extension_stats(P, caps)
    return EhrSeries(Polynomial(stats.by_descents), P.p + 1)


def count_order_maps(P: Poset, n: int, caps: Caps = DEFAULT_CAPS) -> int:
    """Number of order-preserving maps P -> {0, ..., n}, by direct search.

    This is the lattice-point count of the n-th dilate of the order polytope.
    """
    if n < 0:
        return 0
    if P.p > caps.max_oracle_elements or n > caps.max_oracle_n:
        raise CapExceeded(
            f"oracle capped at {caps.max_oracle_elements} elements and n <= "
            f"{caps.max_oracle_n} (got {P.p} elements, n = {n})"
        )
    if P.p == 0:
        return 1
    lowers = [P.lower_covers(v) for v in range(P.p)]
    values = [0] * P.p
    last = P.p - 1

    def assign(v: int) -> int:
        lo = max((values[u] for u in lowers[v]), default=0)
        if v == last:
            return n - lo + 1
        count = 0
        for x in range(lo, n + 1):
            values[v] = x
            count += assign(v + 1)
        return count

    return assign(0)


def ehr_polynomial(P: Poset, caps: Caps = DEFAULT_CAPS) -> Polynomial:
    """Ehrhart polynomial in n, interpolated exactly at n = 0..p."""
    series = ehr_series(P, caps)
    points = [(n, series_coefficient(series, n)) for n in range(P.p + 1)]
    return poly_interpolate(points, P.p)


@dataclass
class CrosscheckReport:
    rows: list[tuple[int, int, int]] = field(default_factory=list)

    @property
    def mismatches(self) -> list[int]:
        return [n for n, engine, oracle in self.rows if engine != oracle]

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def render(self) -> str:
        lines = ["n engine oracle status"]
        for n, engine, oracle in self.rows:
            lines.append(f"{n} {engine} {oracle} {'ok' if engine == oracle else 'MISMATCH'}")
        return "\n".join(lines)


def crosscheck(P: Poset, nmax: int, caps: Caps = DEFAULT_CAPS) -> CrosscheckReport:
    series = ehr_series(P, caps)
    report = CrosscheckReport()
    for n in range(nmax + 1):
        report.rows.append((n, series_coefficient(series, n), count_order_maps(P, n, caps)))
    return report
