"""Named verification suites: computed prefixes against bundled fixtures
and against each other."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Iterable, Sequence

from . import closed_forms as cf
from . import poset as po
from .config import DEFAULT_CAPS, Caps
from .engine import ehr_series
from .fixtures import FixtureError, SequenceFixture, default_dir, load_fixture


@dataclass(frozen=True)
class Check:
    name: str
    expected: str
    got: str
    mismatch: int | None = None  # first mismatching position, None = pass
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.mismatch is None and not self.detail

    def render(self) -> str:
        head = f"{'PASS' if self.ok else 'FAIL'} {self.name}: {self.got} vs {self.expected}"
        if self.ok:
            return head
        return f"{head} ({self.detail})" if self.detail else head


@dataclass
class VerificationReport:
    checks: list[Check] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.ok]

    def render(self) -> str:
        checks = sorted(self.checks, key=lambda c: c.name)
        lines = [c.render() for c in checks]
        lines.append(f"{len(checks)} checks, {len(self.failures)} failed")
        return "\n".join(lines)


class _Ctx:
    def __init__(self, fixtures: Path, caps: Caps):
        self.fixtures = fixtures
        self.caps = caps
        self._cache: dict[str, SequenceFixture | Exception] = {}

    def fixture(self, ident: str) -> SequenceFixture:
        if ident not in self._cache:
            try:
                self._cache[ident] = load_fixture(ident, self.fixtures)
            except (OSError, FixtureError) as exc:
                self._cache[ident] = exc
        got = self._cache[ident]
        if isinstance(got, Exception):
            raise got
        return got

    def series(self, P: po.Poset):
        return ehr_series(P, self.caps)


def compare(name: str, expected: str, got: str, want: Sequence[int], have: Sequence[int]) -> Check:
    if len(want) != len(have):
        return Check(name, expected, got, min(len(want), len(have)),
                     f"length {len(have)} vs {len(want)}")
    for i, (a, b) in enumerate(zip(want, have)):
        if a != b:
            return Check(name, expected, got, i, f"first mismatch at {i}: expected {a}, got {b}")
    return Check(name, expected, got)


def against_fixture(ctx: _Ctx, name: str, got: str, ident: str, start: int, have: Sequence[int]) -> Check:
    """Compare ``have[i]`` with the fixture term at OEIS index ``start + i``."""
    expected = f"{ident}[{start}..{start + len(have) - 1}]"
    try:
        fx = ctx.fixture(ident)
    except (OSError, FixtureError) as exc:
        return Check(name, expected, got, 0, f"missing fixture: {exc}")
    if start < fx.offset or start + len(have) - 1 > fx.last_index:
        return Check(name, expected, got, 0,
                     f"fixture {ident} covers {fx.offset}..{fx.last_index} only")
    want = [fx[start + i] for i in range(len(have))]
    return compare(name, expected, got, want, have)


def _tri_start(offset: int, first_row: int, n: int, row_len: Callable[[int], int]) -> int:
    return offset + sum(row_len(r) for r in range(first_row, n))


# -- suites -----------------------------------------------------------------


def suite_narayana(ctx: _Ctx) -> Iterable[Check]:
    for k in range(1, 9):
        row = list(cf.narayana_hstar(k).terms)
        yield against_fixture(ctx, f"narayana/row{k:02d}", f"narayana_hstar({k})", "A001263",
                              _tri_start(1, 1, k, lambda r: r), row)
    for k in range(1, 6):
        s = ctx.series(po.ferrers((k, k)))
        yield compare(f"narayana/engine{k:02d}", f"narayana_hstar({k})", f"engine ferrers(({k},{k}))",
                      list(cf.narayana_hstar(k).terms), list(s.hstar.terms))


BOXES_TABLE4 = [((2, 2), "A002415", 2), ((3, 3), "A006542", 4), ((3, 3, 3), "A047819", 0)]


def suite_boxes(ctx: _Ctx) -> Iterable[Check]:
    for shape, ident, start in BOXES_TABLE4:
        coeffs = ctx.series(po.ferrers(shape)).coefficients(15)
        label = "x".join(map(str, shape))
        yield against_fixture(ctx, f"boxes/{label}", f"engine ferrers({shape})", ident, start, coeffs)
        t, k = len(shape), shape[0]
        yield compare(f"boxes/{label}-macmahon", f"engine ferrers({shape})", f"macmahon_box({t},{k},n)",
                      coeffs, [cf.macmahon_box(t, k, n) for n in range(15)])


def suite_a140934(ctx: _Ctx) -> Iterable[Check]:
    terms = 20
    caps = ctx.caps.with_overrides(max_elements=max(ctx.caps.max_elements, 22))
    s = ehr_series(po.ferrers((11, 11)), caps)
    yield against_fixture(ctx, "A140934/engine", "engine ferrers((11,11))", "A140934", 0, s.coefficients(terms))
    yield against_fixture(ctx, "A140934/formula", "((n+12)/(12n+12))C(n+11,11)^2", "A140934", 0,
                          [cf.a140934_formula(n) for n in range(terms)])
    yield against_fixture(ctx, "A140934/oblong", "oblong product", "A140934", 0,
                          [cf.a140934_oblong(n) for n in range(terms)])
    yield compare("A140934/hstar", "narayana_hstar(11)", "engine hstar", list(cf.narayana_hstar(11).terms),
                  list(s.hstar.terms))


CATALAN_IDS = [(1, "A000027", 1), (2, "A000330", 1), (3, "A006858", 1)]


def suite_catalan(ctx: _Ctx) -> Iterable[Check]:
    for k, ident, start in CATALAN_IDS:
        yield against_fixture(ctx, f"catalan-hankel/k{k}", f"catalan_hankel({k},n)", ident, start,
                              [cf.catalan_hankel(k, n) for n in range(20)])
    for k in range(1, 5):
        stair = tuple(range(k, 0, -1))
        yield compare(f"catalan-hankel/det{k}", f"ferrers_det({stair},n)", f"catalan_hankel({k},n)",
                      [cf.ferrers_det(stair, n) for n in range(9)], [cf.catalan_hankel(k, n) for n in range(9)])


def suite_multiset(ctx: _Ctx) -> Iterable[Check]:
    for k in range(1, 9):
        row = list(cf.multiset_descent_poly((k, k)).terms)
        yield against_fixture(ctx, f"multiset/kk{k:02d}", f"descents of M=({k},{k})", "A008459",
                              _tri_start(0, 0, k, lambda r: r + 1), row)
    for r in range(1, 9):
        row = list(cf.multiset_descent_poly((1,) * r).terms)
        yield against_fixture(ctx, f"multiset/eulerian{r:02d}", f"descents of M=(1^{r})", "A008292",
                              _tri_start(1, 1, r, lambda m: m), row)


def suite_eulerian2(ctx: _Ctx) -> Iterable[Check]:
    for k in range(1, 7):
        row = list(cf.second_order_eulerian_row(k))
        yield against_fixture(ctx, f"eulerian2/row{k}", f"second_order_eulerian_row({k})", "A008517",
                              _tri_start(1, 1, k, lambda r: r), row)
        ok = cf.gessel_identity_holds(k, terms=15)
        yield Check(f"eulerian2/gessel{k}", "sum S(n+k,n)x^n", "T(k,.)/(1-x)^(2k+1)",
                    None if ok else 0, "" if ok else "series identity fails")
    for k in range(1, 6):
        s = ctx.series(po.bar_kk(k))
        yield compare(f"eulerian2/engine{k}", f"second_order_eulerian_row({k})", f"engine bar_kk({k})",
                      list(cf.second_order_eulerian_row(k)), list(s.hstar.terms))


STIRLING_IDS = [(1, "A000217"), (2, "A001296"), (3, "A001297"), (4, "A001298")]


def suite_stirling(ctx: _Ctx) -> Iterable[Check]:
    for k, ident in STIRLING_IDS:
        coeffs = ctx.series(po.bar_kk(k)).coefficients(15)
        yield against_fixture(ctx, f"stirling-bar/k{k}", f"engine bar_kk({k})", ident, 1, coeffs)
        yield compare(f"stirling-bar/k{k}-formula", f"stirling_bar({k},n)", f"engine bar_kk({k})",
                      [cf.stirling_bar(k, n) for n in range(15)], coeffs)


def _grid_poset(m: int) -> po.Poset:
    one = po.chain(1)
    return po.pow_oplus(po.ordinal_sum(one, po.direct_sum(one, one)), m)


def suite_grid(ctx: _Ctx) -> Iterable[Check]:
    yield against_fixture(ctx, "grid/m1", "grid_square_count(1,n)", "A000330", 1,
                          [cf.grid_square_count(1, n) for n in range(20)])
    for m in range(1, 6):
        coeffs = ctx.series(_grid_poset(m)).coefficients(11)
        yield compare(f"grid/m{m}-engine", "engine", f"grid_square_count({m},n)", coeffs,
                      [cf.grid_square_count(m, n) for n in range(11)])


def suite_mk(ctx: _Ctx) -> Iterable[Check]:
    for k in range(7):
        yield against_fixture(ctx, f"mk/k{k}", f"mk_formula({k},n)", "A111910", 10 * k,
                              [cf.mk_formula(k, n) for n in range(10)])
    for k in range(1, 4):
        coeffs = ctx.series(po.direct_product(po.chain(k), po.v_poset())).coefficients(10)
        yield against_fixture(ctx, f"mk/k{k}-engine", f"engine chain({k})*v", "A111910", 10 * k, coeffs)


def suite_hexagon(ctx: _Ctx) -> Iterable[Check]:
    for k in range(1, 7):
        yield against_fixture(ctx, f"hexagon/k{k}", f"hexagon_tilings({k},n)", "A103905", 10 * (k - 1),
                              [cf.hexagon_tilings(k, n) for n in range(10)])
    for k in range(1, 4):
        coeffs = ctx.series(po.ferrers((k,) * k)).coefficients(10)
        yield against_fixture(ctx, f"hexagon/k{k}-engine", f"engine ferrers(({k}^{k}))", "A103905",
                              10 * (k - 1), coeffs)


# x * Ehr(I_1 + A_r + I_1) against sequences with their own offsets
SANDWICH_IDS = [(1, "A000292", 1), (2, "A002415", 2), (6, "A101093", 1)]


def suite_sandwich(ctx: _Ctx) -> Iterable[Check]:
    for r, ident, start in SANDWICH_IDS:
        s = cf.sandwich_series((1,) * r)
        yield against_fixture(ctx, f"sandwich/r{r}", f"sandwich_series(1^{r})", ident, start, s.coefficients(20))
    for r in range(1, 7):
        one = po.chain(1)
        P = po.ordinal_sum(po.ordinal_sum(one, po.antichain(r)), one)
        yield compare(f"sandwich/r{r}-engine", f"sandwich_series(1^{r})", "engine",
                      cf.sandwich_series((1,) * r).coefficients(12), ctx.series(P).coefficients(12))


SUITES: dict[str, Callable[[_Ctx], Iterable[Check]]] = {
    "narayana-A001263": suite_narayana,
    "boxes-table4": suite_boxes,
    "A140934": suite_a140934,
    "catalan-hankel": suite_catalan,
    "multiset-A008459": suite_multiset,
    "eulerian2-A008517": suite_eulerian2,
    "stirling-bar": suite_stirling,
    "grid-A000330": suite_grid,
    "mk-A111910": suite_mk,
    "hexagon-A103905": suite_hexagon,
    "sandwich-A101093": suite_sandwich,
}


def run_suite(name: str, fixtures: str | Path | None = None, caps: Caps = DEFAULT_CAPS) -> VerificationReport:
    if name != "all" and name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(['all', *SUITES])}")
    ctx = _Ctx(Path(fixtures) if fixtures else default_dir(), caps.with_overrides(workers=1))
    names = list(SUITES) if name == "all" else [name]
    report = VerificationReport()
    if caps.workers > 1 and len(names) > 1:
        with ThreadPoolExecutor(max_workers=caps.workers) as pool:
            for checks in pool.map(lambda n: list(SUITES[n](ctx)), names):
                report.checks.extend(checks)
    else:
        for n in names:
            report.checks.extend(SUITES[n](ctx))
    report.checks.sort(key=lambda c: c.name)
    return report
