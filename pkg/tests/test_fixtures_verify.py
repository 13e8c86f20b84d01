import shutil

import pytest

from orderpoly import verify
from orderpoly.fixtures import (
    FixtureError,
    SequenceFixture,
    default_dir,
    format_bfile,
    load_fixture,
    parse_bfile,
    triangle_rows,
)

REQUIRED = ["A000330", "A006542", "A002415", "A001263", "A008459", "A008517", "A140934", "A101093",
            "A103905", "A111910"]


def test_bfile_round_trip():
    fx = SequenceFixture("A000027", 1, (1, 2, 3))
    text = format_bfile(fx, ["a(n) = n"])
    assert text == "# A000027 offset=1\n# a(n) = n\n1 1\n2 2\n3 3\n"
    assert parse_bfile(text, "A000027") == fx
    assert fx[2] == 2 and fx.last_index == 3
    with pytest.raises(IndexError):
        fx[0]


def test_bfile_without_header_uses_first_index():
    assert parse_bfile("5 10\n6 11\n", "A000001").offset == 5


@pytest.mark.parametrize(
    "text",
    ["", "# only comments\n", "0 1\n2 3\n", "0 x\n", "0 1 2\n", "# A000001 offset=3\n0 1\n"],
)
def test_bfile_errors(text):
    with pytest.raises(FixtureError):
        parse_bfile(text, "A000001")


def test_fixture_id_and_values_validated():
    with pytest.raises(FixtureError):
        SequenceFixture("B000001", 0, (1,))
    with pytest.raises(FixtureError):
        SequenceFixture("A00001", 0, (1,))
    with pytest.raises(FixtureError):
        SequenceFixture("A000001", 0, ())


@pytest.mark.parametrize("ident", REQUIRED)
def test_required_fixtures_bundled(ident):
    fx = load_fixture(ident)
    assert fx.id == ident and len(fx.values) >= 10


def test_fixture_spot_values():
    assert load_fixture("A000330").values[:5] == (0, 1, 5, 14, 30)
    assert load_fixture("A140934").values[:5] == (1, 78, 2366, 41405, 496860)
    assert load_fixture("A101093").values[:3] == (1, 66, 860)
    rows = triangle_rows(load_fixture("A008517"), 1, lambda r: r)
    assert rows[4] == [1, 22, 58, 24]
    rows = triangle_rows(load_fixture("A001263"), 1, lambda r: r)
    assert rows[4] == [1, 6, 6, 1]


@pytest.mark.parametrize("suite", sorted(verify.SUITES))
def test_each_suite_passes(suite):
    report = verify.run_suite(suite)
    assert report.ok, report.render()
    assert report.checks


def test_all_suite_deterministic_and_sorted():
    r1 = verify.run_suite("all")
    r2 = verify.run_suite("all", caps=verify.DEFAULT_CAPS.with_overrides(workers=3))
    assert r1.render() == r2.render()
    names = [c.name for c in r1.checks]
    assert names == sorted(names) and len(names) == len(set(names))
    assert r1.render().splitlines()[-1] == f"{len(names)} checks, 0 failed"


def test_missing_fixture_is_failure_not_crash(tmp_path):
    for f in default_dir().glob("*.txt"):
        if f.name != "A001263.txt":
            shutil.copy(f, tmp_path)
    report = verify.run_suite("narayana-A001263", tmp_path)
    assert not report.ok
    assert all("missing fixture" in c.detail for c in report.failures)
    assert any(c.ok for c in report.checks)  # engine-vs-formula checks still ran


def test_corrupted_fixture_reports_first_mismatch(tmp_path):
    for f in default_dir().glob("*.txt"):
        shutil.copy(f, tmp_path)
    path = tmp_path / "A000330.txt"
    path.write_text(path.read_text().replace("\n3 14\n", "\n3 15\n"))
    report = verify.run_suite("grid-A000330", tmp_path)
    (bad,) = report.failures
    assert bad.name == "grid/m1" and bad.mismatch == 2
    assert "expected 15, got 14" in bad.detail


def test_unknown_suite():
    with pytest.raises(KeyError):
        verify.run_suite("nope")
