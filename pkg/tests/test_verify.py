import pytest

from bohr_lab.functionals import FunctionalKind
from bohr_lab.reference import M_GRID, REFERENCE_RADII
from bohr_lab.verify import SCAN_SLACK, inequality_scan, sharpness_check, table_check

H1, H2, H3, H4 = FunctionalKind


@pytest.mark.parametrize("kind,m,delta,root", [
    (H1, 0.5, 1e-3, 0.267404),
    (H2, 1.0, 1e-3, 0.153247),
    (H4, 0.1, 1e-4, 0.802472),
])
def test_sharpness_examples(kind, m, delta, root):
    rep = sharpness_check(kind, m, delta)
    assert rep.holds_below and rep.fails_above and rep.passed
    assert abs(rep.root - root) < 1e-6


def test_sharpness_delta_validation():
    with pytest.raises(ValueError):
        sharpness_check(H1, 1.25, 0.5)


@pytest.mark.parametrize("kind", list(FunctionalKind))
def test_sharpness_grid(kind):
    for m in M_GRID:
        assert sharpness_check(kind, m, 1e-4).passed


def test_scan_examples():
    rep = inequality_scan(H1, 0.3, 1000)
    assert rep.passed and rep.max_excess <= 1e-12
    assert abs(rep.root - 0.343722) < 1e-6
    rep = inequality_scan(H3, 0.7, 100)
    assert rep.passed
    assert rep.argmax == rep.root
    assert abs(rep.root - 0.18866) < 1e-5


def test_scan_equality_at_root():
    rep = inequality_scan(H2, 0.9, 10)
    assert rep.argmax == rep.root
    assert abs(rep.max_excess) <= SCAN_SLACK


def test_scan_validation():
    with pytest.raises(ValueError):
        inequality_scan(H1, 0.5, 5)


@pytest.mark.parametrize("kind", list(FunctionalKind))
def test_scan_grid(kind):
    for m in M_GRID:
        assert inequality_scan(kind, m, 1000).passed


@pytest.mark.parametrize("kind", [H1, H3])
def test_full_tables(kind):
    rep = table_check(kind, REFERENCE_RADII[kind], 1e-4)
    assert len(rep.rows) == 11
    assert rep.passed
    assert rep.max_deviation < 1e-6


def test_corrected_typo_row():
    assert table_check(H2, [(0.5, 0.347564)], 1e-4).passed


@pytest.mark.parametrize("kind", [H2, H4])
def test_tables_below_125(kind):
    rows = [(m, r) for m, r in REFERENCE_RADII[kind] if m != 1.25]
    rep = table_check(kind, rows, 1e-4)
    assert rep.passed and rep.max_deviation < 1e-6


@pytest.mark.parametrize("kind", [H2, H4])
def test_last_row_is_the_m_124_root(kind):
    # the printed M = 1.25 entry is reproduced by M = 1.24, not by 1.25
    ((_, printed),) = [(m, r) for m, r in REFERENCE_RADII[kind] if m == 1.25]
    assert table_check(kind, [(1.24, printed)], 1e-6).passed
    rep = table_check(kind, [(1.25, printed)], 1e-4)
    assert not rep.passed
    assert rep.failures[0].deviation > 5e-3
