import json

import pytest

from lommelint.bounds import BoundKind
from lommelint.harness import (
    GridConfig,
    TableSpec,
    asymptotic_suite,
    cell_tolerance,
    compare_table,
    lower_relative_error,
    reproduce_table,
    run_grid_verification,
    table_cell,
    table_csv,
)
from lommelint.tables import GOLDEN, TABLE_ROWS, TABLE_XS

SMALL = dict(mus=(0.0, 1.0, 3.0), nus=(-0.2, 0.5, 1.0), betas=(0.25, 0.75), xs=(0.5, 5.0, 25.0))


def test_config_validation():
    with pytest.raises(ValueError):
        GridConfig(mus=())
    with pytest.raises(ValueError):
        GridConfig(tol=0.0)
    with pytest.raises(ValueError):
        GridConfig(kinds=("9.9",))
    assert GridConfig(kinds=("2.9",)).selected_kinds() == (BoundKind.LB_SERIES,)


def test_small_grid_has_no_violations():
    report = run_grid_verification(GridConfig(**SMALL))
    assert report.ok
    assert report.summary["cases"] > 100
    assert all(c["in_domain"] for c in report.cases)


def test_report_is_deterministic_and_parallel_safe():
    a = run_grid_verification(GridConfig(**SMALL)).to_json()
    b = run_grid_verification(GridConfig(**SMALL)).to_json()
    c = run_grid_verification(GridConfig(**SMALL, workers=2)).to_json()
    assert a == b == c
    assert json.loads(a)["summary"]["violations"] == 0


def test_keep_out_of_domain_records():
    report = run_grid_verification(GridConfig(**SMALL, keep_out_of_domain=True))
    assert any(not c["in_domain"] for c in report.cases)
    csv_text = report.to_csv()
    assert csv_text.splitlines()[0].startswith("beta,bound")


def test_table_layout():
    assert len(TABLE_ROWS) == 18 and len(TABLE_XS) == 7
    for table in GOLDEN.values():
        assert set(table) == set(TABLE_ROWS)
    t = TableSpec(1)
    matrix = [[0.0] * 7 for _ in TABLE_ROWS]
    header = table_csv(t, matrix).splitlines()[0]
    assert header == "mu,nu,beta,x=0.5,x=5,x=10,x=15,x=25,x=50,x=100"
    with pytest.raises(ValueError):
        TableSpec(3)


def test_table_anchor_cells():
    assert table_cell(1, 0.5, 1.0, 0.25, 0.5) == pytest.approx(0.2280, abs=6e-4)
    assert table_cell(1, 9.5, 10.0, 0.5, 25.0) == pytest.approx(0.0580, abs=6e-4)
    assert table_cell(2, 0.5, 1.0, 0.25, 0.5) == pytest.approx(8.1497, rel=1e-3)
    assert table_cell(2, 15.0, 10.0, 0.5, 0.5) == pytest.approx(106.0445, rel=1e-3)


def test_cell_tolerance_rule():
    assert cell_tolerance(1, 0.2) == 6e-4
    assert cell_tolerance(2, 0.5) == 6e-4
    assert cell_tolerance(2, 10.0) == pytest.approx(1e-2)


def test_compare_table_records():
    t = TableSpec(2)
    cells = compare_table(t, reproduce_table(t))
    assert len(cells) == 126
    assert {"computed", "published", "tol", "passed"} <= set(cells[0])


def test_lower_relative_error_small_x_limit():
    assert lower_relative_error(0.5, 1.0, 0.5, 1e-3) == pytest.approx(1 / 4.5, rel=1e-2)


def test_asymptotic_suite_structure():
    report = asymptotic_suite()
    names = {c["check"] for c in report.cases}
    assert names == {"large_x_tail", "small_x_lower", "small_x_upper_growth"}
    assert report.summary["checks"] == 12
    assert report.summary["supplementary_failed"] == 0
    for c in report.cases:
        if c["check"] != "large_x_tail":
            assert c["passed"], c
