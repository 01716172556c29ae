import csv
import os
from fractions import Fraction

from analytics import interactive_dashboard as iad
from analytics.metrics import (
    crosscheck_counts,
    export_crosscheck_csv,
    export_spectral_csv,
    laurent_exponent_grid,
)
from analytics.visualization import plot_spectral_table, plot_tower_graph
from characters import induced_from, make_character
from crosscheck import crosscheck_grid
from derivatives import TowerGraph
from spectral import spectral_table


def test_laurent_exponent_grid():
    records = laurent_exponent_grid(4, [Fraction(-4), Fraction(1), Fraction(2)], 4)
    assert len(records) == 15
    at_two = [r for r in records if r["alpha0"] == 2.0]
    # rows above the kernel onset are exact zeros
    assert [r["exponent"] for r in at_two][2:] == [None, None, None]
    assert all(r["agrees"] for r in records)
    assert not next(r for r in records if r["alpha0"] == -4.0)["invertible"]


def test_export_and_generate_minimal_dashboard(tmp_path):
    records = laurent_exponent_grid(3, [Fraction(k, 2) for k in range(-6, 3)], 3)
    result = crosscheck_grid({"grid": "translation", "ns": [3], "alpha_lo": -3, "alpha_hi": 1, "max_den": 1})
    assert crosscheck_counts([result, result])["translation"]["total"] == 10

    summary_path, cells_path = export_crosscheck_csv([result], str(tmp_path / "cc"))
    with open(summary_path, encoding="utf-8") as f:
        rows = list(csv.DictReader(f))
    assert rows == [{"grid": "translation", "total": "5", "passed": "5", "failed": "0"}]
    assert os.path.exists(cells_path)

    table = spectral_table(3, 0, 3)
    spectral_csv = export_spectral_csv(table, str(tmp_path / "spectrum.csv"))
    with open(spectral_csv, encoding="utf-8") as f:
        assert f.readline().startswith("m,pole_order")

    plot_spectral_table(table, str(tmp_path / "spectrum.png"))
    plot_tower_graph(TowerGraph(induced_from("R", 4, 2, make_character("R", 2, nu_exp=2))), str(tmp_path / "tower.png"))
    assert os.path.exists(tmp_path / "spectrum.png")
    assert os.path.exists(tmp_path / "tower.png")

    out = tmp_path / "test_dash.html"
    path = iad.generate_dashboard_html(records, [result], output_file=str(out))
    assert os.path.exists(path)
    html = out.read_text(encoding="utf-8")
    assert "heat-chart" in html and "cc-chart" in html
    # ensure key functions exist
    assert hasattr(iad, "create_exponent_heatmap")
    assert hasattr(iad, "create_invertibility_strip")
    assert hasattr(iad, "create_crosscheck_bars")


def test_dashboard_without_crosscheck(tmp_path):
    out = tmp_path / "spectral_only.html"
    iad.generate_dashboard_html(laurent_exponent_grid(5, [Fraction(1)], 2), output_file=str(out))
    assert "cc-chart" not in out.read_text(encoding="utf-8")
