import json
import math

import numpy as np
import pytest

from casimirgrav.cavity import CavityConfig, energy_density, energy_per_area, pressure
from casimirgrav.errors import DomainError
from casimirgrav.figures import FigureSpec, figure_series, write_csv, write_json
from casimirgrav.weakfield import WeakField, delta_force_per_area


def _loglog_slope(x, y):
    return np.polyfit(np.log(x), np.log(np.abs(y)), 1)[0]


def test_figure_1_2_3_series():
    for fig_id, column, slope in ((1, "energy_density", -4.0), (2, "pressure", -4.0),
                                  (3, "energy_per_area", -3.0)):
        data = figure_series(FigureSpec(fig_id))
        assert data.columns == ["L", column]
        assert data.rows.shape == (200, 2)
        L = data.rows[:, 0]
        assert np.all(np.diff(L) > 0)
        assert np.all(data.rows[:, 1] < 0)
        assert np.all(np.diff(data.rows[:, 1]) > 0)  # rises toward zero
        assert _loglog_slope(L, data.rows[:, 1]) == pytest.approx(slope, abs=1e-6)


def test_figure_4_columns():
    data = figure_series(FigureSpec(4))
    assert data.columns == ["L", "delta_force[A=1]", "delta_force[A=2]", "delta_force[A=4]"]
    L = data.rows[:, 0]
    for j, area in enumerate((1.0, 2.0, 4.0), start=1):
        assert _loglog_slope(L, data.rows[:, j]) == pytest.approx(-3.0, abs=1e-6)
        expected = [area * delta_force_per_area(WeakField(1.0), CavityConfig(l, 2)) for l in L]
        np.testing.assert_allclose(data.rows[:, j], expected, rtol=1e-14)


def test_figure_5_exact_linearity():
    data = figure_series(FigureSpec(5))
    assert data.columns[0] == "A"
    A = data.rows[:, 0]
    for j, L in enumerate((0.5, 1.0, 2.0), start=1):
        slope = delta_force_per_area(WeakField(1.0), CavityConfig(L, 2))
        np.testing.assert_allclose(data.rows[:, j], A * slope, rtol=1e-15)
        fit = np.polyfit(A, data.rows[:, j], 1)
        assert fit[0] == pytest.approx(slope, rel=1e-12)
        assert abs(fit[1]) <= 1e-15 * abs(slope)


def test_figure_6_sign_relation():
    data = figure_series(FigureSpec(6))
    assert data.columns == ["L", "delta_force_per_area", "fermi_force_per_area"]
    np.testing.assert_array_equal(data.rows[:, 1], -data.rows[:, 2])


def test_figure_spec_validation():
    with pytest.raises(DomainError):
        FigureSpec(0)
    with pytest.raises(DomainError):
        FigureSpec(7)
    with pytest.raises(DomainError):
        FigureSpec(1, L_min=2.0, L_max=1.0)
    with pytest.raises(DomainError):
        FigureSpec(1, points=1)
    with pytest.raises(DomainError):
        FigureSpec(5, A_list=(1.0, -2.0))


def test_csv_round_trip(tmp_path):
    path = tmp_path / "fig2.csv"
    write_csv(figure_series(FigureSpec(2, points=40)), str(path))
    lines = path.read_text().splitlines()
    metadata = [ln for ln in lines if ln.startswith("#")]
    body = [ln for ln in lines if not ln.startswith("#")]
    assert metadata and body[0] == "L,pressure"
    assert len(body) == 41
    for line in body[1:]:
        l_text, p_text = line.split(",")
        # at least 15 significant digits per cell
        assert len(l_text.split("e")[0].replace(".", "").replace("-", "")) >= 15
        recomputed = pressure(CavityConfig(float(l_text), 2))
        assert float(p_text) == pytest.approx(recomputed, rel=1e-12)


def test_json_mirrors_columns(tmp_path):
    path = tmp_path / "fig6.json"
    data = figure_series(FigureSpec(6, points=10))
    write_json(data, str(path))
    rows = json.loads(path.read_text())
    assert isinstance(rows, list) and len(rows) == 10
    assert list(rows[0].keys()) == data.columns
    for row, values in zip(rows, data.rows):
        for col, v in zip(data.columns, values):
            assert row[col] == pytest.approx(float(v), rel=1e-15)
