import json
import math

import pytest

from mixedphase.sweep import (
    BLOCH_COLUMNS,
    SU2_COLUMNS,
    BlochRow,
    ConfigError,
    Su2Row,
    parse_config,
    render_csv,
    render_json,
    run_sweep,
)

MINIMAL_SU2 = {
    "model": "su2", "start": 0.0, "end": 1.0, "steps": 5,
    "omega1": 1.0, "omega2": 1.0,
}

MINIMAL_BLOCH = {
    "model": "bloch", "start": 0.0, "end": 2 * math.pi, "steps": 9, "r": 0.5,
}


class TestParseConfig:
    def test_su2_defaults_echoed(self):
        cfg = parse_config(MINIMAL_SU2)
        assert cfg.model == "su2"
        assert cfg.sweep == "t"
        assert cfg.fixed["phi"] == 0.0
        assert cfg.fixed["beta"] == 1.0
        assert cfg.fixed["omega_field"] == 1.0
        assert cfg.fmt == "csv"
        assert cfg.output == "-"
        assert cfg.degeneracy_tol == 1e-12

    def test_bloch_defaults(self):
        cfg = parse_config(MINIMAL_BLOCH)
        assert cfg.sweep == "omega_solid"
        assert cfg.fixed == {"r": 0.5}

    def test_negative_frequency_named(self):
        with pytest.raises(ConfigError, match=r"omega1.*> 0"):
            parse_config({**MINIMAL_SU2, "omega1": -1.0})

    def test_flag_overrides_file(self):
        cfg = parse_config({**MINIMAL_SU2, "phi": 0.2}, {"phi": 0.5})
        assert cfg.fixed["phi"] == 0.5

    def test_unknown_key_named(self):
        with pytest.raises(ConfigError, match="omega3"):
            parse_config({**MINIMAL_SU2, "omega3": 1.0})

    def test_bloch_rejects_su2_keys(self):
        with pytest.raises(ConfigError, match="omega1"):
            parse_config({**MINIMAL_BLOCH, "omega1": 1.0})

    def test_missing_keys_listed_at_once(self):
        with pytest.raises(ConfigError, match=r"missing required keys:.*end.*omega1.*omega2"):
            parse_config({"model": "su2", "start": 0.0, "steps": 3})

    def test_missing_model(self):
        with pytest.raises(ConfigError, match="model"):
            parse_config({"start": 0.0})

    def test_bad_model_named(self):
        with pytest.raises(ConfigError, match="model"):
            parse_config({"model": "su3"})

    def test_steps_must_be_positive_integer(self):
        with pytest.raises(ConfigError, match=r"steps.*>= 1"):
            parse_config({**MINIMAL_SU2, "steps": 0})
        with pytest.raises(ConfigError, match="integer"):
            parse_config({**MINIMAL_SU2, "steps": 2.5})

    def test_start_end_ordering(self):
        with pytest.raises(ConfigError, match="start <= end"):
            parse_config({**MINIMAL_SU2, "start": 2.0, "end": 1.0})

    def test_swept_range_obeys_parameter_constraint(self):
        bad = {**MINIMAL_SU2, "sweep": "omega1", "start": 0.0, "end": 1.0, "t": 0.5,
               "omega1": None}
        bad.pop("omega1")
        with pytest.raises(ConfigError, match=r"start.*omega1 > 0"):
            parse_config(bad)

    def test_sweeping_non_time_requires_t(self):
        bad = dict(MINIMAL_SU2)
        bad["sweep"] = "omega1"
        bad["start"] = 0.5
        bad.pop("omega1")
        with pytest.raises(ConfigError, match="missing required keys: t"):
            parse_config(bad)

    def test_unknown_sweep_param(self):
        with pytest.raises(ConfigError, match="sweep"):
            parse_config({**MINIMAL_SU2, "sweep": "gamma"})

    def test_bad_format(self):
        with pytest.raises(ConfigError, match="format"):
            parse_config({**MINIMAL_SU2, "format": "xml"})

    def test_r_range_enforced(self):
        with pytest.raises(ConfigError, match=r"r.*\[0, 1\]"):
            parse_config({**MINIMAL_BLOCH, "r": 1.5})


class TestRunSweep:
    def test_symmetric_weights_phase_is_zero_or_pi(self):
        # beta = 0 makes w1 = w2; the interference sum is then a real
        # multiple of a, so any defined phase is 0 (positive) or pi
        # (negative); nodes come out undefined
        cfg = parse_config({
            "model": "su2", "start": 0.0, "end": 2 * math.pi, "steps": 41,
            "omega1": 1.0, "omega2": 1.0, "beta": 0.0, "phi": 0.0,
        })
        rows = run_sweep(cfg)
        assert len(rows) == 41
        for row in rows:
            if row.defined:
                assert abs(row.phase) <= 1e-12 or abs(abs(row.phase) - math.pi) <= 1e-12

    def test_thermal_row_values(self):
        # Oracle values at omega_field*beta = 2: w1 = 1/(1 + e^-2).
        cfg = parse_config({
            "model": "su2", "start": 0.0, "end": 1.0, "steps": 2,
            "omega1": 1.0, "omega2": 1.0, "beta": 2.0, "omega_field": 1.0,
        })
        row = run_sweep(cfg)[0]
        assert isinstance(row, Su2Row)
        assert row.t == 0.0
        assert row.a == pytest.approx(1 / math.sqrt(2), abs=1e-15)
        assert row.b == pytest.approx(1 / math.sqrt(2), abs=1e-15)
        assert row.w1 == pytest.approx(0.8807970779778823, abs=1e-15)
        assert row.w2 == pytest.approx(0.11920292202211755, abs=1e-15)
        assert row.res1_mag <= 1e-7 and row.res2_mag <= 1e-7

    def test_bloch_pure_state_phase_column(self):
        cfg = parse_config({
            "model": "bloch", "start": 0.0, "end": 4 * math.pi, "steps": 33, "r": 1.0,
        })
        rows = run_sweep(cfg)
        for row in rows:
            assert isinstance(row, BlochRow)
            assert row.defined
            expected = math.remainder(-row.omega_solid / 2, math.tau)
            assert abs(math.remainder(row.phase - expected, math.tau)) <= 1e-12

    def test_rows_ascending_in_swept_value(self):
        cfg = parse_config({**MINIMAL_SU2, "steps": 7})
        values = [row.t for row in run_sweep(cfg)]
        assert values == sorted(values)
        assert values[0] == 0.0
        assert values[-1] == 1.0

    def test_single_step_grid(self):
        cfg = parse_config({**MINIMAL_SU2, "steps": 1})
        rows = run_sweep(cfg)
        assert len(rows) == 1
        assert rows[0].t == 0.0


class TestEmit:
    def test_header_only_csv(self):
        assert render_csv([], "su2") == ",".join(SU2_COLUMNS) + "\n"
        assert render_csv([], "bloch") == ",".join(BLOCH_COLUMNS) + "\n"

    def test_single_bloch_row(self):
        row = BlochRow(omega_solid=0.0, r=0.5, visibility=1.0, phase=0.0, defined=True)
        assert render_csv([row], "bloch").splitlines()[1] == "0,0.5,1,0,true"

    def test_undefined_phase_renders_empty(self):
        row = BlochRow(omega_solid=math.pi, r=0.0, visibility=0.0, phase=None, defined=False)
        assert render_csv([row], "bloch").splitlines()[1] == "3.1415926535897931,0,0,,false"

    def test_json_round_trip_bit_exact(self):
        cfg = parse_config({
            "model": "su2", "start": 0.0, "end": 7.3, "steps": 11,
            "omega1": 1.7, "omega2": 0.3, "phi": -2.0, "beta": 1.3,
        })
        rows = run_sweep(cfg)
        parsed = json.loads(render_json(rows, "su2"))
        rebuilt = [Su2Row(**obj) for obj in parsed]
        assert rebuilt == rows

    def test_csv_round_trip_bit_exact(self):
        cfg = parse_config({
            "model": "bloch", "start": -4 * math.pi, "end": 4 * math.pi, "steps": 17,
            "r": 0.77,
        })
        rows = run_sweep(cfg)
        lines = render_csv(rows, "bloch").splitlines()
        rebuilt = []
        for line in lines[1:]:
            omega_solid, r, visibility, phase, defined = line.split(",")
            rebuilt.append(BlochRow(
                omega_solid=float(omega_solid), r=float(r), visibility=float(visibility),
                phase=float(phase) if phase else None, defined=defined == "true",
            ))
        assert rebuilt == rows

    def test_unwritable_destination_names_path(self, tmp_path):
        from mixedphase.sweep import emit
        target = str(tmp_path / "no" / "such" / "dir" / "out.csv")
        with pytest.raises(ConfigError, match="out.csv"):
            emit([], "csv", target, "bloch")
