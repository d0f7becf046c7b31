import pytest

from knchain.cli import main
from knchain.model import closed_lambda_xy


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def parse_rows(text):
    lines = text.strip().split("\n")
    header = lines[0].split(",")
    return header, [line.split(",") for line in lines[1:]]


class TestGround:
    def test_unit_couplings(self, capsys):
        code, out, _ = run_cli(
            capsys, "ground", "--n-sites", "2", "--anisotropy", "xy", "--j", "1", "--w", "1"
        )
        assert code == 0
        header, rows = parse_rows(out)
        assert header == ["quantity", "value"]
        table = dict(rows)
        assert abs(float(table["energy"]) - closed_lambda_xy(1.0, 1.0)) <= 1e-9
        assert table["degeneracy"] == "1"
        assert 0.0 <= float(table["c_tau1_s1"]) <= 1.0
        assert abs(float(table["c_single_tau1"]) - 1.0) <= 1e-9

    def test_ising_decoupled_point(self, capsys):
        code, out, _ = run_cli(
            capsys, "ground", "--n-sites", "2", "--anisotropy", "x", "--j", "0", "--w", "1"
        )
        assert code == 0
        table = dict(parse_rows(out)[1])
        assert table["c_single_tau1"] == "0"

    def test_ising_jump_point(self, capsys):
        code, out, _ = run_cli(
            capsys, "ground", "--n-sites", "2", "--anisotropy", "x", "--j", "0.001", "--w", "1"
        )
        assert code == 0
        table = dict(parse_rows(out)[1])
        assert abs(float(table["c_single_tau1"]) - 1.0) <= 1e-6

    def test_capacity_error_exit_code(self, capsys):
        code, _, err = run_cli(capsys, "ground", "--n-sites", "7")
        assert code == 2
        assert "error" in err


class TestFigure:
    def test_ising_grid_spot_cell(self, capsys):
        code, out, _ = run_cli(
            capsys, "figure", "8", "--axis", "j", "1", "1", "1", "--axis", "w", "1", "1", "1"
        )
        assert code == 0
        header, rows = parse_rows(out)
        assert header == ["j", "w", "value"]
        assert len(rows) == 1
        assert abs(float(rows[0][2]) - 0.894427191) <= 1e-6

    def test_field_response_transition(self, capsys):
        code, out, _ = run_cli(capsys, "figure", "12")
        assert code == 0
        header, rows = parse_rows(out)
        assert header == ["b", "anisotropy", "value"]
        xy = [(float(r[0]), float(r[2])) for r in rows if r[1] == "xy"]
        ising = [(float(r[0]), float(r[2])) for r in rows if r[1] == "x"]
        assert len(xy) == len(ising) == 101
        last_entangled = max(b for b, v in xy if v > 0.5)
        assert abs(last_entangled - 1.707) <= 0.03
        xy_jumps = [abs(b[1] - a[1]) for a, b in zip(xy, xy[1:])]
        ising_jumps = [abs(b[1] - a[1]) for a, b in zip(ising, ising[1:])]
        assert max(xy_jumps) > 0.8  # sharp transition
        assert max(ising_jumps) < 0.3  # analytic decay

    def test_thermal_field_curves(self, capsys):
        code, out, _ = run_cli(capsys, "figure", "13", "--steps", "51")
        assert code == 0
        _, rows = parse_rows(out)
        above = [(float(r[1]), float(r[2])) for r in rows if r[0] == "1.75"]
        assert len(above) == 51
        # slightly above the critical field: nearly zero at the first sample,
        # a clear thermal peak, dead again before the top of the grid
        assert above[0][1] <= 0.05
        assert max(v for _, v in above) > 0.1
        assert above[-1][1] <= 1e-6

    def test_byte_identical_reruns(self, capsys):
        args = ("figure", "6", "--steps", "11")
        _, first, _ = run_cli(capsys, *args)
        _, second, _ = run_cli(capsys, *args)
        assert first == second

    def test_out_file_and_line_endings(self, capsys, tmp_path):
        target = tmp_path / "grid.csv"
        code, out, _ = run_cli(
            capsys, "figure", "8", "--steps", "3", "--out", str(target)
        )
        assert code == 0
        assert out == ""
        data = target.read_bytes()
        assert b"\r" not in data
        assert data.decode().startswith("j,w,value\n")

    def test_plot_renders_png(self, capsys, tmp_path):
        target = tmp_path / "figure10.png"
        code, _, _ = run_cli(
            capsys, "figure", "10", "--steps", "9", "--plot", str(target)
        )
        assert code == 0
        assert target.exists()
        assert target.stat().st_size > 1000

    def test_precision_flag(self, capsys):
        code, out, _ = run_cli(
            capsys,
            "figure", "8",
            "--axis", "j", "1", "1", "1",
            "--axis", "w", "1", "1", "1",
            "--precision", "4",
        )
        assert code == 0
        assert parse_rows(out)[1][0][2] == "0.8944"

    def test_unknown_figure_is_usage_error(self, capsys):
        with pytest.raises(SystemExit) as excinfo:
            main(["figure", "99"])
        assert excinfo.value.code == 1


class TestCriticalField:
    def test_isotropic_unit_couplings(self, capsys):
        code, out, _ = run_cli(capsys, "critical-field", "--j", "1", "--w", "1")
        assert code == 0
        lines = out.strip().split("\n")
        assert lines[0] == "b_value,fidelity_drop,post_single_qubit_concurrence"
        assert lines[-1].startswith("b_c,1.70")

    def test_ising_reports_absent(self, capsys):
        code, out, _ = run_cli(
            capsys, "critical-field", "--j", "1", "--w", "1", "--anisotropy", "x"
        )
        assert code == 0
        assert out.strip().split("\n")[-1] == "b_c,NA"

    def test_homogeneous_scaling(self, capsys):
        _, out_1, _ = run_cli(capsys, "critical-field", "--j", "1", "--w", "1")
        _, out_2, _ = run_cli(capsys, "critical-field", "--j", "2", "--w", "2")
        bc_1 = float(out_1.strip().split("\n")[-1].split(",")[1])
        bc_2 = float(out_2.strip().split("\n")[-1].split(",")[1])
        assert abs(bc_2 - 2.0 * bc_1) <= 2e-2


class TestVerify:
    def test_all_checks_pass(self, capsys):
        code, out, _ = run_cli(capsys, "verify")
        assert code == 0
        lines = out.strip().split("\n")
        assert len(lines) == 3
        assert all("PASS" in line for line in lines)
        assert lines[0].startswith("eq7_energy_grid:")
        assert lines[1].startswith("eq10_cac_grid:")
        assert lines[2].startswith("ckw_random_states: PASS (1000/1000)")


class TestUsageErrors:
    def test_unknown_flag(self):
        with pytest.raises(SystemExit) as excinfo:
            main(["ground", "--frobnicate"])
        assert excinfo.value.code == 1

    def test_missing_subcommand(self):
        with pytest.raises(SystemExit) as excinfo:
            main([])
        assert excinfo.value.code == 1

    def test_invalid_model_value_is_usage_error(self, capsys):
        code, _, err = run_cli(capsys, "ground", "--n-sites", "2", "--w", "-1")
        assert code == 1
        assert "error" in err

    def test_inapplicable_figure_override_is_usage_error(self, capsys):
        code, _, err = run_cli(capsys, "figure", "2", "--j", "1")
        assert code == 1
        assert "does not fix" in err
        code, _, err = run_cli(capsys, "figure", "2", "--axis", "b", "0", "1", "5")
        assert code == 1
        assert "cannot override" in err
