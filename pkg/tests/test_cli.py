import json
import math

import jsonschema
import pytest

from freemeixner.cli import main

PAYLOAD_SCHEMA = {
    "type": "object",
    "required": ["command", "params", "data", "provenance"],
    "properties": {
        "command": {"type": "string"},
        "params": {"type": "object"},
        "data": {"type": "object"},
        "provenance": {
            "type": "object",
            "required": ["identities"],
            "properties": {"identities": {"type": "array"}},
        },
    },
}


def run_json(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    payload = json.loads(out)
    jsonschema.validate(payload, PAYLOAD_SCHEMA)
    return code, payload


class TestMoments:
    def test_exact_values(self, capsys):
        code, payload = run_json(capsys, "moments", "--a", "1", "--b", "1", "--n", "4")
        assert code == 0
        got = [row[1] for row in payload["data"]["rows"]]
        assert got == ["1", "0", "1", "1", "4"]
        assert payload["provenance"]["exact"] is True

    def test_float_mode(self, capsys):
        code, payload = run_json(capsys, "moments", "--a", "0.5", "--b", "1", "--n", "3")
        assert code == 0
        assert payload["provenance"]["exact"] is False
        assert payload["data"]["rows"][3][1] == 0.5

    def test_order_cap(self, capsys):
        assert main(["moments", "--a", "0", "--b", "0", "--n", "25"]) == 2


class TestCumulants:
    def test_catalan_pattern(self, capsys):
        code, payload = run_json(capsys, "cumulants", "--a", "0", "--b", "1", "--n", "8")
        assert code == 0
        got = [row[1] for row in payload["data"]["rows"]]
        assert got == ["0", "1", "0", "1", "0", "2", "0", "5"]

    def test_fifth_cumulant(self, capsys):
        code, payload = run_json(capsys, "cumulants", "--a", "1", "--b", "1", "--n", "5")
        assert payload["data"]["rows"][-1][1] == "4"

    def test_method_agreement(self, capsys):
        _, nc = run_json(capsys, "cumulants", "--a", "2", "--b", "3", "--n", "10")
        _, inv = run_json(
            capsys, "cumulants", "--a", "2", "--b", "3", "--n", "10",
            "--method", "from_moments",
        )
        assert nc["data"]["rows"] == inv["data"]["rows"]

    def test_q_deformed(self, capsys):
        _, q0 = run_json(capsys, "cumulants", "--a", "1", "--b", "2", "--n", "9", "--q", "0")
        _, free = run_json(capsys, "cumulants", "--a", "1", "--b", "2", "--n", "9")
        assert q0["data"]["rows"] == free["data"]["rows"]
        assert q0["provenance"]["identities"] == ["q-deformed-recursion"]

    def test_semicircle_method_domain_error(self, capsys):
        code = main(["cumulants", "--a", "0", "--b", "-1/2", "--n", "6",
                     "--method", "semicircle"])
        assert code == 2


class TestClassify:
    @pytest.mark.parametrize(
        "a,b,label",
        [
            ("0", "0", "Semicircle"),
            ("3", "1", "FreePascal"),
            ("1", "1", "PureFreeMeixner"),
            ("2", "1", "FreeGamma"),
            ("1/2", "-3/10", "FreeBinomial"),
        ],
    )
    def test_labels(self, capsys, a, b, label):
        code, payload = run_json(capsys, "classify", "--a", a, "--b", b)
        assert code == 0
        assert payload["data"]["label"] == label
        assert payload["data"]["predicates"]


class TestDensity:
    def test_semicircle_midpoint(self, capsys):
        code, payload = run_json(
            capsys, "density", "--a", "0", "--b", "0",
            "--xmin", "-2", "--xmax", "2", "--points", "5",
        )
        assert code == 0
        rows = payload["data"]["rows"]
        assert len(rows) == 5
        mid = rows[2]
        assert mid[0] == 0
        assert abs(mid[1] - 1 / math.pi) < 1e-12

    def test_two_point_law_has_no_rows(self, capsys):
        code, payload = run_json(capsys, "density", "--a", "0", "--b", "-1")
        assert code == 0
        assert payload["data"]["rows"] == []
        assert payload["data"]["atoms"] == [[-1.0, 0.5], [1.0, 0.5]]

    def test_grid_outside_support(self, capsys):
        _, payload = run_json(
            capsys, "density", "--a", "0", "--b", "0",
            "--xmin", "5", "--xmax", "6", "--points", "3",
        )
        assert all(row[1] == 0 for row in payload["data"]["rows"])

    def test_points_validation(self, capsys):
        assert main(["density", "--a", "0", "--b", "0", "--points", "1"]) == 2

    def test_csv_header_carries_atoms(self, capsys):
        code = main(["density", "--a", "2", "--b", "0", "--format", "csv"])
        out = capsys.readouterr().out
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "# command: density"
        atom_lines = [ln for ln in lines if ln.startswith("# atom:")]
        assert len(atom_lines) == 1
        assert atom_lines[0].startswith("# atom: -0.5")
        header_idx = lines.index("x,density")
        # atoms never interleave with data rows
        assert all(ln.startswith("#") for ln in lines[:header_idx])


class TestAtoms:
    def test_free_poisson(self, capsys):
        code, payload = run_json(capsys, "atoms", "--a", "2", "--b", "0")
        assert code == 0
        [[loc, weight]] = payload["data"]["atoms"]
        assert abs(loc + 0.5) < 1e-14
        assert abs(weight - 0.75) < 1e-14


class TestConvolvePower:
    def test_t_one_matches_moments(self, capsys):
        _, powered = run_json(
            capsys, "convolve-power", "--a", "1", "--b", "1", "--t", "1", "--n", "6"
        )
        _, plain = run_json(capsys, "moments", "--a", "1", "--b", "1", "--n", "6")
        assert powered["data"]["rows"] == plain["data"]["rows"]

    def test_semicircle_doubling(self, capsys):
        _, payload = run_json(
            capsys, "convolve-power", "--a", "0", "--b", "0", "--t", "2", "--n", "4"
        )
        got = [row[1] for row in payload["data"]["rows"]]
        assert got == ["1", "0", "2", "0", "8"]

    def test_two_point_power_matches_quarter_law(self, capsys):
        _, powered = run_json(
            capsys, "convolve-power", "--a", "2", "--b", "-1", "--t", "4", "--n", "10"
        )
        _, target = run_json(capsys, "moments", "--a", "1", "--b", "-1/4", "--n", "10")
        from fractions import Fraction

        for row_pow, row_tgt in zip(powered["data"]["rows"], target["data"]["rows"]):
            n = row_pow[0]
            scaled = Fraction(1, 2) ** n * Fraction(row_pow[1])
            assert scaled == Fraction(row_tgt[1])

    def test_fractional_time_rejected(self, capsys):
        assert main(["convolve-power", "--a", "0", "--b", "0", "--t", "1/2"]) == 2


class TestLevy:
    def test_parameter_maps(self, capsys):
        code, payload = run_json(
            capsys, "levy", "--eta", "1", "--sigma", "2", "--t", "2", "--n", "6"
        )
        assert code == 0
        a_out, b_out = payload["data"]["marginal_params"]
        assert abs(a_out - 1 / math.sqrt(2)) < 1e-15
        assert b_out == "1"
        assert abs(payload["data"]["dilation"] - math.sqrt(2)) < 1e-15
        # variance of X_t equals t
        assert payload["data"]["rows"][2][1] == "2"

    def test_time_domain(self, capsys):
        assert main(["levy", "--eta", "0", "--sigma", "0", "--t", "0"]) == 2
        assert main(["levy", "--eta", "0", "--sigma", "-1", "--t", "1"]) == 2


class TestTransform:
    def test_cauchy_value(self, capsys):
        code, payload = run_json(
            capsys, "transform", "--a", "0", "--b", "0", "--z", "2j"
        )
        assert code == 0
        re, im = payload["data"]["cauchy"]
        assert abs(re) < 1e-14
        assert abs(im - (1 - math.sqrt(2))) < 1e-14

    def test_r_guard_reported(self, capsys):
        _, payload = run_json(
            capsys, "transform", "--a", "0", "--b", "0", "--z", "2j"
        )
        assert payload["data"]["r"] is None
        assert "radius" in payload["data"]["r_error"]

    def test_r_value_inside_radius(self, capsys):
        _, payload = run_json(
            capsys, "transform", "--a", "0", "--b", "0", "--z", "0.05"
        )
        re, im = payload["data"]["r"]
        assert abs(re - 0.05) < 1e-14 and im == 0

    def test_smoothed_density(self, capsys):
        _, payload = run_json(
            capsys, "transform", "--a", "0", "--b", "0", "--z", "0.0",
            "--eps", "1e-6",
        )
        assert abs(payload["data"]["smoothed_density"] - 1 / math.pi) < 1e-5


class TestVerifyCommand:
    def test_regression_suite_passes(self, capsys):
        code, payload = run_json(
            capsys, "verify", "--suite", "regression",
            "--alpha", "1/2", "--a", "1", "--b", "1", "--n", "8",
        )
        assert code == 0
        assert payload["data"]["all_passed"] is True
        names = {r["identity"] for r in payload["data"]["reports"]}
        assert names == {"linear-regression", "quadratic-variance", "mixed-cumulants"}
        assert all(r["max_residual"] == "0" for r in payload["data"]["reports"])

    def test_recursion_suite(self, capsys):
        code, payload = run_json(
            capsys, "verify", "--suite", "recursion", "--a", "0", "--b", "0", "--n", "12"
        )
        assert code == 0

    def test_levy_suite(self, capsys):
        code, payload = run_json(
            capsys, "verify", "--suite", "levy",
            "--eta", "1", "--sigma", "1", "--s", "1", "--u", "3", "--n", "6",
        )
        assert code == 0

    def test_all_suites(self, capsys):
        code, payload = run_json(
            capsys, "verify", "--suite", "all", "--a", "1", "--b", "1",
        )
        assert code == 0
        assert payload["data"]["all_passed"] is True

    def test_infeasible_split_is_config_error(self, capsys):
        code = main([
            "verify", "--suite", "regression",
            "--alpha", "1/10", "--a", "1", "--b", "-1/5",
        ])
        assert code == 2

    def test_failing_suite_exits_one(self, capsys):
        # impossible float tolerance forces a verification failure
        code, payload = run_json(
            capsys, "verify", "--suite", "orthogonality",
            "--a", "1", "--b", "1", "--eps", "1e-30",
        )
        assert code == 1
        assert payload["data"]["all_passed"] is False


class TestUsageErrors:
    def test_unknown_command(self):
        assert main(["frobnicate"]) == 2

    def test_b_below_minus_one(self, capsys):
        code = main(["moments", "--a", "0", "--b", "-2"])
        assert code == 2
        assert "b must be >= -1" in capsys.readouterr().err

    def test_bad_scalar(self):
        assert main(["moments", "--a", "zebra", "--b", "0"]) == 2
