import json

import pytest
from click.testing import CliRunner

from corpus import CORPUS
from kashaev_cli import cli
from laurent import LaurentPoly


@pytest.fixture
def runner():
    return CliRunner(mix_stderr=False)


def test_info(runner):
    result = runner.invoke(cli, ["info", "clasp_kink"])
    assert result.exit_code == 0, result.stderr
    payload = json.loads(result.stdout)
    assert payload["crossings"] == 5
    assert payload["regions"] == 7
    assert payload["w_m"] == -1
    assert payload["linking_numbers"] == [[0, 2], [2, 0]]


def test_signature_at_minus_one(runner):
    result = runner.invoke(cli, ["signature", CORPUS["clasp_kink"].path, "--theta", "3.14159265,3.14159265"])
    assert result.exit_code == 0, result.stderr
    payload = json.loads(result.stdout)
    assert (payload["sigma"], payload["eta"]) == (-1, 0)
    assert payload["inertia"]["n_pos"] == 1


def test_signature_with_ldl(runner):
    result = runner.invoke(cli, ["signature", "trefoil_right", "--theta", "3.14159265", "--method", "ldl"])
    assert result.exit_code == 0, result.stderr
    assert json.loads(result.stdout)["sigma"] == -2


def test_grid_to_stdout_and_file(runner, tmp_path):
    result = runner.invoke(cli, ["grid", "hopf", "--n", "2"])
    assert result.exit_code == 0, result.stderr
    lines = result.stdout.strip().splitlines()
    assert lines[0] == "theta1,theta2,sigma,eta,near_degenerate"
    assert len(lines) == 5

    out = tmp_path / "grid.csv"
    result = runner.invoke(cli, ["grid", "trefoil_right", "--n", "4", "--out", str(out)])
    assert result.exit_code == 0, result.stderr
    assert len(out.read_text(encoding="utf-8").splitlines()) == 5


@pytest.mark.parametrize("args", [
    ["signature", "clasp_kink"],
    ["grid", "hopf", "--n", "0"],
    ["grid", "hopf", "--jobs", "0"],
    ["signature", "clasp_kink", "--theta", "1,1", "--tol", "-1"],
    ["dump-matrix", "clasp_kink", "--which", "S"],
    ["info"],
    ["transpose", "hopf"],
    ["--no-such-flag", "info", "hopf"],
])
def test_usage_errors_exit_with_one(runner, args):
    result = runner.invoke(cli, args)
    assert result.exit_code == 1
    payload = json.loads(result.stderr.strip().splitlines()[-1])
    assert payload["error"] == "usage"
    assert payload["exit_code"] == 1


def test_missing_theta_names_the_option(runner):
    result = runner.invoke(cli, ["signature", "clasp_kink"])
    assert "--theta" in json.loads(result.stderr.strip().splitlines()[-1])["message"]


@pytest.mark.parametrize("env", [{"KASHAEV_TOL": "abc"}, {"KASHAEV_TOL": "-1e-9"}, {"KASHAEV_JOBS": "many"}])
def test_bad_environment_is_a_validation_error(runner, env):
    command = ["grid", "hopf", "--n", "2"] if "KASHAEV_JOBS" in env else ["signature", "hopf", "--theta", "1,1"]
    result = runner.invoke(cli, command, env=env)
    assert result.exit_code == 1
    payload = json.loads(result.stderr.strip().splitlines()[-1])
    assert payload["error"] == "invalid_configuration"


def test_help_still_exits_cleanly(runner):
    result = runner.invoke(cli, ["grid", "--help"])
    assert result.exit_code == 0
    assert "--n" in result.stdout


def test_alexander(runner):
    result = runner.invoke(cli, ["alexander", "clasp_kink"])
    assert result.exit_code == 0, result.stderr
    payload = json.loads(result.stdout)
    assert payload["consistency_ok"] is True
    assert payload["num_colors"] == 2
    assert payload["alexander"] == "t1^(1/2)*t2^(1/2) + t1^(-1/2)*t2^(-1/2)"
    assert LaurentPoly.from_json(2, payload["alexander_terms"]) == LaurentPoly.parse(payload["alexander"], 2)
    assert payload["alexander_terms"][0] == {"exponents": [1, 1], "coeff": "1"}


def test_dump_matrices(runner):
    result = runner.invoke(cli, ["dump-matrix", "clasp_kink", "--which", "K"])
    assert result.exit_code == 0, result.stderr
    assert json.loads(result.stdout)["kind"] == "K"

    result = runner.invoke(cli, ["dump-matrix", "clasp_kink", "--which", "tau", "--theta", "3.14159265,3.14159265",
                                 "--reduced"])
    assert result.exit_code == 0, result.stderr
    payload = json.loads(result.stdout)
    assert payload["region_order"] == [0, 1, 2, 4, 5]
    assert len(payload["entries"]) == 5

    result = runner.invoke(cli, ["dump-matrix", "trefoil_right", "--which", "tau-sym"])
    assert result.exit_code == 0, result.stderr
    assert len(json.loads(result.stdout)["entries"]) == 5


def test_dump_tau_needs_a_point(runner):
    result = runner.invoke(cli, ["dump-matrix", "clasp_kink", "--which", "tau"])
    assert result.exit_code == 1
    assert json.loads(result.stderr.strip().splitlines()[-1])["error"] == "invalid_point"


def test_xi(runner):
    result = runner.invoke(cli, ["xi", "trefoil_right"])
    assert result.exit_code == 0, result.stderr
    assert json.loads(result.stdout) == {"xi": -2}


def test_inline_pd_and_mark(runner):
    result = runner.invoke(cli, ["info", "X[2,4,3,1] X[4,2,1,3] colors: 1=1, 4=1, 2=2, 3=2", "--mark", "4"])
    assert result.exit_code == 0, result.stderr
    assert json.loads(result.stdout)["mark"] == 4


@pytest.mark.parametrize("args, kind", [
    (["info", "X[1,2,3]"], "pd_syntax"),
    (["signature", "clasp_kink", "--theta", "1.0"], "variable_mismatch"),
    (["signature", "clasp_kink", "--theta", "0,1"], "invalid_point"),
    (["info", "hopf", "--mark", "2"], "invalid_mark"),
    (["alexander", "split_unknots"], "disconnected_diagram"),
])
def test_validation_errors_exit_with_one(runner, args, kind):
    result = runner.invoke(cli, args)
    assert result.exit_code == 1
    payload = json.loads(result.stderr.strip().splitlines()[-1])
    assert payload["error"] == kind
    assert payload["exit_code"] == 1


def test_json_logging(runner):
    result = runner.invoke(cli, ["--log-json", "--verbose", "alexander", "hopf"])
    assert result.exit_code == 0, result.stderr
    assert json.loads(result.stdout)["alexander"] == "1"


def test_verify_golden_suite(runner):
    result = runner.invoke(cli, ["verify", "--suite", "golden", "--suite", "classical"])
    assert result.exit_code == 0, result.stdout
    assert "checks passed" in result.stdout
    assert "FAIL" not in result.stdout
