"""CLI dispatch: payload shapes, exit codes, cache behavior, verify."""

import json

from dessinlink.cli import (
    EXIT_BAD_INPUT,
    EXIT_CAP,
    EXIT_OK,
    EXIT_PRECONDITION,
    EXIT_USAGE,
    run_cli,
)

HOPF_UNSIGNED = "X[1,3,2,4] X[3,1,4,2]"


def run_json(capsys, *argv):
    code = run_cli(list(argv))
    captured = capsys.readouterr()
    payload = json.loads(captured.out) if captured.out else None
    return code, payload, captured.err


# ==========================================================================
# subcommand payloads
# ==========================================================================


def test_det_all_methods(capsys):
    code, payload, _ = run_json(capsys, "det", "--name", "8_21", "--method", "all")
    assert code == EXIT_OK
    assert payload["schema"] == "dessinlink/1"
    assert payload["command"] == "det"
    assert payload["value"] == 15
    assert set(payload["methods"]) == {
        "quasitree",
        "jones_eval",
        "charpoly",
        "tree_difference",
    }
    assert set(payload["methods"].values()) == {15}
    assert payload["skipped"] == {}


def test_det_single_method_alias(capsys):
    code, payload, _ = run_json(capsys, "det", "--name", "3_1", "--method", "jones")
    assert code == EXIT_OK
    assert payload["methods"] == {"jones_eval": 3}


def test_charpoly_from_chords(capsys):
    code, payload, _ = run_json(
        capsys, "charpoly", "--chords", "1 2 3 4 5 2 1 5 4 3"
    )
    assert code == EXIT_OK
    assert payload["char_poly"]["string"] == "-x^5 - 6*x^3"
    assert payload["s"] == [1, 6, 0]
    assert payload["determinant"] == 5
    assert len(payload["intersection_matrix"]) == 5


def test_charpoly_from_diagram(capsys):
    code, payload, _ = run_json(capsys, "charpoly", "--name", "4_1")
    assert code == EXIT_OK
    assert payload["determinant"] == 5


def test_pretzel_closed_form(capsys):
    code, payload, _ = run_json(capsys, "pretzel", "2", "3", "-5", "--det")
    assert code == EXIT_OK
    assert payload["closed_form"] == 19
    assert payload["determinant"] == 19
    assert payload["agree"] is True
    assert payload["counts"]["g"] == 1


def test_jones_and_bracket(capsys):
    code, payload, _ = run_json(capsys, "jones", "--name", "3_1")
    assert code == EXIT_OK
    assert payload["variable"] == "t"
    assert payload["jones"]["string"] == "-t^4 + t^3 + t"
    code, payload, _ = run_json(capsys, "bracket", "--name", "5_2", "--oracle")
    assert code == EXIT_OK
    assert payload["oracle_equal"] is True


def test_dessin_states_and_quasitrees(capsys):
    code, payload, _ = run_json(capsys, "dessin", "--name", "3_1", "--state", "B")
    assert code == EXIT_OK
    assert payload["counts"] == {"v": 3, "e": 3, "f": 2, "g": 0, "k": 1}
    code, payload, _ = run_json(capsys, "quasitrees", "--name", "8_21")
    assert code == EXIT_OK
    assert payload["s"] == [9, 24]
    assert payload["determinant"] == 15
    assert payload["genus"] == 1


def test_reduce_and_twist(capsys):
    code, payload, _ = run_json(capsys, "reduce", "--name", "3_1")
    assert code == EXIT_OK
    assert payload["crossings"] == 5
    assert all(payload["bookkeeping"].values())
    assert payload["bracket_preserved"] is True
    code, payload, _ = run_json(capsys, "twist", "2", "3")
    assert code == EXIT_OK
    assert payload["determinant"] == 5
    assert payload["variable"] == "t"


# ==========================================================================
# exit codes and error reports
# ==========================================================================


def test_usage_errors(capsys):
    code, _, err = run_json(capsys, "det")
    assert code == EXIT_USAGE
    assert json.loads(err)["error"]["kind"] == "usage"
    code, _, err = run_json(
        capsys, "det", "--pd", HOPF_UNSIGNED, "--name", "3_1"
    )
    assert code == EXIT_USAGE
    code, _, err = run_json(capsys, "bracket", "--name", "3_1", "--cap", "30")
    assert code == EXIT_USAGE
    assert "--allow-large" in json.loads(err)["error"]["message"]


def test_no_command_is_usage(capsys):
    assert run_cli([]) == EXIT_USAGE
    capsys.readouterr()


def test_bad_input(capsys):
    code, _, err = run_json(capsys, "bracket", "--pd", "X[1,2,3]")
    assert code == EXIT_BAD_INPUT
    assert json.loads(err)["error"]["kind"] == "bad-input"
    code, _, _ = run_json(capsys, "det", "--name", "no_such_knot")
    assert code == EXIT_BAD_INPUT


def test_cap_exceeded(capsys):
    code, _, err = run_json(capsys, "bracket", "--name", "8_21", "--cap", "4")
    assert code == EXIT_CAP
    assert json.loads(err)["error"]["kind"] == "cap-exceeded"


def test_orientation_precondition(capsys):
    code, _, err = run_json(capsys, "jones", "--pd", HOPF_UNSIGNED)
    assert code == EXIT_PRECONDITION
    assert json.loads(err)["error"]["kind"] == "precondition"


# ==========================================================================
# output modes and cache
# ==========================================================================


def test_plain_output(capsys):
    code = run_cli(["det", "--name", "3_1", "--plain"])
    out = capsys.readouterr().out
    assert code == EXIT_OK
    assert "value: 3" in out


def test_out_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    code = run_cli(["det", "--name", "3_1", "--out", str(target)])
    assert code == EXIT_OK
    assert capsys.readouterr().out == ""
    assert json.loads(target.read_text())["value"] == 3


def test_cache_round_trip(tmp_path, capsys):
    cache = tmp_path / "cache.jsonl"
    first = run_json(capsys, "det", "--name", "3_1", "--cache", str(cache))
    assert first[0] == EXIT_OK
    assert len(cache.read_text().splitlines()) == 1
    second = run_json(capsys, "det", "--name", "3_1", "--cache", str(cache))
    assert second[1] == first[1]
    assert len(cache.read_text().splitlines()) == 1  # served, not recomputed
    third = run_json(
        capsys, "det", "--name", "3_1", "--method", "quasitree", "--cache", str(cache)
    )
    assert third[0] == EXIT_OK
    assert len(cache.read_text().splitlines()) == 2  # different flags, new entry


# ==========================================================================
# verify
# ==========================================================================


def test_verify_passes_and_is_deterministic(tmp_path, capsys):
    one = tmp_path / "verify1.json"
    two = tmp_path / "verify2.json"
    assert run_cli(["verify", "--workers", "1", "--out", str(one)]) == EXIT_OK
    assert run_cli(["verify", "--workers", "2", "--out", str(two)]) == EXIT_OK
    capsys.readouterr()
    assert one.read_bytes() == two.read_bytes()
    payload = json.loads(one.read_text())
    assert payload["all_pass"] is True
    names = [c["name"] for c in payload["checks"]]
    assert "bracket_oracle_8_21" in names
    assert "figure8_charpoly" in names


def test_verify_plain_lists_checks(capsys):
    code = run_cli(["verify", "--plain"])
    out = capsys.readouterr().out
    assert code == EXIT_OK
    assert "PASS bracket_oracle_3_1" in out
    assert "FAIL" not in out
