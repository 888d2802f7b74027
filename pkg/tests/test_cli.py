import json
import subprocess
import sys

import pytest

from canonical_cones.cli import dumps, main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_cartan(capsys):
    code, out, _ = run(capsys, "cartan", "--type", "A3")
    data = json.loads(out)
    assert code == 0
    assert data["N"] == 6 and data["longest_word"] == [1, 2, 1, 3, 2, 1]


def test_words_count_text(capsys):
    code, out, _ = run(capsys, "words", "--type", "A3", "--count", "--format", "text")
    assert code == 0 and out.strip() == "16"


def test_words_path(capsys):
    code, out, _ = run(capsys, "words", "--word", "1,2,1", "--to", "2,1,2")
    assert json.loads(out)["moves"] == [{"kind": 3, "position": 2}]


def test_transition_point(capsys):
    code, out, _ = run(capsys, "transition", "--word", "1,2,1", "--to", "2,1,2", "--point", "1,0,2", "--trop")
    data = json.loads(out)
    assert data["trop_image"] == [1, 1, 0]
    assert "trop" in data


def test_quiver_dot(capsys):
    code, out, _ = run(capsys, "quiver", "--word", "1,2,1", "--format", "dot")
    assert code == 0 and out.startswith("digraph")


def test_mutate(capsys):
    code, out, _ = run(capsys, "mutate", "--word", "1,2,1", "--vertex", "1", "--vertex", "1")
    again = json.loads(out)["seed"]
    _, out2, _ = run(capsys, "quiver", "--word", "1,2,1")
    assert again["arrows"] == json.loads(out2)["seed"]["arrows"]


def test_potential_and_decoration(capsys):
    code, out, _ = run(capsys, "potential", "--word", "1,2,1", "--divisor", "1", "--format", "text")
    assert out.strip() == "x[3]^-1"
    code, out, _ = run(capsys, "potential", "--word", "1,2,1", "--divisor", "-1", "--via-mutation")
    assert json.loads(out)["divisor"] == -1
    code, out, _ = run(capsys, "decoration", "--word", "1,2,1", "--divisor", "1", "--format", "text")
    assert out.strip() == "x[1]*x[3]^-1"
    code, out, _ = run(capsys, "potential", "--word", "1,2,1")
    assert json.loads(out)["divisor"] == "total"


def test_chart(capsys):
    code, out, _ = run(capsys, "chart", "--word", "1,2,1", "--kind", "gr_iota")
    assert len(json.loads(out)["matrix"]) == 5


def test_cone_formats(capsys):
    code, out, _ = run(capsys, "cone", "--word", "1,2,1", "--kind", "graded_string", "--rays", "--cmm")
    data = json.loads(out)
    assert code == 0 and data["rays"] and data["cmm"]["matrix"]
    code, out, _ = run(capsys, "cone", "--word", "1,2,1", "--kind", "ghkk", "--format", "hrep")
    assert all(line.endswith(">= 0") for line in out.strip().splitlines())


def test_polytope_count(capsys):
    code, out, _ = run(capsys, "polytope", "--type", "A3", "--weight", "1,1,1", "--count")
    assert json.loads(out) == {"count": 64, "weyl_dim": 64}


def test_phi(capsys):
    code, out, _ = run(capsys, "phi", "--word", "1,2,1")
    data = json.loads(out)
    assert data["phi_equals_phi_prime"] and data["fB_equals_W_after_phi"]


def test_verify_exit_code(capsys):
    code, out, _ = run(capsys, "verify", "--type", "A2", "--suite", "examples")
    data = json.loads(out)
    assert code == 0 and data["passed"] and data["checks"] == 13


def test_invalid_word_exit_2(capsys):
    code, _, err = run(capsys, "quiver", "--word", "1,1")
    assert code == 2
    assert json.loads(err)["error"] == "InvalidWordError"


def test_bad_flags_exit_1(capsys):
    code, _, err = run(capsys, "cone", "--kind", "foo")
    assert code == 1 and json.loads(err)["error"] == "UsageError"
    code, _, err = run(capsys, "frobnicate")
    assert code == 1


def test_dimension_cap_exit_3(capsys):
    code, _, err = run(capsys, "cone", "--type", "D5", "--kind", "ghkk", "--rays")
    assert code == 3 and json.loads(err)["error"] == "DimensionCapError"


def test_frozen_vertex_is_an_error(capsys):
    code, _, err = run(capsys, "mutate", "--vertex", "2")
    assert code != 0 and "frozen" in json.loads(err)["message"]


def test_large_integers_are_strings():
    assert json.loads(dumps({"v": 2 ** 60, "w": 5})) == {"v": str(2 ** 60), "w": 5}


def test_output_is_deterministic(capsys):
    _, first, _ = run(capsys, "cone", "--type", "A3", "--kind", "bk")
    _, second, _ = run(capsys, "cone", "--type", "A3", "--kind", "bk")
    assert first == second


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "canonical_cones", "words", "--type", "A2", "--count",
                           "--format", "text"], capture_output=True, text=True, timeout=60)
    assert proc.returncode == 0 and proc.stdout.strip() == "2"
