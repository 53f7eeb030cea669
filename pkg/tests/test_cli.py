"""End-to-end command-line tests driven through main(argv)."""

import pytest

from cnotline import (
    BitMatrix,
    add_circuit,
    circuit_to_text,
    matrix_of,
    matrix_to_text,
    parse_circuit_text,
    validate,
)
from cnotline.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def write_matrix(tmp_path, name, m):
    path = tmp_path / name
    path.write_text(matrix_to_text(m), encoding="ascii")
    return str(path)


def write_circuit(tmp_path, name, c):
    path = tmp_path / name
    path.write_text(circuit_to_text(c), encoding="ascii")
    return str(path)


@pytest.mark.parametrize(
    "argv,n",
    [
        (["synth", "--op", "add", "--n", "10"], 10),
        (["synth", "--op", "swap", "--n", "9"], 9),
        (["synth", "--op", "rotate", "--n", "10"], 10),
        (["synth", "--op", "reverse", "--n", "9"], 9),
        (["synth", "--op", "permute", "--perm", "3 1 4 2 5"], 5),
        (["synth", "--op", "gather", "--n", "11", "--positions", "1,4,9,11"], 11),
    ],
)
def test_synth_emits_parseable_clean_circuit(capsys, argv, n):
    code, out, err = run(capsys, *argv)
    assert code == 0
    circuit = parse_circuit_text(out)
    assert circuit.n == n
    assert not validate(circuit)
    assert "depth=" in err and "size=" in err and "density=" in err


def test_synth_then_verify_round_trip(capsys, tmp_path):
    code, out, _ = run(capsys, "synth", "--op", "add", "--n", "10")
    assert code == 0
    circuit_path = tmp_path / "add.circuit"
    circuit_path.write_text(out, encoding="ascii")
    target = write_matrix(tmp_path, "add.matrix", matrix_of(add_circuit(10)))
    code, out, _ = run(capsys, "verify", "--circuit", str(circuit_path), "--target", target)
    assert code == 0
    assert "PASS" in out
    assert "cut 1: crossings=" in out and "lower_bound=" in out


def test_verify_fail_exit_code(capsys, tmp_path):
    circuit = write_circuit(tmp_path, "c.circuit", add_circuit(5))
    target = write_matrix(tmp_path, "t.matrix", BitMatrix.identity(5))
    code, out, _ = run(capsys, "verify", "--circuit", circuit, "--target", target)
    assert code == 1
    assert out.rstrip().endswith("FAIL")


def test_verify_singular_target_notes_impossibility(capsys, tmp_path):
    circuit = write_circuit(tmp_path, "c.circuit", add_circuit(4))
    target = write_matrix(tmp_path, "t.matrix", BitMatrix(4, (0, 0, 0, 0)))
    code, out, _ = run(capsys, "verify", "--circuit", circuit, "--target", target)
    assert code == 1
    assert "target is singular: no circuit can compute it" in out


def test_verify_dimension_mismatch(capsys, tmp_path):
    circuit = write_circuit(tmp_path, "c.circuit", add_circuit(4))
    target = write_matrix(tmp_path, "t.matrix", BitMatrix.identity(5))
    code, _, err = run(capsys, "verify", "--circuit", circuit, "--target", target)
    assert code == 2
    assert "error:" in err


def test_missing_file_is_usage_error(capsys, tmp_path):
    code, _, err = run(
        capsys, "render", "--circuit", str(tmp_path / "absent.circuit")
    )
    assert code == 2
    assert "error:" in err


def test_synth_rejects_bad_permutation(capsys):
    code, _, err = run(capsys, "synth", "--op", "permute", "--perm", "1 1 2")
    assert code == 2
    assert "error:" in err


def test_synth_matrix_rejects_singular(capsys, tmp_path):
    target = write_matrix(tmp_path, "t.matrix", BitMatrix(3, (1, 1, 4)))
    code, _, err = run(capsys, "synth", "--op", "matrix", "--matrix", target)
    assert code == 2
    assert "error:" in err


def test_synth_matrix_round_trips_through_verify(capsys, tmp_path, rng):
    from conftest import random_invertible

    m = random_invertible(7, rng)
    target = write_matrix(tmp_path, "t.matrix", m)
    code, out, err = run(capsys, "synth", "--op", "matrix", "--matrix", target)
    assert code == 0
    assert "depth bound 5n = 35" in err
    circuit = parse_circuit_text(out)
    assert matrix_of(circuit) == m and circuit.depth <= 35


def test_gather_reports_window_start(capsys):
    code, _, err = run(
        capsys, "synth", "--op", "gather", "--n", "11", "--positions", "1 4 9 11"
    )
    assert code == 0
    assert "window_start=" in err


def test_render_golden(capsys, tmp_path):
    circuit = write_circuit(
        tmp_path, "c.circuit", parse_circuit_text("n 2\nu1\n")
    )
    code, out, _ = run(capsys, "render", "--circuit", circuit)
    assert code == 0
    assert out == " 1 -+---\n    |\n 2 -*---\n"


def test_bounds_human_reversal(capsys, tmp_path):
    target = write_matrix(tmp_path, "t.matrix", BitMatrix.anti_identity(9))
    code, out, _ = run(capsys, "bounds", "--target", str(target))
    assert code == 0
    assert "reversal closed form: depth_lb 19, size_lb 49" in out


def test_bounds_machine_output(capsys, tmp_path):
    target = write_matrix(tmp_path, "t.matrix", BitMatrix.anti_identity(9))
    code, out, _ = run(capsys, "bounds", "--target", str(target), "--machine")
    assert code == 0
    pairs = dict(line.split("=", 1) for line in out.splitlines())
    assert pairs["n"] == "9"
    assert pairs["method"] == "rank-cut"
    assert pairs["depth_lb"] == "16"
    assert pairs["size_lb"] == "40"
    assert [pairs[f"cut_{k}"] for k in range(1, 9)] == [
        "2", "4", "6", "8", "8", "6", "4", "2"
    ]
    assert pairs["reversal_depth_lb"] == "19"
    assert pairs["reversal_size_lb"] == "49"


def test_search_reversal_distance(capsys):
    code, out, _ = run(capsys, "search", "--n", "3", "--reversal")
    assert code == 0
    assert "distance = 8" in out
    assert "visited_count" in out


def test_search_witness_file(capsys, tmp_path):
    witness = tmp_path / "w.circuit"
    code, out, _ = run(
        capsys, "search", "--n", "3", "--reversal", "--witness", str(witness)
    )
    assert code == 0
    assert f"witness written to {witness}" in out
    circuit = parse_circuit_text(witness.read_text(encoding="ascii"))
    assert circuit.depth == 8
    assert matrix_of(circuit) == BitMatrix.anti_identity(3)


def test_search_depth_limit_incomplete(capsys):
    code, out, _ = run(
        capsys, "search", "--n", "4", "--reversal", "--depth-limit", "5"
    )
    assert code == 0
    assert "distance > 5" in out


def test_search_max_mode(capsys):
    code, out, _ = run(capsys, "search", "--n", "3", "--max")
    assert code == 0
    assert "max_depth = 8" in out
    assert "visited_count = 168" in out


def test_search_max_refuses_huge(capsys):
    code, _, err = run(capsys, "search", "--n", "6", "--max")
    assert code == 3
    assert "allow" in err


def test_search_max_rejects_distance_flags(capsys):
    code, _, err = run(capsys, "search", "--n", "3", "--max", "--depth-limit", "2")
    assert code == 2
    assert "error:" in err


def test_search_target_dimension_mismatch(capsys, tmp_path):
    target = write_matrix(tmp_path, "t.matrix", BitMatrix.identity(4))
    code, _, err = run(capsys, "search", "--n", "3", "--target", target)
    assert code == 2
    assert "error:" in err


def test_usage_errors_exit_two():
    with pytest.raises(SystemExit) as info:
        main(["synth"])
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        main(["no-such-command"])
    assert info.value.code == 2
