"""The command-line surface: flags, formats, exit codes, determinism."""

import csv
import io
import json

from sandpile_lab.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_enumerate_wheel_ssm_row_count(capsys):
    code, out, _ = run(capsys, "enumerate", "--family", "wheel", "--n", "4", "--model", "ssm")
    assert code == 0
    rows = json.loads(out)
    assert len(rows) == 46
    configs = [tuple(r["config"]) for r in rows]
    assert configs == sorted(configs)
    assert all(set(r) == {"config", "level", "weight01"} for r in rows)


def test_enumerate_wheel_asm_csv(capsys):
    code, out, _ = run(
        capsys, "enumerate", "--family", "wheel", "--n", "4", "--model", "asm", "--format", "csv"
    )
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["config", "level", "weight01"]
    assert len(rows) - 1 == 45


def test_enumerate_fan_row_count(capsys):
    code, out, _ = run(capsys, "enumerate", "--family", "fan", "--n", "4")
    assert code == 0
    assert len(json.loads(out)) == 21


def test_enumerate_usage_error(capsys):
    code, _, err = run(capsys, "enumerate", "--family", "wheel", "--n", "2")
    assert code == 2
    assert "usage error" in err


def test_enumerate_custom_graph(capsys):
    literal = json.dumps({"kind": "custom", "n": 1, "edges": [[0, 1]]})
    code, out, _ = run(capsys, "enumerate", "--family", "custom", "--graph-json", literal)
    assert code == 0
    assert json.loads(out) == [{"config": [0], "level": 0}]


def test_biject_golden_bytes(capsys):
    cases = {
        ("wheel-canonical", "--config", "1,2,0,1,2,1,2,0"): "1,2,0,1,2,1,1,0",
        ("wheel-to-pmo", "--config", "1,2,0,1,2,1,2,0"): '{"n":8,"ccw_edges":[2,5,6,7],"marks":[7]}',
        ("wheel-to-subgraph", "--config", "1,2,0,1,2,1,2,0"): '{"vertices":[2,5,6,7],"edges":[[6,7]]}',
        ("fan-to-word", "--config", "1,1,0,1,2,2,0,2,1"): "Lu Lu R R Lm Lu R Lm",
        ("fan-to-subgraph", "--config", "1,1,0,1,2,2,0,2,1"): '{"vertices":[1,2,5,6,8,9],"edges":[[5,6],[8,9]]}',
    }
    for (name, flag, payload), expected in cases.items():
        code, out, _ = run(capsys, "biject", "--map", name, flag, payload)
        assert code == 0, name
        assert out == expected + "\n", name


def test_biject_inverse_directions(capsys):
    code, out, _ = run(
        capsys,
        "biject",
        "--map",
        "wheel-from-pmo",
        "--json",
        '{"n":8,"ccw_edges":[2,5,6,7],"marks":[]}',
    )
    assert code == 0
    assert out.strip() == "1,2,0,1,2,1,1,0"
    code, out, _ = run(
        capsys,
        "biject",
        "--map",
        "wheel-from-subgraph",
        "--n",
        "8",
        "--json",
        '{"vertices":[2,5,6,7],"edges":[[6,7]]}',
    )
    assert code == 0
    assert out.strip() == "1,2,0,1,2,1,2,0"
    code, out, _ = run(
        capsys, "biject", "--map", "fan-from-word", "--word", "Lu Lu R R Lm Lu R Lm"
    )
    assert code == 0
    assert out.strip() == "1,1,0,1,2,2,0,2,1"
    code, out, _ = run(
        capsys,
        "biject",
        "--map",
        "fan-from-subgraph",
        "--json",
        '{"vertices":[1,2,5,6,8,9],"edges":[[5,6],[8,9]]}',
    )
    assert code == 0
    assert out.strip() == "1,1,0,1,2,2,0,2,1"


def test_biject_check_round_trips(capsys):
    for args in (
        ("--map", "wheel-to-subgraph", "--config", "1,2,0,1,2,1,2,0"),
        ("--map", "wheel-to-pmo", "--config", "0,1,2,1"),
        ("--map", "fan-to-word", "--config", "1,1,0,1,2,2,0,2,1"),
        ("--map", "word-to-subgraph", "--word", "Lu Lm Lu R"),
    ):
        code, _, _ = run(capsys, "biject", *args, "--check")
        assert code == 0


def test_biject_errors(capsys):
    code, _, err = run(capsys, "biject", "--map", "fan-to-word", "--config", "0,1,1,0,1")
    assert code == 2
    assert "error" in err
    code, _, err = run(capsys, "biject", "--map", "wheel-to-pmo", "--word", "Lu")
    assert code == 2
    code, _, err = run(capsys, "biject", "--map", "wheel-canonical", "--config", "1,1,1", "--check")
    assert code == 2  # not invertible


def test_table_differed_delannoy_row6(capsys):
    code, out, _ = run(capsys, "table", "--which", "differed-delannoy", "--n-max", "6")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["n", "k", "count"]
    cells = {(int(n), int(k)): int(c) for n, k, c in rows[1:]}
    assert [cells[(6, k)] for k in range(1, 7)] == [12, 210, 1120, 2520, 2520, 924]
    assert cells[(4, 3)] == 120
    assert len(cells) == 21


def test_table_fan_levels_row7(capsys):
    code, out, _ = run(capsys, "table", "--which", "fan-levels", "--n-max", "7")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["n", "level", "count"]
    row7 = [int(c) for n, _, c in rows[1:] if n == "7"]
    assert row7 == [1, 7, 26, 63, 104, 112, 64]


def test_table_fan_levels_ascending(capsys):
    code, out, _ = run(
        capsys, "table", "--which", "fan-levels", "--n-max", "4", "--level-order", "asc"
    )
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    row4 = [int(c) for n, _, c in rows[1:] if n == "4"]
    assert row4 == [8, 8, 4, 1]


def test_table_kimberling_cell(capsys):
    code, out, _ = run(capsys, "table", "--which", "kimberling", "--n-max", "2", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    cells = {(row["i"], row["j"]): row["count"] for row in payload["rows"]}
    assert cells[(2, 1)] == 3


def test_table_wheel_subgraph_counts(capsys):
    code, out, _ = run(capsys, "table", "--which", "wheel-subgraph-counts", "--n-max", "4")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    total_c4 = sum(int(c) for n, _, c in rows[1:] if n == "4")
    assert total_c4 == 46  # all subgraphs of the 4-cycle


def test_simulate_deterministic(capsys):
    args = (
        "simulate", "--family", "wheel", "--n", "4", "--model", "asm",
        "--steps", "2000", "--seed", "7",
    )
    code_a, out_a, _ = run(capsys, *args)
    code_b, out_b, _ = run(capsys, *args)
    assert code_a == code_b == 0
    assert out_a == out_b
    payload = json.loads(out_a)
    assert payload["seed"] == 7
    assert payload["rng"]["algorithm"] == "mt19937"
    assert sum(payload["visits"].values()) == 2000


def test_simulate_ssm_requires_p(capsys):
    code, _, err = run(
        capsys, "simulate", "--family", "wheel", "--n", "4", "--model", "ssm",
        "--steps", "10", "--seed", "1",
    )
    assert code == 2


def test_verify_pass_and_exit_codes(capsys):
    code, out, _ = run(capsys, "verify", "--theorem", "thm-3.2", "--n-max", "4")
    assert code == 0
    report = json.loads(out)
    assert report["status"] == "pass"
    code, _, err = run(capsys, "verify", "--theorem", "unknown-tag", "--n-max", "3")
    assert code == 2
    assert "unknown theorem tag" in err


def test_output_flag_writes_file(tmp_path, capsys):
    target = tmp_path / "table.csv"
    code, out, _ = run(
        capsys, "table", "--which", "differed-delannoy", "--n-max", "3", "--output", str(target)
    )
    assert code == 0
    assert out == ""
    rows = list(csv.reader(io.StringIO(target.read_text())))
    assert rows[0] == ["n", "k", "count"]
    assert rows[-1] == ["3", "3", "20"]


def test_missing_subcommand_is_usage_error(capsys):
    code = main([])
    capsys.readouterr()
    assert code == 2
