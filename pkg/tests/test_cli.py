import pytest

from treeqaoa.cli import main
from treeqaoa.graphs import read_edge_list


def run_twice(argv_maker, tmp_path, name):
    """Run a command twice into fresh files; return both byte payloads."""
    outputs = []
    for i in range(2):
        out = tmp_path / f"{name}_{i}.txt"
        assert main(argv_maker(str(out))) == 0
        outputs.append(out.read_bytes())
    return outputs


@pytest.fixture
def graph_file(tmp_path):
    path = tmp_path / "g.txt"
    assert main(["gen", "--family", "erdos-renyi", "--n", "8", "--p-edge", "0.5",
                 "--seed", "3", "--out", str(path)]) == 0
    return str(path)


def test_gen_deterministic_and_parsable(tmp_path):
    a, b = run_twice(
        lambda out: ["gen", "--family", "erdos-renyi", "--n", "10",
                     "--p-edge", "0.4", "--seed", "7", "--out", out],
        tmp_path, "gen",
    )
    assert a == b
    g = read_edge_list(a.decode())
    assert g.n == 10


def test_gen_cycle_and_complete(tmp_path):
    out = tmp_path / "c.txt"
    assert main(["gen", "--family", "cycle", "--n", "6", "--out", str(out)]) == 0
    assert read_edge_list(out.read_text()).m == 6
    assert main(["gen", "--family", "complete", "--n", "5", "--out", str(out)]) == 0
    assert read_edge_list(out.read_text()).m == 10


def test_tree_subcommand(graph_file, tmp_path):
    a, b = run_twice(
        lambda out: ["tree", graph_file, "--strategy", "greedy", "--root", "2",
                     "--B", "3", "--out", out],
        tmp_path, "tree",
    )
    assert a == b
    assert a.decode().splitlines()[0] == "root 2"


def test_schedule_subcommand(graph_file, tmp_path):
    for strategy in ("traditional", "dfs", "bfs", "greedy"):
        a, b = run_twice(
            lambda out: ["schedule", graph_file, "--strategy", strategy,
                         "--out", out],
            tmp_path, f"sched_{strategy}",
        )
        assert a == b
        g = read_edge_list(open(graph_file).read())
        assert len(a.decode().strip().splitlines()) == g.m


def test_circuit_subcommand(graph_file, tmp_path):
    a, b = run_twice(
        lambda out: ["circuit", graph_file, "--strategy", "greedy",
                     "--angle-seed", "5", "--out", out],
        tmp_path, "circuit",
    )
    assert a == b
    header = a.decode().splitlines()[0].split()
    assert header[0] == "8"


def test_circuit_explicit_angles(graph_file, tmp_path):
    out = tmp_path / "circ.txt"
    assert main(["circuit", graph_file, "--strategy", "traditional",
                 "--gamma", "0.5,0.25", "--beta", "0.1,0.2",
                 "--out", str(out)]) == 0
    text = out.read_text()
    assert "RZ" in text and "RX" in text


def test_simulate_subcommand(graph_file, tmp_path):
    a, b = run_twice(
        lambda out: ["simulate", graph_file, "--strategy", "greedy",
                     "--noise", "0.01,0.001,0.002", "--angle-seed", "2",
                     "--out", out],
        tmp_path, "sim",
    )
    assert a == b
    lines = a.decode().splitlines()
    assert lines[0].startswith("strategy,")
    p_success = float(lines[1].split(",")[-1])
    assert 0.0 < p_success < 1.0


def test_bench_depth_subcommand(tmp_path):
    a, b = run_twice(
        lambda out: ["bench-depth", "--family", "erdos-renyi", "--p-edge", "0.5",
                     "--n", "6,8", "--B", "2,3", "--trials", "2", "--seed", "4",
                     "--strategy", "traditional,greedy", "--out", out],
        tmp_path, "bd",
    )
    assert a == b
    lines = a.decode().splitlines()
    assert lines[0].startswith("family,")
    assert len(lines) == 1 + 2 * 3  # per n: traditional + greedy x 2 B values


def test_bench_success_subcommand(tmp_path):
    a, b = run_twice(
        lambda out: ["bench-success", "--family", "cycle", "--n", "4,5",
                     "--trials", "2", "--seed", "1",
                     "--strategy", "traditional,greedy", "--B", "3",
                     "--noise", "0.01,0.001,0.002", "--out", out],
        tmp_path, "bs",
    )
    assert a == b
    assert len(a.decode().splitlines()) == 1 + 4


def test_oracle_subcommand(tmp_path):
    path = tmp_path / "c6.txt"
    assert main(["gen", "--family", "cycle", "--n", "6", "--out", str(path)]) == 0
    a, b = run_twice(
        lambda out: ["oracle", str(path), "--root", "0", "--B", "3", "--out", out],
        tmp_path, "oracle",
    )
    assert a == b
    lines = a.decode().splitlines()
    assert lines[0] == "best_steps 4"
    assert lines[1] == "heuristic_steps 5"
    assert lines[2] == "trees_enumerated 6"


def test_validation_failures_exit_nonzero(tmp_path, capsys):
    assert main(["gen", "--family", "cycle", "--n", "2"]) == 1
    assert "error:" in capsys.readouterr().err
    assert main(["gen", "--family", "erdos-renyi", "--n", "5",
                 "--p-edge", "0.0"]) == 1
    bad = tmp_path / "bad.txt"
    bad.write_text("3 2\n0 1\n0 1\n")
    assert main(["schedule", str(bad), "--strategy", "traditional"]) == 1
    assert main(["oracle", str(tmp_path / "missing.txt")]) == 1
    with pytest.raises(SystemExit):
        main(["gen"])  # missing required flags


def test_stdout_fallback(graph_file, capsys):
    assert main(["tree", graph_file, "--strategy", "bfs"]) == 0
    assert capsys.readouterr().out.startswith("root 0")
