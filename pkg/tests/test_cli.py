import json
import os
import subprocess
import sys

import pytest

from heckegraph.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_neighbors_rank_two(capsys):
    code, out, _ = run_cli(capsys, "neighbors", "--q", "2", "--n", "2",
                           "--r", "1", "--deg-x", "1", "--vertex", "1,0")
    assert code == 0
    assert out.splitlines() == ["(1,0) -> (1,1) : 2", "(1,0) -> (2,0) : 1"]


def test_neighbors_full_rank(capsys):
    code, out, _ = run_cli(capsys, "neighbors", "--q", "2", "--n", "2",
                           "--r", "2", "--deg-x", "1", "--vertex", "0,0")
    assert code == 0
    assert out.splitlines() == ["(0,0) -> (1,1) : 1"]


def test_neighbors_degree_two_place(capsys):
    code, out, _ = run_cli(capsys, "neighbors", "--q", "2", "--n", "2",
                           "--r", "1", "--deg-x", "2", "--vertex", "0,0")
    assert code == 0
    # q^2 + 1 cosets in total, split between the two reachable targets
    assert out.splitlines() == ["(0,0) -> (1,1) : 2", "(0,0) -> (2,0) : 3"]


def test_unsorted_vertex_warns(capsys):
    code, out, err = run_cli(capsys, "neighbors", "--q", "2", "--n", "2",
                             "--r", "1", "--deg-x", "1", "--vertex", "0,1")
    assert code == 0
    assert "warning" in err
    assert out.splitlines()[0].startswith("(1,0) ->")


def test_usage_errors_exit_two(capsys):
    assert run_cli(capsys, "neighbors", "--q", "2", "--n", "2", "--r", "1",
                   "--deg-x", "1", "--vertex", "1,0,0")[0] == 2
    assert run_cli(capsys, "neighbors", "--q", "4", "--n", "2", "--r", "1",
                   "--deg-x", "1", "--vertex", "1,0")[0] == 2
    assert run_cli(capsys, "neighbors", "--q", "2", "--n", "2", "--r", "3",
                   "--deg-x", "1", "--vertex", "1,0")[0] == 2
    assert run_cli(capsys, "graph", "--q", "2", "--n", "2", "--r", "1",
                   "--deg-x", "1", "--window", "3..1")[0] == 2
    assert run_cli(capsys, "graph", "--q", "2", "--n", "2", "--r", "1",
                   "--deg-x", "1", "--window", "zz")[0] == 2
    # argparse-level failures also map to exit code 2
    assert main(["graph", "--q", "2", "--n", "2", "--r", "1",
                 "--deg-x", "1", "--window", "0..1", "--format", "xml"]) == 2
    assert main(["verify", "--suite", "nope"]) == 2


def test_extension_field_flag(capsys):
    code, out, _ = run_cli(capsys, "neighbors", "--q", "2", "--ext", "2",
                           "--n", "2", "--r", "1", "--deg-x", "1",
                           "--vertex", "1,0")
    assert code == 0
    assert out.splitlines() == ["(1,0) -> (1,1) : 4", "(1,0) -> (2,0) : 1"]


def test_graph_csv_path_graph(capsys):
    code, out, _ = run_cli(capsys, "graph", "--q", "2", "--n", "1", "--r", "1",
                           "--deg-x", "1", "--window", "0..3", "--format", "csv")
    assert code == 0
    assert out.splitlines() == ["src,dst,mult", "0,1,1", "1,2,1", "2,3,1", "3,4,1"]


def test_graph_json_schema_and_roundtrip(capsys):
    code, out, _ = run_cli(capsys, "graph", "--q", "2", "--n", "2", "--r", "1",
                           "--deg-x", "1", "--window", "0..2", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert set(doc) == {"params", "vertices", "edges", "meta"}
    assert doc["params"] == {"q": 2, "p": 2, "e": 1, "n": 2, "r": 1, "deg_x": 1}
    assert all(isinstance(v, list) and len(v) == 2 for v in doc["vertices"])
    srcs = {tuple(e["src"]) for e in doc["edges"]}
    assert srcs <= {tuple(v) for v in doc["vertices"]}
    # window filters sources only: targets may leave the window
    dsts = {tuple(e["dst"]) for e in doc["edges"]}
    assert (3, 2) in dsts
    for e in doc["edges"]:
        assert isinstance(e["mult"], int) and e["mult"] > 0
    # edges sorted by (src, dst)
    keys = [(tuple(e["src"]), tuple(e["dst"])) for e in doc["edges"]]
    assert keys == sorted(keys)
    assert "version" in doc["meta"]


def test_graph_dot_format(capsys):
    code, out, _ = run_cli(capsys, "graph", "--q", "2", "--n", "2", "--r", "1",
                           "--deg-x", "1", "--window", "1..1", "--format", "dot")
    assert code == 0
    assert out.splitlines() == [
        "digraph hecke {",
        '  "(1,1)" -> "(2,1)" [label="3"];',
        "}",
    ]


def test_graph_output_file(tmp_path, capsys):
    path = tmp_path / "g.csv"
    code, out, _ = run_cli(capsys, "graph", "--q", "2", "--n", "1", "--r", "1",
                           "--deg-x", "1", "--window", "0..1", "--format", "csv",
                           "--output", str(path))
    assert code == 0 and out == ""
    assert path.read_text().splitlines()[0] == "src,dst,mult"


def test_graph_byte_stable(capsys):
    args = ("graph", "--q", "3", "--n", "2", "--r", "1", "--deg-x", "1",
            "--window", "-1..1", "--format", "json")
    _, first, _ = run_cli(capsys, *args)
    _, second, _ = run_cli(capsys, *args)
    assert first == second


def test_graph_worker_pool_matches_serial():
    cmd = [sys.executable, "-m", "heckegraph.cli", "graph", "--q", "2",
           "--n", "2", "--r", "1", "--deg-x", "1", "--window", "0..2",
           "--format", "csv"]
    env = dict(os.environ)
    env.pop("HECKE_THREADS", None)
    serial = subprocess.run(cmd, capture_output=True, text=True, env=env)
    env["HECKE_THREADS"] = "2"
    pooled = subprocess.run(cmd, capture_output=True, text=True, env=env)
    assert serial.returncode == 0 and pooled.returncode == 0
    assert serial.stdout == pooled.stdout


def test_verify_replay_suite(capsys):
    code, out, _ = run_cli(capsys, "verify", "--suite", "paper-examples")
    assert code == 0
    lines = out.splitlines()
    assert all(line.startswith("PASS") for line in lines[:-1])
    assert lines[-1].endswith("checks passed")


def test_verify_oracle_suite_small(capsys):
    code, out, _ = run_cli(capsys, "verify", "--suite", "oracle",
                           "--qs", "2", "--max-n", "2", "--max-dx", "1",
                           "--vertices", "2")
    assert code == 0


def test_interpolate_output(capsys):
    code, out, _ = run_cli(capsys, "interpolate", "--n", "2", "--r", "1",
                           "--deg-x", "1", "--shape", "d1=d2")
    assert code == 0
    assert out.splitlines() == ["(+1,+0): q + 1", "held-out check at q=13: ok"]


def test_interpolate_rank_one(capsys):
    code, out, _ = run_cli(capsys, "interpolate", "--n", "1", "--r", "1",
                           "--deg-x", "3")
    assert code == 0
    assert out.splitlines()[0] == "(+3): 1"


def test_interpolate_insufficient_points(capsys):
    code, _, err = run_cli(capsys, "interpolate", "--n", "2", "--r", "1",
                           "--deg-x", "2", "--shape", "d1>d2", "--qs", "2,3")
    assert code == 1
    assert "verification failure" in err
