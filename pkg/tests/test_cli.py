import json
import os
import subprocess
import sys

import pytest

from digraph_homology import load_manifest, make_synthetic_dataset


def run_cli(*args, cwd=None):
    return subprocess.run(
        [sys.executable, "-m", "digraph_homology", *args],
        capture_output=True,
        text=True,
        cwd=cwd,
    )


TRIANGLE_EDGE_LIST = "source,target,weight\n0,1,1.0\n1,2,1.0\n0,2,1.0\n"


@pytest.fixture
def triangle_file(tmp_path):
    path = tmp_path / "triangle.csv"
    path.write_text(TRIANGLE_EDGE_LIST)
    return str(path)


def test_happel_on_transitive_triangle(triangle_file):
    proc = run_cli("happel", "--input", triangle_file)
    assert proc.returncode == 0, proc.stderr
    doc = json.loads(proc.stdout)
    assert doc["betti1"] == 2
    counts = {(e["source"], e["target"]): e["paths"] for e in doc["edges"]}
    assert counts == {(0, 1): 1, (1, 2): 1, (0, 2): 2}


def test_happel_rejects_cycle(tmp_path):
    path = tmp_path / "cycle.csv"
    path.write_text("source,target,weight\n0,1,1.0\n1,0,1.0\n")
    proc = run_cli("happel", "--input", str(path))
    assert proc.returncode == 2


def test_happel_cochain_verification(triangle_file):
    proc = run_cli("happel", "--input", triangle_file, "--verify-cochain")
    assert proc.returncode == 0, proc.stderr
    doc = json.loads(proc.stdout)
    assert doc["cochain"] == {"hh0": 1, "hh1": 2, "agrees": True}


def test_happel_cochain_guard_exit_code(tmp_path):
    # complete DAG on 8 vertices: the combinatorial value is fine, but its
    # path algebra blows past the basis guard
    rows = ["source,target,weight"]
    rows += [f"{i},{j},1.0" for i in range(8) for j in range(i + 1, 8)]
    path = tmp_path / "t8.csv"
    path.write_text("\n".join(rows) + "\n")
    plain = run_cli("happel", "--input", str(path))
    assert plain.returncode == 0
    guarded = run_cli("happel", "--input", str(path), "--verify-cochain")
    assert guarded.returncode == 3


def test_betti_reach_on_strongly_connected(tmp_path):
    path = tmp_path / "cycle.csv"
    path.write_text("source,target,weight\n0,1,1.0\n1,2,1.0\n2,0,1.0\n")
    proc = run_cli(
        "betti", "--input", str(path), "--format", "edge-list", "--theory", "reach"
    )
    assert proc.returncode == 0, proc.stderr
    doc = json.loads(proc.stdout)
    assert doc["reach"] == {"0": 1, "1": 0, "2": 0}


def test_betti_dump_complex(triangle_file):
    proc = run_cli(
        "betti", "--input", triangle_file, "--format", "edge-list",
        "--theory", "dflag", "--degrees", "0", "1", "--dump-complex",
    )
    assert proc.returncode == 0, proc.stderr
    doc = json.loads(proc.stdout)
    assert doc["simplex_counts"]["dflag"] == [3, 3, 1]


def test_reach_debug(triangle_file):
    proc = run_cli("reach-debug", "--input", triangle_file, "--format", "edge-list")
    assert proc.returncode == 0, proc.stderr
    doc = json.loads(proc.stdout)
    assert doc["components"] == 3
    assert doc["poset_elements"] == 3
    assert doc["poset_relation_size"] == 3


def test_usage_error_exit_code():
    proc = run_cli("features")  # missing --manifest
    assert proc.returncode == 1


def test_missing_file_is_data_error():
    proc = run_cli("betti", "--input", "/nonexistent/never.csv")
    assert proc.returncode == 2


def test_synth_validates_inputs(tmp_path):
    proc = run_cli("synth", "--out", str(tmp_path / "d"), "--n-subjects", "0")
    assert proc.returncode == 1
    proc = run_cli(
        "synth", "--out", str(tmp_path / "d"), "--p-a", "0.1", "--p-b", "0.1"
    )
    assert proc.returncode == 1


def test_synth_writes_balanced_manifest(tmp_path):
    out = tmp_path / "data"
    proc = run_cli(
        "synth", "--out", str(out), "--n-subjects", "8", "--vertices", "10",
        "--seed", "5",
    )
    assert proc.returncode == 0, proc.stderr
    manifest = proc.stdout.strip()
    ids, graphs, labels = load_manifest(manifest)
    assert len(ids) == 8
    assert labels.count(0) == 4 and labels.count(1) == 4
    assert all(g.num_vertices == 10 for g in graphs)


def test_synth_deterministic(tmp_path):
    a, b = tmp_path / "a", tmp_path / "b"
    make_synthetic_dataset(str(a), n_subjects=4, vertices=8, seed=11)
    make_synthetic_dataset(str(b), n_subjects=4, vertices=8, seed=11)
    for name in sorted(os.listdir(a / "matrices")):
        assert (a / "matrices" / name).read_bytes() == (b / "matrices" / name).read_bytes()
    assert (a / "manifest.json").read_bytes() == (b / "manifest.json").read_bytes()


def test_features_end_to_end(tmp_path):
    data = tmp_path / "data"
    make_synthetic_dataset(str(data), n_subjects=4, vertices=12, seed=3)
    out = tmp_path / "out"
    proc = run_cli(
        "features", "--manifest", str(data / "manifest.json"),
        "--theta1", "-0.4", "--degrees", "0", "1", "--n", "4", "--out", str(out),
    )
    assert proc.returncode == 0, proc.stderr
    produced = sorted(os.listdir(out))
    assert "features_dflag_betti_t1_-0.4.csv" in produced
    assert "features_reach_betti-integral_t1_-0.4.csv" in produced
    assert "features_dflag_betti_t1_-0.4.meta.json" in produced
    csv_lines = (out / "features_dflag_betti_t1_-0.4.csv").read_text().splitlines()
    assert len(csv_lines) == 5
    header = csv_lines[0].split(",")
    assert header[:2] == ["subject_id", "label"]
    meta = json.loads((out / "features_reach_betti_t1_-0.4.meta.json").read_text())
    assert meta["theta1"] == -0.4 and meta["theory"] == "reach"


def test_features_accepts_full_threshold_grid(tmp_path):
    data = tmp_path / "data"
    make_synthetic_dataset(str(data), n_subjects=6, vertices=12, seed=2)
    out = tmp_path / "out"
    thetas = ["-0.4", "-0.35", "-0.3", "-0.25", "-0.2", "-0.15", "-0.1", "-0.05"]
    proc = run_cli(
        "features", "--manifest", str(data / "manifest.json"),
        "--theta1", *thetas, "--theta2", "0", "--degrees", "0", "1",
        "--n", "4", "--out", str(out),
    )
    assert proc.returncode == 0, proc.stderr
    csvs = [name for name in os.listdir(out) if name.endswith(".csv")]
    assert len(csvs) == 32  # 8 thresholds x 2 theories x 2 kinds


def test_features_empty_manifest(tmp_path):
    manifest = tmp_path / "manifest.json"
    manifest.write_text(json.dumps({"subjects": []}))
    proc = run_cli("features", "--manifest", str(manifest), "--out", str(tmp_path))
    assert proc.returncode == 2


def test_features_byte_identical_across_runs(tmp_path):
    data = tmp_path / "data"
    make_synthetic_dataset(str(data), n_subjects=4, vertices=10, seed=13)
    outs = []
    for name in ("o1", "o2"):
        out = tmp_path / name
        proc = run_cli(
            "features", "--manifest", str(data / "manifest.json"),
            "--theta1", "-0.4", "--theta2", "0", "--degrees", "0", "1",
            "--n", "4", "--out", str(out),
        )
        assert proc.returncode == 0, proc.stderr
        outs.append(out)
    names = sorted(os.listdir(outs[0]))
    assert names == sorted(os.listdir(outs[1]))
    for name in names:
        assert (outs[0] / name).read_bytes() == (outs[1] / name).read_bytes()


def test_config_file_merging(tmp_path):
    data = tmp_path / "data"
    make_synthetic_dataset(str(data), n_subjects=4, vertices=10, seed=13)
    config = tmp_path / "cfg.json"
    config.write_text(json.dumps({"n": 4, "degrees": [0], "theory": "reach", "kind": "betti"}))
    out = tmp_path / "out"
    proc = run_cli(
        "features", "--manifest", str(data / "manifest.json"), "--config", str(config),
        "--theta1", "-0.4", "--out", str(out),
    )
    assert proc.returncode == 0, proc.stderr
    produced = sorted(os.listdir(out))
    assert produced == [
        "features_reach_betti_t1_-0.4.csv",
        "features_reach_betti_t1_-0.4.meta.json",
    ]
    header = (out / "features_reach_betti_t1_-0.4.csv").read_text().splitlines()[0]
    assert header.count("b0_") == 5  # n=4 from config file


def test_random_experiment_csv(tmp_path):
    out = tmp_path / "table.csv"
    proc = run_cli(
        "random-experiment", "--n", "10", "--r", "3", "--steps", "4",
        "--p-max", "0.2", "--degrees", "0", "--theory", "dflag",
        "--seed", "1", "--out", str(out),
    )
    assert proc.returncode == 0, proc.stderr
    lines = out.read_text().splitlines()
    assert lines[0] == "p,degree,mean,std,r,n,theory"
    assert len(lines) == 1 + 5  # steps+1 probabilities, one degree


def test_random_experiment_deterministic():
    args = (
        "random-experiment", "--n", "8", "--r", "2", "--steps", "3",
        "--p-max", "0.3", "--degrees", "0", "1", "--seed", "42",
    )
    first = run_cli(*args)
    second = run_cli(*args)
    assert first.returncode == 0
    assert first.stdout == second.stdout
