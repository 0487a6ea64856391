import json

import pytest

from locdom import families as fam
from locdom.cli import SCHEMA, main
from locdom.graph import delete_edge, read_edge_list, write_edge_list
from locdom.solve import brute_force_min


@pytest.fixture
def graph_file(tmp_path):
    def make(g, name="g.el"):
        path = tmp_path / name
        write_edge_list(g, path)
        return str(path)

    return make


def _run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def _report(path):
    with open(path) as fh:
        return json.load(fh)


def test_solve_petersen(capsys, graph_file, tmp_path):
    rep = tmp_path / "r.json"
    code, out, _ = _run(capsys, "solve", graph_file(fam.petersen()), "--param", "gammaL", "--s", "1", "--t", "1", "--report", str(rep))
    assert code == 0
    assert "value: 4" in out
    data = _report(rep)
    assert data["schema"] == SCHEMA
    assert data["result"]["value"] == 4
    assert data["input"]["n"] == 10 and data["input"]["m"] == 15
    assert all(c["status"] == "pass" for c in data["checks"])
    assert "timing" in data


def test_solve_k5_dim(capsys, graph_file):
    code, out, _ = _run(capsys, "solve", graph_file(fam.complete(5)), "--param", "dim", "--k", "2")
    assert code == 0 and "value: 4" in out


def test_solve_p4_witness_is_optimal(capsys, graph_file, tmp_path):
    rep = tmp_path / "r.json"
    code, out, _ = _run(capsys, "solve", graph_file(fam.path(4)), "--param", "gammaL", "--s", "1", "--t", "1", "--report", str(rep))
    assert code == 0 and "value: 2" in out
    assert len(_report(rep)["result"]["witness"]) == 2
    # the two leaves are one of the optima
    _, out, _ = _run(capsys, "verify", graph_file(fam.path(4), "p.el"), "--set", "0,3", "--k", "1")
    assert "locating-dominating: pass" in out


@pytest.mark.parametrize("k", [1, 2, 3])
def test_verify_leaf_of_short_path(capsys, graph_file, tmp_path, k):
    rep = tmp_path / "v.json"
    code, out, _ = _run(capsys, "verify", graph_file(fam.path(k + 2)), "--set", "0", "--k", str(k), "--report", str(rep))
    assert code == 1
    status = {c["name"]: c["status"] for c in _report(rep)["checks"]}
    assert status == {"resolving": "pass", "dominating": "fail", "locating_dominating": "fail"}
    assert f"undominated: {k + 1}" in out


def test_verify_all_but_one(capsys, graph_file):
    code, out, _ = _run(capsys, "verify", graph_file(fam.petersen()), "--set", "0 1 2 3 4 5 6 7 8", "--k", "2")
    assert code == 0 and "locating-dominating: pass" in out


def test_verify_names_twin_pair(capsys, graph_file):
    code, out, _ = _run(capsys, "verify", graph_file(fam.complete(3)), "--set", "0", "--k", "1")
    assert code == 1
    assert "resolving (k=1): fail  vertices 1 and 2 share a code" in out


def test_verify_unknown_label(capsys, graph_file):
    code, _, err = _run(capsys, "verify", graph_file(fam.path(3)), "--set", "7")
    assert code == 2 and "unknown vertex label 7" in err


def test_edge_sweep_fig2(capsys, graph_file, tmp_path):
    rep = tmp_path / "e.json"
    g, e = fam.fig2(3)
    code, _, _ = _run(capsys, "edge-sweep", graph_file(g), "--k", "2", "--report", str(rep))
    assert code == 0
    rows = {tuple(r["edge"]): r for r in _report(rep)["result"]["rows"]}
    assert rows[e]["dim_G"] - rows[e]["dim_G_minus_e"] == 2


@pytest.mark.parametrize("g", [fam.cycle(6), fam.complete(4)], ids=["C6", "K4"])
def test_edge_sweep_k1_deltas(capsys, graph_file, tmp_path, g):
    rep = tmp_path / "e.json"
    code, _, _ = _run(capsys, "edge-sweep", graph_file(g), "--k", "1", "--report", str(rep))
    assert code == 0
    data = _report(rep)
    base = brute_force_min(g, "gammaL", 1, 1).value
    for row in data["result"]["rows"]:
        after = brute_force_min(delete_edge(g, row["edge"]), "gammaL", 1, 1).value
        assert row["gammaL_delta"] == after - base
        assert -2 <= row["gammaL_delta"] <= 2
    assert data["result"]["skipped_bridges"] == 0


def test_edge_sweep_skips_bridges(capsys, graph_file, tmp_path):
    rep = tmp_path / "e.json"
    _run(capsys, "edge-sweep", graph_file(fam.path(5)), "--report", str(rep))
    data = _report(rep)
    assert data["result"]["skipped_bridges"] == 4 and data["result"]["rows"] == []


def test_family_out_and_list(capsys, tmp_path):
    out_path = tmp_path / "f.el"
    code, _, _ = _run(capsys, "family", "remark_tree", "1", "3", "3", "--out", str(out_path))
    assert code == 0 and read_edge_list(out_path).n == 12
    code, out, _ = _run(capsys, "family", "--list")
    assert code == 0 and "fig2 A" in out
    code, _, err = _run(capsys, "family", "fig2", "2")
    assert code == 2 and "a >= 3" in err


def test_tree_sweep_report(capsys, tmp_path):
    rep = tmp_path / "t.json"
    code, out, _ = _run(capsys, "tree-sweep", "--n", "5", "--k", "1,2", "--report", str(rep))
    assert code == 0
    data = _report(rep)
    assert data["result"]["counterexamples"] == []
    assert data["result"]["trees_checked"] == 1 + 3 + 16 + 125  # n**(n-2) for n = 2..5


def test_harness_scope(capsys, tmp_path):
    rep = tmp_path / "h.json"
    code, out, _ = _run(capsys, "harness", "--only", "path-cycle", "--nmax", "10", "--report", str(rep))
    assert code == 0
    names = [c["name"] for c in _report(rep)["checks"]]
    assert names == sorted(names) == ["path_cycle_oracles", "solver_oracle_agreement"]
    assert "PASS  path_cycle_oracles" in out


def test_reports_are_deterministic(capsys, graph_file, tmp_path):
    path = graph_file(fam.petersen())
    texts = []
    for i in range(2):
        rep = tmp_path / "same.json"
        _run(capsys, "solve", path, "--param", "gammaL", "--report", str(rep), "--no-timing")
        texts.append(rep.read_bytes())
    assert texts[0] == texts[1]
    assert "timing" not in json.loads(texts[0])


def test_parse_and_connectivity_errors(capsys, tmp_path):
    bad = tmp_path / "bad.el"
    bad.write_text("3 2\n0 1\n")
    code, _, err = _run(capsys, "solve", str(bad))
    assert code == 2 and "declares 2" in err
    split = tmp_path / "split.el"
    split.write_text("4 2\n0 1\n2 3\n")
    code, _, err = _run(capsys, "solve", str(split))
    assert code == 2 and "disconnected" in err
