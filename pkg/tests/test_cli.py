import json
import subprocess
import sys

import pytest

from burnkit.cli import main
from burnkit.exact import BurningSchedule, verify_schedule
from burnkit.formats import encode_graph6, write_edge_list
from burnkit.graph import complete_bipartite, cycle_graph, path_graph, petersen_graph, spider
from burnkit.report import Report


@pytest.fixture
def files(tmp_path):
    def put(name, g, fmt="edgelist"):
        p = tmp_path / name
        p.write_text(write_edge_list(g) if fmt == "edgelist" else encode_graph6(g) + "\n")
        return str(p)
    return put


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, (json.loads(out) if out.strip() else None), err


def test_exact_and_verify_round_trip(files, capsys, tmp_path):
    g = cycle_graph(5)
    path = files("c5.txt", g)
    rep_path = tmp_path / "rep.json"
    code, doc, _ = run(capsys, "exact", path, "--report", str(rep_path))
    assert code == 0
    res = doc["result"]
    assert res["b"] == 3 and res["witness_verified"] and res["well_burnable"]
    assert verify_schedule(g, BurningSchedule(tuple(res["witness"])))
    assert doc["input_digest"].startswith("sha256:")
    assert Report.from_json(rep_path.read_text()).to_json() == rep_path.read_text()
    code, doc, _ = run(capsys, "verify", path, "--from-report", str(rep_path))
    assert code == 0 and doc["result"]["valid"]


def test_exact_graph6_input(files, capsys):
    code, doc, _ = run(capsys, "exact", files("p.g6", petersen_graph(), "graph6"), "--format", "graph6")
    assert code == 0 and doc["result"]["b"] == 3


def test_exact_budget_exit(files, capsys):
    code, doc, _ = run(capsys, "exact", files("p9.txt", path_graph(9)), "--budget", "2")
    assert code == 3
    assert doc["result"]["b"] is None and doc["result"]["lower_bound"] == 3


def test_verify_rejects_bad_schedule(files, capsys):
    code, doc, _ = run(capsys, "verify", files("p5.txt", path_graph(5)), "--schedule", "0,4")
    assert code == 1 and doc["result"]["valid"] is False


def test_input_errors(files, tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("0 1\n1 x\n")
    code, _, err = run(capsys, "exact", str(bad))
    assert code == 2 and "line 2" in err
    disc = tmp_path / "disc.txt"
    disc.write_text("0 1\n2 3\n")
    assert run(capsys, "exact", str(disc))[0] == 2
    assert run(capsys, "exact", str(tmp_path / "missing.txt"))[0] == 2
    assert run(capsys, "tree", "--hist", "3:x")[0] == 2
    assert run(capsys, "tree", "--hist", "3:2,1:5")[0] == 2


def test_bound_pack(files, capsys):
    code, doc, _ = run(capsys, "bound", files("p9.txt", path_graph(9)))
    res = doc["result"]
    assert code == 0 and res["packing_bound"] == 5 and res["certificate"]["packing"] == [0, 3, 6]


def test_bound_tether_preset_and_violation(files, capsys):
    code, doc, _ = run(capsys, "bound", "--method", "tether", "--preset", "trianglefree", "--d", "12", "--n", "10000")
    assert code == 0 and doc["result"]["best_r"] == 12
    assert abs(doc["result"]["bound"] - 46.9885) < 1e-4
    code, doc, _ = run(capsys, "bound", files("k33.txt", complete_bipartite(3, 3)),
                       "--method", "tether", "--preset", "trianglefree", "--d", "3")
    assert code == 4 and doc["result"]["violation"] == {"vertex": 0, "r": 2}


def test_bound_tether_file(tmp_path, capsys):
    t = tmp_path / "t.json"
    t.write_text(json.dumps([{"start": 1, "form": "constant", "params": {"c": 1}}]))
    code, doc, _ = run(capsys, "bound", "--method", "tether", "--tether", str(t), "--n", "4")
    assert code == 0 and doc["result"]["bound"] == 6
    t.write_text("[]")
    assert run(capsys, "bound", "--method", "tether", "--tether", str(t), "--n", "4")[0] == 2


def test_tree_command(files, capsys):
    code, doc, _ = run(capsys, "tree", "--hist", "4:100")
    res = doc["result"]
    assert code == 0 and res["profile"]["n"] == 302
    assert res["thm41"]["value"] is True and (res["thm41"]["lhs"], res["thm41"]["rhs"]) == (14, 18)
    code, doc, _ = run(capsys, "tree", files("s.txt", spider(3, 2)))
    assert doc["result"]["profile"]["p"] == "3/4"
    assert doc["result"]["thm43"]["value"] is None


def test_config_defaults_and_override(files, tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"budget": 2}))
    path = files("p9.txt", path_graph(9))
    assert run(capsys, "--config", str(cfg), "exact", path)[0] == 3
    assert run(capsys, "--config", str(cfg), "exact", path, "--budget", "5")[0] == 0


def test_campaign_command_and_resume(tmp_path, capsys):
    out = tmp_path / "out"
    code, doc, err = run(capsys, "campaign", "--n-max", "9", "--d", "3", "--interval", "5", "--out", str(out))
    assert code == 0 and doc["result"]["totals"]["counterexamples"] == 0
    assert "n=9" in err
    assert json.loads((out / "report.json").read_text()) == doc
    ck = out / "checkpoint.json"
    code, doc2, _ = run(capsys, "campaign", "--n-max", "9", "--d", "3", "--interval", "5",
                        "--out", str(out), "--resume", str(ck))
    assert code == 0 and doc2["result"]["per_n"] == doc["result"]["per_n"]
    code, _, err = run(capsys, "campaign", "--n-max", "10", "--d", "3", "--out", str(out), "--resume", str(ck))
    assert code == 6 and "different campaign" in err


def test_campaign_counterexample_exit(tmp_path, capsys, monkeypatch):
    import burnkit.campaign as campaign
    monkeypatch.setattr(campaign, "burns_within", lambda g, k: None)
    code, doc, _ = run(capsys, "campaign", "--n-max", "4", "--out", str(tmp_path / "o"))
    assert code == 5 and doc["result"]["counterexamples"]


def test_module_entry_point(files):
    proc = subprocess.run([sys.executable, "-m", "burnkit", "exact", files("p4.txt", path_graph(4))],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout)["result"]["b"] == 2


def test_tree_histogram_and_spider_weighted_sum(files, capsys):
    code, doc, _ = run(capsys, "tree", "--hist", "7:1,2:9")
    assert code == 0 and doc["result"]["thm44"]["value"] is True
    code, doc, _ = run(capsys, "tree", files("s.txt", spider(3, 2)))
    assert doc["result"]["thm44"] == {"value": False, "meaning": "inconclusive", "weighted_sum": "0"}


def test_exact_examples(files, capsys, tmp_path):
    code, doc, _ = run(capsys, "exact", files("p9.txt", path_graph(9)))
    assert code == 0 and doc["result"]["b"] == 3 and doc["result"]["well_burnable"] is True
    k1 = tmp_path / "k1.txt"
    k1.write_text("0\n")
    code, doc, _ = run(capsys, "exact", str(k1))
    assert code == 0 and doc["result"]["b"] == 1 and doc["result"]["witness"] == [0]
