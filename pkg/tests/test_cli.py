import csv
import io
import json

import pytest

from torus_split.cli import main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_types_listing():
    code, text = run("types", "--n", "1")
    assert code == 0 and len(text.splitlines()) == 2
    code, text = run("types", "--n", "2", "--q", "3")
    rows = text.splitlines()
    assert len(rows) == 5
    assert "(1-)(1-)\t|T|=16\t|C_W(w)|=8" in rows


@pytest.mark.parametrize("argv,code,label", [
    (["--n", "2", "--q", "5", "--type", "(1)(1)", "--group", "psp"], 0, "rule T2-6"),
    (["--n", "2", "--q", "7", "--type", "(1)(1)", "--group", "psp"], 1, "non-split"),
    (["--n", "4", "--q", "4", "--type", "(2-)(2)", "--group", "sp"], 0, "split"),
    (["--n", "2", "--q", "3", "--type", "(1-)(1)"], 1, "non-split"),
])
def test_classify_exit_codes(argv, code, label):
    got, text = run("classify", *argv)
    assert got == code and label in text


@pytest.mark.parametrize("argv", [
    ["classify", "--n", "2", "--q", "6", "--type", "(1)(1)"],
    ["classify", "--n", "2", "--q", "3", "--type", "(1)(1"],
    ["classify", "--n", "3", "--q", "3", "--type", "(1)(1)"],
    ["classify", "--n", "2"],
    ["atlas", "--nmax", "1", "--qlist", "3,x"],
])
def test_invalid_input_exit_two(argv):
    assert run(*argv)[0] == 2


def test_construct_verify_roundtrip(tmp_path):
    path = tmp_path / "cert.json"
    code, _ = run("construct", "--n", "2", "--q", "3", "--type", "(1-)(1-)", "--out", str(path))
    assert code == 0
    data = json.loads(path.read_text())
    assert data["verdict"] == "split" and data["type"] == "(1-)(1-)"
    assert all(r["scalar"] in ("+1", "-1") for r in data["relations"])
    code, text = run("verify", str(path))
    assert code == 0 and text.startswith("verified")


def test_verify_rejects_tampered_generator(tmp_path):
    path = tmp_path / "cert.json"
    run("construct", "--n", "1", "--q", "5", "--type", "(1-)", "--out", str(path))
    data = json.loads(path.read_text())
    entries = data["generators"][0]["entries"]
    # replace the generator by the identity matrix: a torus element, not a complement
    for i, row in enumerate(entries):
        for j, _ in enumerate(row):
            row[j] = [1 if i == j else 0] + [0] * (len(row[j]) - 1)
    path.write_text(json.dumps(data))
    code, text = run("verify", str(path))
    assert code == 1 and text.startswith("rejected")


def test_verify_corrupted_json_exit_two(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    assert run("verify", str(path))[0] == 2
    path.write_text(json.dumps({"verdict": "split"}))
    assert run("verify", str(path))[0] == 2


def test_construct_non_split_cell():
    code, text = run("construct", "--n", "2", "--q", "7", "--type", "(1)(1)")
    assert code == 1 and text.startswith("non-split")


def test_bruteforce_outcomes():
    code, text = run("bruteforce", "--n", "1", "--q", "3", "--type", "(1-)", "--group", "sp")
    assert code == 1 and text.startswith("None")
    code, text = run("bruteforce", "--n", "1", "--q", "3", "--type", "(1-)", "--group", "psp")
    assert code == 0 and text.startswith("Some")


def test_budget_exit_three(monkeypatch):
    monkeypatch.setenv("TORUS_SPLIT_BUDGET", "5")
    assert run("bruteforce", "--n", "2", "--q", "3", "--type", "(1-)(1-)")[0] == 3


def parse_atlas(text):
    lines = text.splitlines()
    assert lines[0] == "# torus-split-atlas v1"
    return list(csv.DictReader(lines[1:]))


def test_atlas_sp_rank_one():
    code, text = run("atlas", "--nmax", "1", "--qlist", "3", "--group", "sp")
    rows = parse_atlas(text)
    assert code == 0 and len(rows) == 2
    assert all(r["classifier"] == "non-split" and r["oracle"] == "non-split" for r in rows)


def test_atlas_psp_rank_two_q3():
    code, text = run("atlas", "--nmax", "2", "--qlist", "3", "--group", "psp")
    rows = {r["type"]: r for r in parse_atlas(text) if r["n"] == "2"}
    assert code == 0
    assert rows["(1-)(1-)"]["classifier"] == "split"
    assert rows["(1)(1)"]["classifier"] == "non-split"
    assert all(r["agree"] == "yes" for r in rows.values())


def test_atlas_full_rank_two_table_agrees(tmp_path):
    path = tmp_path / "atlas.csv"
    code, _ = run("atlas", "--nmax", "2", "--qlist", "2,3,4,5,7,8,9", "--group", "psp", "--out", str(path))
    rows = parse_atlas(path.read_text())
    assert code == 0 and len(rows) == 7 * 7
    assert all(r["agree"] == "yes" for r in rows)
    assert list(rows[0]) == ["n", "q", "type", "group", "classifier", "rule", "constructive", "oracle", "agree"]


def test_atlas_is_deterministic_and_parallel_safe():
    a = run("atlas", "--nmax", "2", "--qlist", "3,5", "--group", "psp")
    b = run("atlas", "--nmax", "2", "--qlist", "3,5", "--group", "psp", "--jobs", "2")
    assert a == b


def test_atlas_timings_column():
    code, text = run("atlas", "--nmax", "1", "--qlist", "3", "--timings")
    assert code == 0 and "seconds" in text.splitlines()[1]
