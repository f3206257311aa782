import csv
import io
import json

import pytest

from sldecomp.cli import RunConfig, UsageError, main


def run(*argv):
    buf = io.StringIO()
    code = main(list(argv), out=buf)
    return code, buf.getvalue()


def test_decompose_json_roundtrip():
    code, text = run("decompose", "--n", "3", "--i", "1", "--max-boxes", "9", "--format", "json")
    assert code == 0
    data = json.loads(text)
    assert (data["n"], data["i"], data["max_boxes"]) == (3, 1, 9)
    counts = {(d["t"], d["k"]): d["count"] for d in data["labels"]}
    assert [counts[(1, k)] for k in range(4)] == [1, 1, 2, 3]
    assert data["complete_k"] == {"1": 3, "2": 3}


def test_decompose_csv():
    code, text = run("decompose", "--n", "2", "--i", "1", "--max-boxes", "16", "--format", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(text)))
    assert list(rows[0]) == ["t", "u", "k", "count"]
    assert [int(r["count"]) for r in rows][:8] == [1, 1, 1, 2, 2, 3, 4, 5]


def test_decompose_text_marks_completeness():
    code, text = run("decompose", "--n", "3", "--i", "1", "--max-boxes", "9")
    assert code == 0
    assert "complete through k=3" in text


def test_series_both_methods_match():
    code, text = run("series", "--n", "3", "--i", "1", "--t", "1", "--order", "10", "--method", "both")
    assert code == 0
    assert text.strip().endswith("MATCH")


def test_series_json():
    code, text = run("series", "--n", "2", "--i", "1", "--t", "1", "--order", "7",
                     "--method", "cramer", "--format", "json")
    assert code == 0
    assert json.loads(text)["series"]["cramer"] == [1, 1, 1, 2, 2, 3, 4, 5]


def test_series_csv():
    code, text = run("series", "--n", "4", "--i", "1", "--t", "2", "--order", "3",
                     "--method", "both", "--format", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(text)))
    assert {r["method"] for r in rows} == {"enumerate", "cramer"}
    assert [int(r["coefficient"]) for r in rows if r["method"] == "cramer"] == [1, 2, 3, 5]


def test_series_cramer_unavailable_exits_2(capsys):
    code, _ = run("series", "--n", "6", "--i", "1", "--t", "1", "--method", "cramer")
    assert code == 2
    assert "collide" in capsys.readouterr().err


def test_series_enumerate_works_when_cramer_does_not():
    code, text = run("series", "--n", "6", "--i", "1", "--t", "1", "--order", "3")
    assert code == 0 and "enumerate" in text


@pytest.mark.parametrize("argv", [
    ("decompose", "--n", "3", "--i", "3"),
    ("decompose", "--n", "1", "--i", "0"),
    ("series", "--n", "3", "--i", "1", "--t", "0"),
    ("decompose", "--n", "3", "--i", "1", "--max-boxes", "-1"),
    ("verify", "--suite", "nope"),
    ("crystal", "--n", "3", "--i", "0", "--partition", "1^3"),
    ("crystal", "--n", "3", "--i", "0", "--word", "g1"),
    ("crystal", "--n", "3", "--i", "0", "--word", "f7"),
    ("crystal", "--n", "3", "--i", "0", "--partition", "x"),
    ("frobnicate",),
])
def test_bad_usage_exits_2(argv):
    assert run(*argv)[0] == 2


def test_verify_suite_lines():
    code, text = run("verify", "--suite", "propmod", "--order", "5")
    assert code == 0
    assert text.startswith("PASS propmod")
    code, text = run("verify", "--suite", "dets", "--order", "20")
    assert code == 0
    assert all(line.startswith("PASS") for line in text.splitlines())


def test_crystal_words():
    code, text = run("crystal", "--n", "2", "--i", "0", "--word", "f0 f1")
    assert code == 0
    lines = text.splitlines()
    assert lines[1].split()[1] == "(1)" and lines[2].split()[1] == "(2)"
    code, text = run("crystal", "--n", "3", "--i", "2", "--partition", "3^2", "--word", "e0 e0")
    assert code == 0
    lines = text.splitlines()
    assert lines[1].split()[1] == "(3,2)"
    assert lines[2].split() == ["e0", "0"]


def test_run_config_validation():
    RunConfig("decompose", n=4, i=3).validate()
    with pytest.raises(UsageError):
        RunConfig("series", n=4, i=1, t=4).validate()
