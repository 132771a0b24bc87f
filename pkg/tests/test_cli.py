import json
import subprocess
import sys
from pathlib import Path

import pytest

from cominuscule.cli import main
from cominuscule.diagrams import parse_inline, to_json
from cominuscule.posets import build_poset

TRACE = Path(__file__).parent / "data" / "psi_example_trace.txt"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_count_bhat2(capsys):
    code, out, _ = run(capsys, "count", "--type", "B", "--n", "2", "--j", "1", "--maximal", "--by-plus")
    assert code == 0 and out == "1+2q+2q^2+q^3\n"


def test_count_methods_agree(capsys):
    outs = set()
    for method in ("pds", "pattern", "dfs"):
        code, out, _ = run(capsys, "count", "--type", "D", "--n", "4", "--j", "1", "--all", "--method", method)
        assert code == 0
        outs.add(out)
    assert len(outs) == 1


def test_count_family_table(capsys):
    code, out, _ = run(capsys, "count", "--family", "B", "--max-n", "3", "--format", "csv")
    assert code == 0 and out == "n,value\n0,1\n1,3\n2,13\n3,79\n"


def test_convert_type_b_example(capsys):
    code, out, _ = run(capsys, "convert", "--type", "B", "--n", "3", "--j", "3", "+/00/+", "--to", "decorated")
    assert code == 0 and out == "~1 3 -2\n"
    code, out, _ = run(capsys, "convert", "--type", "B", "--n", "3", "--j", "3", "--from", "cell",
                       "2,-1,3;-3,-1,2", "--to", "diagram")
    assert code == 0 and out == "+/00/+\n"


def test_convert_type_a_example(capsys):
    code, out, _ = run(capsys, "--format", "json", "convert", "--type", "A", "--n", "7", "--j", "4",
                       "/0+/000/+++0")
    doc = json.loads(out)
    assert code == 0
    assert doc["decorated"] == "~1 4 5 3 8 ~6 7 2"
    assert doc["cell"] == "1,3,6,2,4,5,8,7;1,4,6,8,2,3,5,7"


def test_pref_trace_matches_figures(capsys):
    code, out, _ = run(capsys, "pref", "to-diagram", "4,6,3,1,7,5,7,2,1", "--trace")
    assert code == 0
    got = [b.split("\n", 1)[1] for b in out.strip().split("\n\n")]
    want = [b.split("\n", 1)[1] for b in TRACE.read_text().strip().split("\n\n")]
    assert got[:8] == want
    assert len(got) == 9


def test_pref_alpha_negative_window(capsys):
    code, out, _ = run(capsys, "pref", "alpha", "-6,-8,-3,-1,-9,5,-7,4,-2")
    assert code == 0 and out == "4,6,3,1,7,5,7,2,1\n"
    code, out, _ = run(capsys, "pref", "alpha-inv", "4,6,3,1,7,5,7,2,1")
    assert code == 0 and out == "(-6,-8,-3,-1,-9,5,-7,4,-2)\n"
    code, _, err = run(capsys, "pref", "alpha", "1,2")
    assert code == 1 and "error" in err


def test_pref_from_diagram(capsys):
    code, out, _ = run(capsys, "pref", "to-diagram", "2,1,1")
    assert code == 0
    diagram = out.strip().splitlines()[-1]
    code, out, _ = run(capsys, "pref", "from-diagram", diagram)
    assert code == 0 and out == "2,1,1\n"


def test_check_and_leify(capsys):
    code, out, _ = run(capsys, "check", "--type", "A", "--n", "4", "--j", "2", "0+0/00+")
    assert code == 0 and "not a Le-diagram" in out
    code, out, _ = run(capsys, "--format", "json", "leify", "--type", "A", "--n", "4", "--j", "2",
                       "0+0/00+", "--strategy", "random", "--seed", "5")
    assert code == 0 and json.loads(out)["result"] == "0++/0++"


def test_malformed_json_names_box(capsys, tmp_path):
    doc = to_json(parse_inline(build_poset("A", 4, 2), "000/000"))
    doc["filling"][1] = "0x0"
    path = tmp_path / "d.json"
    path.write_text(json.dumps(doc))
    code, _, err = run(capsys, "check", "--file", str(path))
    assert code == 1 and "(1,1)" in err
    path.write_text("{not json")
    code, _, err = run(capsys, "check", "--file", str(path))
    assert code == 1 and "malformed JSON" in err


def test_usage_errors(capsys):
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys, "count")[0] == 2
    assert run(capsys, "poset", "--type", "B", "--n", "4", "--j", "2")[0] == 1


def test_poset_formats(capsys):
    code, out, _ = run(capsys, "poset", "--type", "D", "--n", "5", "--j", "5")
    assert code == 0 and out.splitlines()[1:] == ["1 2 3 4", "2 3 5", "3 4", "5"]
    code, out, _ = run(capsys, "--format", "json", "poset", "--type", "E6")
    assert json.loads(out)["ideals"] == 27


def test_cells_count(capsys):
    code, out, _ = run(capsys, "cells", "--type", "B", "--n", "3", "--j", "3", "--count")
    assert code == 0 and out == "79\n"


def test_oracle_small(capsys):
    code, out, _ = run(capsys, "oracle", "--sweep", "moves", "--max-n", "3")
    assert code == 0 and out.startswith("PASS")


def test_output_is_stable(capsys):
    a = run(capsys, "--format", "json", "pref", "to-diagram", "4,6,3,1,7,5,7,2,1", "--trace")
    b = run(capsys, "--format", "json", "pref", "to-diagram", "4,6,3,1,7,5,7,2,1", "--trace")
    assert a == b


@pytest.mark.slow
def test_oracle_all_exits_zero():
    proc = subprocess.run([sys.executable, "-m", "cominuscule", "oracle", "--all", "--max-n", "4"],
                          capture_output=True, text=True, timeout=600)
    assert proc.returncode == 0, proc.stdout + proc.stderr
    assert all(line.startswith("PASS") for line in proc.stdout.splitlines())
