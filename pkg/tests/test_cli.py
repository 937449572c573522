import json
import subprocess
import sys

import pytest

from closedgraphs.cli import main
from closedgraphs.fixtures import NET_LABELS, TENT_LABELS, claw, cycle_graph, net, path_graph, tent
from closedgraphs.formats import serialize_edgelist, serialize_graph6


def run(capsys, argv, stdin_text=None, monkeypatch=None):
    if stdin_text is not None:
        import io
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin_text))
    code = main(argv)
    out, err = capsys.readouterr()
    return code, (json.loads(out) if out.strip() else None), err


@pytest.fixture
def write(tmp_path):
    counter = iter(range(10 ** 6))

    def _write(G, fmt="edgelist"):
        path = tmp_path / f"g{next(counter)}.{fmt}"
        path.write_text(serialize_edgelist(G) if fmt == "edgelist" else serialize_graph6(G) + "\n")
        return str(path)
    return _write


def test_recognize_yes(capsys, write):
    code, out, err = run(capsys, ["recognize", write(path_graph(4))])
    assert code == 0
    assert out["certificate"]["ordering"] == "1,2,3,4"
    assert "ms" in err


def test_recognize_no_tent(capsys, write):
    code, out, _ = run(capsys, ["recognize", write(tent(), "graph6")])
    assert code == 1
    assert out["certificate"]["witness"]["kind"] == "TENT"


def test_recognize_no_c4(capsys, write):
    code, out, _ = run(capsys, ["recognize", write(cycle_graph(4))])
    assert code == 1
    assert out["certificate"]["witness"] == {"kind": "CHORDLESS_CYCLE", "vertices": [1, 2, 3, 4]}


def test_check_ordering(capsys, write):
    p3 = write(path_graph(3))
    code, out, _ = run(capsys, ["check-ordering", p3, "--ordering", "1,2,3", "--mode", "closed"])
    assert code == 0 and out["ok"]
    code, out, _ = run(capsys, ["check-ordering", write(claw()), "--ordering", "1,2,3,4",
                                "--mode", "closed"])
    assert code == 1 and out["violation"]["edges"] == [[1, 2], [1, 3]]
    code, out, _ = run(capsys, ["check-ordering", p3, "--ordering", "2,1,3", "--mode", "proper"])
    assert code == 1 and out["violation"]["kind"] == "PROPER_TRIPLE"
    assert out["violation"]["positions"] == [1, 2, 3]


@pytest.mark.parametrize("ordering", ["1,2", "1,1,2", "x"])
def test_check_ordering_malformed(capsys, write, ordering):
    code, out, err = run(capsys, ["check-ordering", write(path_graph(3)), "--ordering", ordering])
    assert code == 2 and out is None and "error" in err


def test_narrow(capsys, write):
    code, out, _ = run(capsys, ["narrow", write(net())])
    assert code == 1
    lab = {k: v + 1 for k, v in NET_LABELS.items()}
    assert out["witness"]["vertex"] == lab["x"]
    assert set(out["witness"]["path"]) == {lab["z"], lab["c"], lab["b"], lab["y"]}
    code, out, _ = run(capsys, ["narrow", write(path_graph(5))])
    assert code == 0 and out == {"n": 5, "narrow": True}
    code, out, _ = run(capsys, ["narrow", write(tent())])
    lab = {k: v + 1 for k, v in TENT_LABELS.items()}
    assert out["witness"] == {"vertex": lab["a"], "path": [lab["d"], lab["e"], lab["f"]],
                              "diameter": 2}


def test_narrow_disconnected(capsys, tmp_path):
    path = tmp_path / "g.txt"
    path.write_text("3 1\n1 2\n")
    code, out, err = run(capsys, ["narrow", str(path)])
    assert code == 2 and "connected" in err


def test_other_commands(capsys, write):
    code, out, _ = run(capsys, ["forbidden", write(tent())])
    assert code == 1 and out["tent_free"] is False and out["witnesses"]["tent_free"]["kind"] == "TENT"
    code, out, _ = run(capsys, ["chordal", write(cycle_graph(5))])
    assert code == 1 and len(out["witness"]["vertices"]) == 5
    code, out, _ = run(capsys, ["chordal", write(net())])
    assert code == 0 and len(out["elimination_ordering"]) == 6
    code, out, _ = run(capsys, ["orient", write(path_graph(3))])
    assert code == 0 and out["straight_enumeration"]["orientation"] == [[1, 2], [2, 3]]
    code, out, _ = run(capsys, ["orient", write(claw())])
    assert code == 1
    code, out, _ = run(capsys, ["intervals", write(path_graph(3))])
    assert code == 0 and out["intervals"][0] == {"vertex": 1, "l": 4, "r": 9}


def test_stdin_and_multiple_graph6(capsys, monkeypatch):
    text = serialize_graph6(path_graph(4)) + "\n" + serialize_graph6(claw()) + "\n"
    code, out, _ = run(capsys, ["recognize"], text, monkeypatch)
    assert code == 1 and [r["closed"] for r in out] == [True, False]


def test_parse_errors_exit_2(capsys, tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("2 1\n1 3\n")
    code, out, err = run(capsys, ["recognize", str(path)])
    assert code == 2 and "out of range" in err
    code, _, err = run(capsys, ["recognize", str(tmp_path / "missing")])
    assert code == 2


def test_suite_small_and_guard(capsys):
    code, out, _ = run(capsys, ["suite", "--max-n", "4", "--seed", "1"])
    assert code == 0
    assert out["graphs"] == {"1": 1, "2": 2, "3": 8, "4": 64}
    assert out["total_counterexamples"] == 0
    with pytest.raises(SystemExit) as exc:
        main(["suite", "--max-n", "x"])
    assert exc.value.code == 2
    code, out, err = run(capsys, ["suite", "--max-n", "8"])
    assert code == 2 and out is None


def test_module_entry_point(tmp_path):
    path = tmp_path / "g.txt"
    path.write_text(serialize_edgelist(path_graph(3)))
    res = subprocess.run([sys.executable, "-m", "closedgraphs", "recognize", str(path)],
                         capture_output=True, text=True)
    assert res.returncode == 0
    assert json.loads(res.stdout)["closed"] is True
