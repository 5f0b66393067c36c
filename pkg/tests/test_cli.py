import json
import subprocess
import sys

import pytest

from superweight import oddref
from superweight.cli import OPERATION_COMMANDS, build_parser, main
from superweight.weights import Weight


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_diagram_render(capsys):
    code, out, _ = run(capsys, "diagram", "(0^4|-3)", "--nm", "4,1")
    assert code == 0
    top, row = out.splitlines()
    cells = dict(zip(top.split(), row.split()))
    assert cells["4"] == "x" and all(cells[str(z)] == ">" for z in (1, 2, 3))


def test_diagram_json(capsys):
    code, out, _ = run(capsys, "diagram", "(0^4|-3)", "--nm", "4,1", "--json")
    data = json.loads(out)
    assert data["schema"] == 1
    assert data["diagram"] == {"crosses": [4], "coreL": [1, 2, 3], "coreR": []}


def test_ext1_aligned(capsys):
    code, out, _ = run(capsys, "ext1", "(0^4|-3)", "(-1^4|1)", "--nm", "4,1", "--align-central")
    assert (code, out.strip()) == (0, "true")


def test_empty_root_set(capsys):
    code, out, _ = run(capsys, "roots", "--family", "q", "--ne", "0")
    assert code == 0 and out.strip() == "(none)"
    code, out, _ = run(capsys, "roots", "--family", "q", "--ne", "0", "--json")
    assert json.loads(out)["roots"] == []


def test_positive_roots(capsys):
    code, out, _ = run(capsys, "positive-roots", "--family", "sl", "--order", "d2,d1,e1")
    assert code == 0
    assert set(out.splitlines()) == {"d2-d1 even", "d2-e1 odd", "d1-e1 odd"}


def test_odd_reflect_and_transport(capsys):
    code, out, _ = run(capsys, "odd-reflect", "--weight", "(1|0)", "--borel", "d1,e1", "--pos", "1")
    assert code == 0 and "(0|1)" in out and "odd" in out
    code, out, _ = run(capsys, "transport", "--from", "b>", "--to", "b<", "--nm", "2,2", "--weight=(-1,0|0,0)")
    assert code == 0 and "(0,0|0,-1)" in out


def test_omega_and_hw(capsys):
    assert "(0,0,-3|-1,-1)" in run(capsys, "omega", "--kind", "O2", "--n", "3", "--x", "2", "--a", "5")[1]
    code, out, _ = run(capsys, "hw", "--family", "SmuV[3,1]", "--n", "5", "--algebra", "sl:2")
    assert code == 0 and "(3,1,0,0,0|0,0)" in out


def test_kac_and_blocks(capsys, tmp_path):
    code, out, _ = run(capsys, "kac", "--weight", "(0^3|0)", "--n", "3", "--json")
    data = json.loads(out)
    assert data["verdict"] == "length2" and data["parity"] == "odd"
    nodes = tmp_path / "nodes.txt"
    nodes.write_text("# block test\nTrivial\nLinfV[tail:n-1;b:1]\nLinfVdual[tail:n-1;b:1]\n\nSmuV[1]\n")
    code, out, _ = run(capsys, "blocks", "--algebra", "sl:1", "--nodes-file", str(nodes), "--window", "3..8",
                       "--json")
    comps = json.loads(out)["components"]
    assert code == 0 and sorted(map(len, comps)) == [1, 3]


def test_characters_commands(capsys):
    assert run(capsys, "dim", "--sym", "3", "--nm", "2,1")[1].strip() == "7"
    assert run(capsys, "dim", "--ext", "8", "--nm", "3,1")[1].strip() == "8"
    code, out, _ = run(capsys, "sweep", "--mu", "2,1", "--m", "1", "--n", "2..5")
    assert code == 0 and out.split() == ["2:2", "3:2", "4:2", "5:2"]


def test_usage_errors_exit_2(capsys):
    assert run(capsys, "diagram")[0] == 2
    assert run(capsys, "no-such-command")[0] == 2
    assert run(capsys, "diagram", "(0|0)", "--nm", "1,1", "--bogus")[0] == 2
    code, _, err = run(capsys, "diagram", "(0|0", "--nm", "1,1")
    assert code == 2 and err
    assert run(capsys, "blocks", "--nodes-file", "/nonexistent/nodes", "--window", "3..8")[0] == 2


def test_domain_errors_exit_1(capsys):
    code, _, err = run(capsys, "diagram", "(0,1|0)", "--nm", "2,1")
    assert code == 1 and err.startswith("NotDominant:")
    code, _, err = run(capsys, "ext1-cat", "Trivial", "LinfV[tail:n-1;b:1]", "--window", "3..4")
    assert code == 1 and err.startswith("WindowTooSmall:")
    code, _, err = run(capsys, "iso", "Qpart[2,2]", "Qpart[2,2]", "--algebra", "q")
    assert code == 1 and err.startswith("BadPartition:")


@pytest.mark.parametrize("argv", [
    ["diagram", "(0^4|-3)", "--nm", "4,1", "--json"],
    ["classify", "--algebra", "sl:1", "--json"],
    ["schur-mult", "--mu", "2,1", "--nm", "3,1", "--json"],
    ["ext1-cat", "Trivial", "LinfV[tail:n-1;b:1]", "--window", "3..8", "--json"],
])
def test_deterministic_canonical_json(capsys, argv):
    first = run(capsys, *argv)[1]
    second = run(capsys, *argv)[1]
    assert first == second
    data = json.loads(first)
    assert data["schema"] == 1
    assert first.strip() == json.dumps(data, sort_keys=True)


def subcommands():
    parser = build_parser()
    action = next(a for a in parser._actions if a.dest == "command")
    return set(action.choices)


def test_every_operation_has_a_subcommand():
    assert set(OPERATION_COMMANDS.values()) <= subcommands()


def test_listed_subcommands_exist():
    listed = {"roots", "positive-roots", "diagram", "legal-moves", "ext1", "atypicality", "odd-reflect",
              "transport", "omega", "hw", "support", "iso", "classify", "hw-borel", "dim", "schur-mult", "sweep",
              "kac", "ext1-cat", "blocks", "selftest"}
    assert listed <= subcommands()


def test_selftest_filter(capsys):
    code, out, _ = run(capsys, "selftest", "--only", "blocks")
    lines = out.strip().splitlines()
    assert code == 0 and len(lines) == 3 and all(line.startswith("[PASS]") for line in lines)


def test_selftest_catches_corrupted_table(capsys, monkeypatch):
    real = oddref.omega_table

    def broken(kind, n, x, param):
        w = real(kind, n, x, param)
        if kind == "O2" and param > x:
            return Weight(w.left[:-1] + (w.left[-1] + 1,), w.right)
        return w

    monkeypatch.setattr(oddref, "omega_table", broken)
    code, out, _ = run(capsys, "selftest", "--only", "3")
    assert code == 1 and out.startswith("[FAIL] 3.")


def test_module_entry_point():
    done = subprocess.run([sys.executable, "-m", "superweight", "atypicality", "(0,0|0)", "--nm", "2,1"],
                          capture_output=True, text=True)
    assert done.returncode == 0 and done.stdout.strip() == "1"
