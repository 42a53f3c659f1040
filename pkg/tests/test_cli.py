import json
import subprocess
import sys

import pytest

from stepcomp.cli import main
from stepcomp.competition import c12_fast
from stepcomp.textio import parse_tournament


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def edges(text):
    return [line for line in text.splitlines() if line and not line.startswith("#")]


def test_compute_figure_one(capsys):
    code, out, _ = run(capsys, "compute", "--kind", "12", "--m", "3", "--n", "2", "--bits", "101101")
    assert code == 0
    assert edges(out) == ["0 1", "1 2", "1 3", "1 4"]


def test_compute_four_cycle_and_plain(capsys):
    assert edges(run(capsys, "compute", "--kind", "12", "--m", "2", "--n", "2", "--bits", "1001")[1]) == []
    assert edges(run(capsys, "compute", "--kind", "11", "--m", "2", "--n", "2", "--bits", "0000")[1]) == ["2 3"]


def test_compute_explain_lists_witnesses(capsys):
    _, out, _ = run(capsys, "compute", "--m", "3", "--n", "2", "--bits", "101101", "--explain")
    assert "# 1-3: 1 -> 4, 3 -> 2 -> 4" in out
    assert "# 0-1: common out-neighbour 3" in out


def test_compute_general_steps_and_digraph_input(tmp_path, capsys):
    f = tmp_path / "d.txt"
    f.write_text("digraph 4\n0 2\n2 3\n1 3\n")
    assert edges(run(capsys, "compute", str(f), "--kind", "ij", "--i", "2", "--j", "1")[1]) == ["0 1", "1 2"]
    assert edges(run(capsys, "compute", str(f), "--kind", "11")[1]) == ["1 2"]
    assert run(capsys, "compute", str(f), "--kind", "ij", "--i", "0", "--j", "1")[0] == 2
    assert run(capsys, "compute", str(f), "--kind", "ij")[0] == 2


def test_compute_formats(capsys):
    _, out, _ = run(capsys, "compute", "--m", "3", "--n", "2", "--bits", "101101", "--format", "dot")
    assert out.count("--") == 4
    _, out, _ = run(capsys, "compute", "--m", "3", "--n", "2", "--bits", "101101", "--format", "matrix")
    assert edges(out)[1] == "10111"


def test_parse_errors_exit_two(tmp_path, capsys):
    f = tmp_path / "bad.txt"
    f.write_text("3 2\n10 1x 01\n")
    code, _, err = run(capsys, "compute", str(f))
    assert code == 2 and "line 2, column 5" in err
    assert run(capsys, "compute", "--bits", "1010")[0] == 2
    assert run(capsys, "compute", "--m", "2", "--n", "2", "--bits", "10")[0] == 2
    assert run(capsys, "compute", str(tmp_path / "missing.txt"))[0] == 2


@pytest.mark.parametrize(
    "argv,claim",
    [
        (["star"], "C12 ≅ K_{1,4}: ok"),
        (["fig2"], "C12 has 13 edges and diameter 3: ok"),
        (["complete", "--l", "12"], "C12 = K_12: ok"),
        (["disjoint-union", "--m", "4", "--n", "3"], "C12 = K_4 ∪ K_3: ok"),
        (["pair-k10-k5", "--m", "10"], "C = K_10 ∪ K_5: ok"),
        (["min-edge", "--m", "4", "--n", "3"], "C12 has 3 edges, formula 3: ok"),
    ],
)
def test_construct_families_self_check_and_reparse(tmp_path, capsys, argv, claim):
    code, out, _ = run(capsys, "construct", *argv)
    assert code == 0 and out.rstrip().endswith(claim)
    f = tmp_path / "t.txt"
    f.write_text(out)
    code, again, _ = run(capsys, "compute", str(f))
    want = c12_fast(parse_tournament(out)) if argv[0] != "pair-k10-k5" else None
    if want is not None:
        assert code == 0 and edges(again) == [f"{u} {v}" for u, v in want.edges()]
    else:
        _, plain, _ = run(capsys, "compute", str(f), "--kind", "11")
        assert len(edges(plain)) == 45 + 10


def test_construct_star_bits(capsys):
    _, out, _ = run(capsys, "construct", "star")
    assert out.splitlines()[:2] == ["3 2", "101101"]
    _, out, _ = run(capsys, "construct", "complete", "--l", "12")
    assert out.splitlines()[0] == "6 6" and len(out.splitlines()[1]) == 36


def test_construct_refusals(capsys):
    code, _, err = run(capsys, "construct", "disjoint-union", "--m", "3", "--n", "2")
    assert code == 2 and "n != 2" in err
    code, _, err = run(capsys, "construct", "complete", "--l", "11")
    assert code == 2 and "l >= 12" in err
    assert run(capsys, "construct", "complete")[0] == 2


def test_construct_from_cover(tmp_path, capsys):
    g = tmp_path / "k5.txt"
    g.write_text("graph 5\n" + "".join(f"{u} {v}\n" for u in range(5) for v in range(u + 1, 5)))
    code, out, _ = run(capsys, "construct", "from-cover", "--graph", str(g), "--m", "10")
    assert code == 0 and out.rstrip().endswith("C = G ∪ K_10: ok")
    code, _, err = run(capsys, "construct", "from-cover", "--graph", str(g), "--m", "9")
    assert code == 1 and "not a competition-realizable pair" in err
    p = tmp_path / "p3.txt"
    p.write_text("graph 3\n0 1\n1 2\n")
    assert run(capsys, "construct", "from-cover", "--graph", str(p), "--m", "3", "--cover", "0,1;1,2")[0] == 2
    claw = tmp_path / "claw.txt"
    claw.write_text("graph 4\n0 1\n0 2\n0 3\n")
    code, out, _ = run(capsys, "construct", "from-cover", "--graph", str(claw), "--m", "3", "--cover", "0,1;0,2;0,3")
    assert code == 0 and out.startswith("4 3\n")


def test_verify_components(capsys):
    code, out, _ = run(capsys, "verify", "components", "--m", "3", "--n", "3")
    assert code == 0
    assert "orientations: 512" in out and "violations: 0" in out


def test_verify_extremal(capsys):
    code, out, _ = run(capsys, "verify", "extremal", "--m", "4", "--n", "3")
    assert code == 0 and "min edges: 3" in out and "min formula: 3" in out and "max edges: 16" in out
    assert run(capsys, "verify", "extremal", "--m", "2", "--n", "3")[0] == 2


def test_verify_trees(capsys):
    code, out, _ = run(capsys, "verify", "trees", "--max-order", "6")
    assert code == 0 and "realizable trees: K_{1,4}" in out
    assert run(capsys, "verify", "trees", "--max-order", "8")[0] == 2


def test_verify_limits_and_json(capsys):
    code, _, err = run(capsys, "verify", "components", "--m", "5", "--n", "5")
    assert code == 2 and "--force" in err
    assert run(capsys, "verify", "components")[0] == 2
    code, out, _ = run(capsys, "verify", "all", "--m", "2", "--n", "3", "--max-order", "4", "--json", "--timing")
    data = json.loads(out)
    assert code == 0 and [r["theorem"][:12] for r in data][0] == "at most one "
    assert len(data) == 4  # extremal skipped for m < n
    assert all("wall_time" in r for r in data)


def test_verify_report_is_shard_independent(capsys):
    a = run(capsys, "verify", "invariants", "--m", "4", "--n", "2")[1]
    b = run(capsys, "verify", "invariants", "--m", "4", "--n", "2", "--shards", "8")[1]
    assert a == b


def test_verify_exit_one_on_violation(capsys, monkeypatch):
    from stepcomp import verify

    def always_fail(part, code, *rest):
        part.fail(code, "planted")

    monkeypatch.setitem(verify._SUITES, "components", ("planted", always_fail))
    code, out, _ = run(capsys, "verify", "components", "--m", "2", "--n", "2")
    assert code == 1 and "violation: 0000 planted" in out


def test_realizable(tmp_path, capsys):
    star = tmp_path / "star.txt"
    star.write_text("graph 5\n0 1\n0 2\n0 3\n0 4\n")
    code, out, _ = run(capsys, "realizable", str(star))
    assert code == 0 and "status: realizable" in out and "certificate:" in out
    k2k2 = tmp_path / "k2k2.txt"
    k2k2.write_text("graph 4\n0 1\n2 3\n")
    code, out, _ = run(capsys, "realizable", str(k2k2))
    assert code == 0 and "status: not realizable" in out
    p7 = tmp_path / "p7.txt"
    p7.write_text("graph 7\n" + "".join(f"{k} {k + 1}\n" for k in range(6)))
    code, out, _ = run(capsys, "realizable", str(p7), "--max-orientations", "5", "--max-nodes", "5")
    assert code == 3 and "indeterminate" in out
    assert run(capsys, "realizable", "--m", "3", "--n", "2", "--bits", "101101")[0] == 2


def test_export(tmp_path, capsys):
    _, out, _ = run(capsys, "export", "--m", "3", "--n", "2", "--bits", "101101")
    assert out.count("->") == 6
    _, out, _ = run(capsys, "export", "--m", "4", "--n", "3", "--bits", "010010101101")
    assert out.count("->") == 12
    star = tmp_path / "star.txt"
    star.write_text("graph 5\n0 1\n0 2\n0 3\n0 4\n")
    _, out, _ = run(capsys, "export", str(star), "--format", "edge-list")
    assert len(out.splitlines()) == 4
    _, out, _ = run(capsys, "export", "--m", "3", "--n", "2", "--bits", "101101", "--format", "edge-list")
    assert len(out.splitlines()) == 6


def test_unknown_format_is_a_usage_error(capsys):
    with pytest.raises(SystemExit) as info:
        main(["export", "--m", "1", "--n", "1", "--bits", "1", "--format", "svg"])
    assert info.value.code == 2


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "stepcomp", "construct", "star"], capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.startswith("3 2\n101101\n")
