import json
import random

import pytest

from ribs import (
    ColoredFamily,
    Digraph,
    cycle_graph,
    make_graph,
    path_graph,
)
from ribs.cli import main
from ribs.io import (
    FormatError,
    dumps_digraph,
    dumps_graph,
    loads_digraph,
    loads_graph,
    read_family,
    read_graph,
    read_manifest,
    write_family,
    write_graph,
    write_manifest,
)

from conftest import random_graph


# ------------------------------------------------------------------- formats


def test_graph_text_round_trip(tmp_path):
    rng = random.Random(71)
    for _ in range(25):
        g = random_graph(rng, rng.randint(1, 9), rng.random())
        assert loads_graph(dumps_graph(g)).adj == g.adj
    path = tmp_path / "g.graph"
    g = cycle_graph(5)
    write_graph(path, g)
    assert read_graph(path).adj == g.adj


def test_graph_text_comments_and_blanks():
    text = "# a comment\n\np 3 1\ne 0 2  # trailing\n\n"
    g = loads_graph(text)
    assert g.n == 3 and g.has_edge(0, 2)


@pytest.mark.parametrize(
    "text, line",
    [
        ("e 0 1\n", 1),
        ("p 2 1\ne 0 0\n", 2),
        ("p 2 1\ne 0 5\n", 2),
        ("p 2 2\ne 0 1\n", 1),
        ("p 2 0\ne 0 1\n", 1),
        ("p x 0\n", 1),
        ("p 2 0\nbogus\n", 1),
    ],
)
def test_graph_text_errors_carry_line_numbers(text, line):
    with pytest.raises(FormatError) as exc:
        loads_graph(text)
    assert exc.value.line == line


def test_digraph_round_trip_allows_loops():
    d = Digraph.from_arcs(3, [(0, 0), (0, 1), (2, 1)])
    again = loads_digraph(dumps_digraph(d))
    assert again == d
    with pytest.raises(FormatError):
        loads_digraph("p 2 0\n")  # graph header in a digraph file


def test_family_json_round_trip_inline(tmp_path):
    g = path_graph(4)
    fam = ColoredFamily.from_vertex_lists(g, [[0, 2], [1, 3]])
    path = tmp_path / "fam.family.json"
    write_family(path, fam)
    g2, fam2 = read_family(path)
    assert g2.adj == g.adj
    assert fam2.sets == fam.sets


def test_family_json_round_trip_graph_file(tmp_path):
    g = cycle_graph(6)
    write_graph(tmp_path / "host.graph", g)
    fam = ColoredFamily.from_vertex_lists(g, [[0, 2, 4], [1, 3, 5]])
    path = tmp_path / "fam.family.json"
    write_family(path, fam, graph_path="host.graph")
    g2, fam2 = read_family(path)
    assert g2.adj == g.adj
    assert fam2.sets == fam.sets


def test_manifest_round_trip(tmp_path):
    payload = {"name": "thing", "params": {"n": 3}, "claims": []}
    path = tmp_path / "m.manifest.json"
    write_manifest(path, payload)
    assert read_manifest(path) == payload


# ----------------------------------------------------------------------- CLI


def write_family_file(tmp_path, g, lists, name="f.family.json"):
    fam = ColoredFamily.from_vertex_lists(g, lists)
    path = tmp_path / name
    write_family(path, fam)
    return path


def test_cli_solve_found_and_absent(tmp_path, capsys):
    path = write_family_file(
        tmp_path, path_graph(4), [[0, 2], [1, 3], [0, 3]]
    )
    assert main(["solve", "--family", str(path), "--size", "2"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["found"] is True and out["size"] == 2
    assert len(out["selection"]) == 2

    assert main(["solve", "--family", str(path), "--size", "3", "--brute"]) == 1
    out = json.loads(capsys.readouterr().out)
    assert out["found"] is False


def test_cli_solve_missing_file(tmp_path, capsys):
    assert main(["solve", "--family", str(tmp_path / "nope.json"), "--size", "1"]) == 2
    assert capsys.readouterr().err


def test_cli_gen_writes_and_verify_recertifies(tmp_path, capsys):
    assert main(["gen", "drisko", "--n", "3", "--out", str(tmp_path)]) == 0
    capsys.readouterr()
    stems = sorted(p.name for p in tmp_path.iterdir())
    assert stems == [
        "drisko-cycle-n3.family.json",
        "drisko-cycle-n3.graph",
        "drisko-cycle-n3.manifest.json",
    ]
    manifest = read_manifest(tmp_path / "drisko-cycle-n3.manifest.json")
    assert all(
        c.get("verified") is True
        for c in manifest["claims"]
        if c["claim"] != "note"
    )
    rc = main(["verify", "--manifest", str(tmp_path / "drisko-cycle-n3.manifest.json")])
    assert rc == 0


def test_cli_gen_rejects_bad_params(tmp_path, capsys):
    assert main(["gen", "even-matching", "--n", "3", "--out", str(tmp_path)]) == 2
    assert capsys.readouterr().err


def test_cli_verify_detects_tampering(tmp_path, capsys):
    main(["gen", "drisko", "--n", "3", "--out", str(tmp_path)])
    capsys.readouterr()
    mpath = tmp_path / "drisko-cycle-n3.manifest.json"
    manifest = read_manifest(mpath)
    manifest["sets"][0] = [0, 1, 2]
    write_manifest(mpath, manifest)
    assert main(["verify", "--manifest", str(mpath)]) == 1
    assert capsys.readouterr().err


def test_cli_verify_suite_csv_deterministic(tmp_path, capsys):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    assert main(["verify", "--suite", "fexact-regression", "--csv", str(a)]) == 0
    assert main(["verify", "--suite", "fexact-regression", "--csv", str(b)]) == 0
    capsys.readouterr()
    assert a.read_bytes() == b.read_bytes()
    header = a.read_text().splitlines()[0]
    assert header == "suite,instance,expected,observed,pass,millis"


def test_cli_verify_suite_to_stdout(capsys):
    assert main(["verify", "--suite", "drisko"]) == 0
    out = capsys.readouterr().out
    lines = out.strip().splitlines()
    assert lines[0].startswith("suite,instance")
    assert all(",true," in line for line in lines[1:])


def test_cli_verify_unknown_suite(capsys):
    assert main(["verify", "--suite", "zzz"]) == 2
    assert capsys.readouterr().err


def test_cli_f_exact(tmp_path, capsys):
    gpath = tmp_path / "c4.graph"
    write_graph(gpath, cycle_graph(4))
    assert main(["f-exact", "--graph", str(gpath), "--n", "2", "--m", "2"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["value"] == 3
    assert len(out["witness"]) == 2
    assert out["nodes_explored"] >= 1


def test_cli_f_exact_budget_exit(tmp_path, capsys):
    gpath = tmp_path / "e6.graph"
    write_graph(gpath, make_graph(6, []))
    rc = main([
        "--budget", "3", "f-exact", "--graph", str(gpath), "--n", "2", "--m", "2",
    ])
    assert rc == 1
    assert capsys.readouterr().err


def test_cli_ramsey_witness(capsys):
    assert main(["ramsey-witness", "--r", "3", "--m", "3"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["vertices"] == 5
    assert "p 5" in out["graph"]


def test_cli_sunflower(tmp_path, capsys):
    spath = tmp_path / "sets.json"
    spath.write_text(json.dumps([[1, 2], [1, 3], [1, 4]]))
    assert main(["sunflower", "--sets", str(spath), "--k", "3"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert sorted(out["core"]) == [1]
    assert main(["sunflower", "--sets", str(spath), "--k", "4"]) == 1


def test_cli_sunflower_bad_json(tmp_path, capsys):
    spath = tmp_path / "bad.json"
    spath.write_text("{not json")
    assert main(["sunflower", "--sets", str(spath), "--k", "2"]) == 2
    assert capsys.readouterr().err


def test_cli_seed_changes_nothing_deterministic(capsys):
    assert main(["--seed", "7", "verify", "--suite", "fexact-regression"]) == 0
    capsys.readouterr()
