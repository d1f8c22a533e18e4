import io
import json

import pytest

from tourney import VerdictReport, canonical_code, random_tournament
from tourney.cli import format_record, main, parse_record


def run(capsys, *argv):
    rc = main(list(argv))
    out = capsys.readouterr()
    return rc, out.out, out.err


def test_record_frozen_values(c3, t7):
    assert format_record(c3) == "3 A"
    assert format_record(t7) == "7 E39DF8"
    assert parse_record("3 A") == c3
    assert parse_record("7 E39DF8") == t7


def test_record_single_vertex():
    t = parse_record("1")
    assert t.n == 1
    assert format_record(t) == "1"


def test_record_round_trip(rng):
    for n in range(1, 14):
        for _ in range(25):
            t = random_tournament(n, rng)
            assert parse_record(format_record(t)) == t


def test_record_accepts_lowercase(c3):
    assert parse_record("3 a") == c3


@pytest.mark.parametrize(
    "line",
    [
        "",
        "x",
        "0 A",
        "65 00",
        "3",
        "3 AB",
        "3 G",
        "3 B",
        "2 8 9",
        "1 0",
        "-3 A",
    ],
)
def test_record_rejects_malformed_lines(line):
    with pytest.raises(ValueError):
        parse_record(line)


def test_gen_named(capsys):
    rc, out, _ = run(capsys, "gen", "--named", "C3")
    assert rc == 0 and out.strip() == "3 A"
    rc, out, _ = run(capsys, "gen", "--named", "T", "--size", "7")
    assert rc == 0 and out.strip() == "7 E39DF8"
    rc, out, _ = run(capsys, "gen", "--named", "P7")
    assert rc == 0 and out.strip().startswith("7 ")


def test_gen_family(capsys):
    rc, out, _ = run(capsys, "gen", "--family", "H", "--components", "1,1")
    assert rc == 0 and out.strip() == "7 AE55F8"
    rc, out, _ = run(capsys, "gen", "--family", "L", "--components", "1,1,1")
    assert rc == 0 and out.strip().startswith("9 ")


def test_gen_usage_errors(capsys):
    cases = [
        ("gen", "--named", "T"),  # T needs --size
        ("gen", "--named", "C3", "--size", "3"),  # C3 has a fixed size
        ("gen",),  # one of --named/--family required
        ("gen", "--named", "C3", "--family", "H"),
        ("gen", "--family", "H"),  # missing --components
        ("gen", "--family", "H", "--components", "1"),
        ("gen", "--family", "H", "--components", "one,two"),
        ("gen", "--named", "T", "--size", "6"),
    ]
    for argv in cases:
        rc, _, err = run(capsys, *argv)
        assert rc == 2 and "error" in err


def test_analyze_text_output(capsys, monkeypatch, c3):
    monkeypatch.setattr("sys.stdin", io.StringIO("3 A\n"))
    rc, out, _ = run(capsys, "analyze")
    assert rc == 0
    assert "n: 3" in out
    assert "indecomposable: true" in out
    assert "support: {0, 1, 2}" in out
    assert "w5_size: 0" in out
    assert "c_invariant: -" in out
    assert "canonical: 0340" in out
    assert "nontrivial_intervals: 0" in out


def test_analyze_json_output(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("3 A\n2 8\n"))
    rc, out, _ = run(capsys, "analyze", "--json")
    assert rc == 0
    lines = out.strip().splitlines()
    assert len(lines) == 2
    first, second = (json.loads(s) for s in lines)
    want_keys = {
        "n",
        "indecomposable",
        "support",
        "w5_set",
        "w5_size",
        "family_t",
        "c_invariant",
        "canonical",
    }
    assert set(first) == set(second) == want_keys
    assert first["n"] == 3 and first["support"] == [0, 1, 2]
    assert first["family_t"] is False and first["c_invariant"] is None
    assert second["n"] == 2 and second["support"] is None


def test_analyze_dot_output(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("3 A\n"))
    rc, out, _ = run(capsys, "analyze", "--dot")
    assert rc == 0
    assert out.startswith("digraph tournament_1 {")
    assert "0 -> 1;" in out and "2 -> 0;" in out
    assert out.strip().endswith("}")


def test_analyze_reads_files_and_skips_comments(capsys, tmp_path):
    p = tmp_path / "records.txt"
    p.write_text("# heading\n\n3 A\n\n# more\n7 E39DF8\n")
    rc, out, _ = run(capsys, "analyze", str(p))
    assert rc == 0
    assert out.count("# tournament") == 2


def test_analyze_reports_parse_errors_with_line_numbers(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("3 A\n3 ZZ\n"))
    rc, _, err = run(capsys, "analyze")
    assert rc == 2
    assert "line 2" in err


def test_analyze_flag_conflicts_and_missing_file(capsys, tmp_path):
    rc, _, err = run(capsys, "analyze", "--json", "--dot")
    assert rc == 2 and "mutually exclusive" in err
    rc, _, err = run(capsys, "analyze", str(tmp_path / "absent.txt"))
    assert rc == 2 and "error" in err


def test_enumerate_lists_classes(capsys):
    rc, out, _ = run(capsys, "enumerate", "--n", "5", "--filter", "indec")
    assert rc == 0
    lines = out.strip().splitlines()
    assert lines[-1] == "# count=3"
    assert len(lines) == 4
    assert all(line.startswith("5 ") for line in lines[:-1])
    rc, out, _ = run(capsys, "enumerate", "--n", "1")
    assert out.strip().splitlines() == ["1", "# count=1"]


def test_enumerate_family_filter(capsys):
    rc, out, _ = run(capsys, "enumerate", "--n", "7", "--filter", "family-t")
    assert rc == 0
    assert out.strip().splitlines()[-1] == "# count=6"


def test_enumerate_flag_composition(capsys):
    rc, out, _ = run(capsys, "enumerate", "--n", "5", "--filter", "omits-w5", "--indec")
    assert rc == 0
    lines = out.strip().splitlines()
    assert lines[-1] == "# count=2"
    for line in lines[:-1]:
        t = parse_record(line)
        from tourney import is_indecomposable, w5_vertex_set

        assert is_indecomposable(t)
        assert not w5_vertex_set(t).w5_vertices


def test_enumerate_usage_errors(capsys):
    rc, _, err = run(capsys, "enumerate", "--n", "0")
    assert rc == 2 and "positive" in err
    rc, _, err = run(capsys, "enumerate", "--n", "10")
    assert rc == 2 and "--force" in err


def test_verify_latka_lists_matches(capsys):
    rc, out, _ = run(capsys, "verify", "--theorem", "latka", "--n", "7")
    assert rc == 0
    assert "verdict: PASS" in out
    matched = sorted(
        line.split(": ", 1)[1] for line in out.splitlines() if line.startswith("matched")
    )
    assert matched == ["7 046830", "7 1C6200", "7 1D2510"]


def test_verify_other_theorems(capsys):
    rc, out, _ = run(capsys, "verify", "--theorem", "hik", "--max-n", "6")
    assert rc == 0 and "verdict: PASS" in out
    rc, out, _ = run(capsys, "verify", "--theorem", "main", "--n", "7")
    assert rc == 0 and "verdict: PASS" in out
    assert "count family_classes: 6" in out
    rc, out, _ = run(capsys, "verify", "--theorem", "lemmas", "--max-n", "5")
    assert rc == 0 and "verdict: PASS" in out


def test_verify_usage_errors(capsys):
    rc, _, err = run(capsys, "verify", "--theorem", "latka")
    assert rc == 2 and "--n" in err
    rc, _, err = run(capsys, "verify", "--theorem", "hik")
    assert rc == 2 and "--max-n" in err
    rc, _, err = run(capsys, "verify", "--theorem", "main")
    assert rc == 2 and "--n" in err
    rc, _, err = run(capsys, "verify", "--theorem", "latka", "--n", "4")
    assert rc == 2 and "error" in err


def test_verify_failure_renders_counterexamples(capsys, monkeypatch, c3):
    fake = VerdictReport(
        theorem="latka",
        scope="n=5",
        ok=False,
        counterexamples=(canonical_code(c3),),
        counts={"classes": 12},
    )
    monkeypatch.setattr("tourney.cli.verify_latka", lambda n, jobs=None: fake)
    rc, out, _ = run(capsys, "verify", "--theorem", "latka", "--n", "5")
    assert rc == 1
    assert "verdict: FAIL" in out
    # counterexamples print the canonical representative of the class
    line = next(s for s in out.splitlines() if s.startswith("counterexample: "))
    rendered = parse_record(line.removeprefix("counterexample: "))
    assert canonical_code(rendered) == canonical_code(c3)
