"""Command-line behavior: outputs, determinism, and exit codes."""

import json

import pytest

from pseudoprimes.cli import run


def _capture(capsys, argv):
    code = run(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_union_density_output(capsys):
    code, out, _ = _capture(capsys, ["ordowski", "union-density", "--k", "10"])
    assert code == 0
    assert out == "220163/396900 0.554706\n"


def test_sb_density_output(capsys):
    code, out, _ = _capture(capsys, ["ordowski", "sb-density", "--b", "2"])
    assert code == 0 and out == "1/4 0.250000\n"


def test_scientific_shorthand_flags(capsys):
    code, out, _ = _capture(capsys, ["ordowski", "count", "--limit", "1e4"])
    assert code == 0
    assert out.splitlines()[1] == "10000,6169,8962"


def test_count_determinism_across_segments(capsys):
    runs = []
    for segments in ("1", "3", "7"):
        code, out, _ = _capture(
            capsys,
            ["psp", "count", "--base", "2", "--mod", "8", "--limit", "1e5",
             "--segments", segments],
        )
        assert code == 0
        runs.append(out)
    assert runs[0] == runs[1] == runs[2]
    code, again, _ = _capture(
        capsys, ["psp", "count", "--base", "2", "--mod", "8", "--limit", "1e5"]
    )
    assert again == runs[0]


def test_count_csv_and_json_agree(capsys):
    _, csv_out, _ = _capture(capsys, ["psp", "count", "--mod", "4", "--limit", "1e5"])
    _, json_out, _ = _capture(
        capsys, ["psp", "count", "--mod", "4", "--limit", "1e5", "--format", "json"]
    )
    csv_counts = [int(line.split(",")[4]) for line in csv_out.strip().split("\n")[1:]]
    json_counts = [row["count"] for row in json.loads(json_out)]
    assert csv_counts == json_counts == [0, 68, 0, 10]


def test_class_check_inadmissible(capsys):
    code, out, _ = _capture(
        capsys, ["psp", "class-check", "--base", "2", "--mod", "20", "--class", "15"]
    )
    assert code == 0
    assert "h=4" in out and "h_divides=false" in out and "admissible=false" in out


def test_class_check_json(capsys):
    code, out, _ = _capture(
        capsys,
        ["psp", "class-check", "--base", "2", "--mod", "16", "--class", "6",
         "--format", "json"],
    )
    payload = json.loads(out)
    assert payload["jacobi"] == "fails" and payload["admissible"] is False


def test_even_listing(capsys):
    code, out, _ = _capture(capsys, ["psp", "even", "--limit", "2e5"])
    assert code == 0 and out == "161038\n"
    code, out, _ = _capture(
        capsys, ["psp", "even", "--limit", "2e5", "--nine-filter", "none"]
    )
    assert out == "161038\n"


def test_empty_classes_csv(capsys):
    code, out, _ = _capture(
        capsys, ["psp", "empty-classes", "--base", "2", "--mod", "9", "--limit", "1e5"]
    )
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "modulus,class,predicted_by_lemma"
    assert "9,0,true" in lines
    assert "4,0,true" in lines


def test_ingest_round_trip(tmp_path, capsys):
    path = tmp_path / "list.txt"
    path.write_text("561\n645\n1105\n1387\n")
    code, out, _ = _capture(
        capsys, ["psp", "ingest", "--input", str(path), "--mod", "4"]
    )
    assert code == 0
    rows = out.strip().split("\n")[1:]
    assert rows[1].startswith("2,4,1,1387,3,")
    assert rows[3].startswith("2,4,3,1387,1,")


def test_ingest_bad_file_is_usage_error(tmp_path, capsys):
    path = tmp_path / "bad.txt"
    path.write_text("5\n3\n")
    code, _, err = _capture(capsys, ["psp", "ingest", "--input", str(path), "--mod", "2"])
    assert code == 2 and "sorted" in err


def test_group_check_output(capsys):
    code, out, _ = _capture(capsys, ["ordowski", "group-check", "--group", "2:1,2"])
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "p=2 j=0 count=1 ratio=1/1 cap=2"
    assert lines[-1] == "N=7/2 3.500000 bound=6/1 6.000000 ok=true"


def test_group_check_composite_order(capsys):
    code, out, _ = _capture(
        capsys, ["ordowski", "group-check", "--group", "2:1,2", "--group", "3:1"]
    )
    assert code == 0 and out.strip().split("\n")[-1].endswith("ok=true")


def test_capacity_exit_code(capsys):
    code, _, err = _capture(capsys, ["ordowski", "c1", "--b-max", "1e9"])
    assert code == 3 and "capacity" in err


def test_usage_exit_codes(capsys):
    assert _capture(capsys, ["psp", "count", "--mod", "4"])[0] == 2  # missing --limit
    assert _capture(capsys, ["psp", "count", "--badflag", "1"])[0] == 2
    assert _capture(capsys, ["nonsense"])[0] == 2
    assert _capture(capsys, ["psp", "count", "--mod", "4", "--limit", "1.5"])[0] == 2
    code, _, err = _capture(
        capsys, ["psp", "class-check", "--mod", "4", "--class", "9"]
    )
    assert code == 2 and "class" in err


def test_help_exits_zero(capsys):
    assert _capture(capsys, ["--help"])[0] == 0
    assert _capture(capsys, ["psp", "--help"])[0] == 0


def test_tail_bound_cli(capsys):
    code, out, _ = _capture(capsys, ["ordowski", "tail-bound", "--lo", "1e4", "--hi", "2e4"])
    assert code == 0
    num, _dec = out.split()
    assert "/" in num
