import pytest

from setpart.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ------------------------------------------------------------------- bell

def test_bell_exact(capsys):
    code, out, _ = run(capsys, "bell", "--n", "13", "--mode", "exact")
    assert code == 0
    assert out == "27644437\n"


def test_bell_exact_trivial(capsys):
    code, out, _ = run(capsys, "bell", "--n", "1", "--mode", "exact")
    assert code == 0
    assert out == "1\n"


def test_bell_approx_integer_part(capsys):
    code, out, _ = run(capsys, "bell", "--n", "7", "--mode", "approx")
    assert code == 0
    assert out.startswith("877.")
    assert "relative error vs exact" in out


def test_bell_bound(capsys):
    code, out, _ = run(capsys, "bell", "--n", "1", "--mode", "bound")
    assert code == 0
    assert out.startswith("1.142614472")


def test_bell_all_three_rows(capsys):
    code, out, _ = run(capsys, "bell", "--n", "10", "--mode", "all")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 3
    assert lines[0].split() == ["exact", "115975"]
    assert lines[1].startswith("moser-wyman")
    assert lines[2].startswith("berend-tassa")


def test_bell_large_n_prints_log_notation(capsys):
    code, out, _ = run(capsys, "bell", "--n", "2000", "--mode", "approx")
    assert code == 0
    assert out.startswith("exp(")


def test_bell_range_errors(capsys):
    code, _, err = run(capsys, "bell", "--n", "0")
    assert code == 2 and "error" in err
    code, _, err = run(capsys, "bell", "--n", "1001", "--mode", "exact")
    assert code == 2 and "error" in err


def test_bell_output_is_deterministic(capsys):
    _, first, _ = run(capsys, "bell", "--n", "9", "--mode", "all")
    _, again, _ = run(capsys, "bell", "--n", "9", "--mode", "all")
    assert first == again


# ------------------------------------------------------------------- enum

def test_enum_rgs_letters(capsys):
    code, out, err = run(capsys, "enum", "--n", "3", "--engine", "reference",
                         "--format", "rgs")
    assert code == 0
    assert out.splitlines() == ["aaa", "aab", "aba", "abb", "abc"]
    assert err.strip() == "enumerated 5 partitions"


def test_enum_blocks(capsys):
    code, out, _ = run(capsys, "enum", "--n", "3", "--engine", "reference",
                       "--format", "blocks")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 5
    assert "{1,2}{3}" in lines
    assert "{1,2,3}" in lines
    assert "{1}{2}{3}" in lines


def test_enum_single(capsys):
    code, out, err = run(capsys, "enum", "--n", "1", "--engine", "djokic")
    assert code == 0
    assert out == "a\n"
    assert "1 partitions" in err


def test_enum_limit(capsys):
    code, out, err = run(capsys, "enum", "--n", "4", "--limit", "2")
    assert code == 0
    assert out.splitlines() == ["aaaa", "aaab"]
    assert "enumerated 2 partitions" in err


def test_enum_every_engine_emits_bell_many_lines(capsys):
    for engine in ("reference", "hutchinson", "semba", "er", "djokic"):
        code, out, _ = run(capsys, "enum", "--n", "4", "--engine", engine)
        assert code == 0
        lines = out.splitlines()
        assert len(lines) == 15
        assert len(set(lines)) == 15


def test_enum_large_n_uses_numeric_labels(capsys):
    code, out, _ = run(capsys, "enum", "--n", "30", "--allow-large",
                       "--limit", "2")
    assert code == 0
    assert out.splitlines() == [",".join(["0"] * 30),
                                ",".join(["0"] * 29 + ["1"])]


def test_enum_range_errors(capsys):
    assert run(capsys, "enum", "--n", "0")[0] == 2
    assert run(capsys, "enum", "--n", "30")[0] == 2
    assert run(capsys, "enum", "--n", "3", "--limit", "0")[0] == 2


# ----------------------------------------------------------------- verify

def test_verify_small_run_passes(capsys):
    code, out, _ = run(capsys, "verify", "--max-n-enum", "5",
                       "--max-n-bell", "20")
    assert code == 0
    assert "MW max relative error" in out
    assert "FAIL" not in out
    assert out.count("PASS") == 17


def test_verify_flag_guards(capsys):
    assert run(capsys, "verify", "--max-n-enum", "0")[0] == 2
    assert run(capsys, "verify", "--max-n-enum", "20")[0] == 2
    assert run(capsys, "verify", "--max-n-bell", "1")[0] == 2


# ------------------------------------------------------------------ bench

def test_bench_single_cell_markdown(capsys):
    code, out, _ = run(capsys, "bench", "--min", "3", "--max", "3",
                       "--engines", "reference", "--reps", "1")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "| engine | 3 |"
    assert lines[2].startswith("| reference | ")


def test_bench_csv_row_count(capsys):
    code, out, _ = run(capsys, "bench", "--min", "2", "--max", "4",
                       "--engines", "semba,er", "--reps", "1",
                       "--warmup", "0", "--output", "csv")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 7  # header + 2 engines x 3 sizes
    assert lines[1].startswith("semba,2,")


def test_bench_all_engines_rows(capsys):
    code, out, _ = run(capsys, "bench", "--min", "5", "--max", "5",
                       "--reps", "1", "--warmup", "0")
    assert code == 0
    rows = [l for l in out.splitlines()[2:] if l.strip()]
    assert len(rows) == 5  # four published engines plus the reference


def test_bench_markdown_grid_8_to_12(capsys):
    code, out, _ = run(capsys, "bench", "--min", "8", "--max", "12",
                       "--engines", "all", "--reps", "2", "--warmup", "0",
                       "--output", "markdown")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "| engine | 8 | 9 | 10 | 11 | 12 |"
    assert len(lines) == 7  # header, separator, five engine rows


def test_bench_outfile(tmp_path, capsys):
    target = tmp_path / "table.csv"
    code, out, _ = run(capsys, "bench", "--min", "3", "--max", "3",
                       "--engines", "djokic", "--reps", "1",
                       "--output", "csv", "--outfile", str(target))
    assert code == 0
    assert out == ""
    content = target.read_text()
    assert content.startswith("engine,n,")
    assert "djokic,3," in content


def test_bench_outfile_failure_is_exit_3(capsys):
    code, _, err = run(capsys, "bench", "--min", "3", "--max", "3",
                       "--engines", "djokic", "--reps", "1",
                       "--outfile", "/nonexistent-dir/out.csv")
    assert code == 3
    assert "cannot write" in err


def test_bench_flag_guards(capsys):
    assert run(capsys, "bench", "--min", "0", "--max", "3")[0] == 2
    assert run(capsys, "bench", "--min", "3", "--max", "2")[0] == 2
    assert run(capsys, "bench", "--min", "2", "--max", "3",
               "--engines", "bogus")[0] == 2
    assert run(capsys, "bench", "--min", "2", "--max", "3",
               "--reps", "0")[0] == 2


def test_enum_survives_a_closed_pipe():
    import subprocess
    import sys

    reader = subprocess.Popen(["head", "-3"], stdin=subprocess.PIPE,
                              stdout=subprocess.PIPE)
    writer = subprocess.Popen(
        [sys.executable, "-c",
         "from setpart.cli import main; raise SystemExit("
         "main(['enum', '--n', '12', '--engine', 'djokic']))"],
        stdout=reader.stdin, stderr=subprocess.DEVNULL)
    out, _ = reader.communicate()
    assert writer.wait() == 0
    assert out.splitlines()[0] == b"a" * 12


# ------------------------------------------------------------------ misc

def test_argparse_rejects_unknown_flags():
    with pytest.raises(SystemExit) as excinfo:
        main(["bell", "--n", "3", "--frobnicate"])
    assert excinfo.value.code == 2


def test_argparse_requires_subcommand():
    with pytest.raises(SystemExit) as excinfo:
        main([])
    assert excinfo.value.code == 2
