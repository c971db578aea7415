import io
import subprocess
import sys

import pytest

from palrec.cli import EXAMPLE_PAL3, bench_marks, bench_text, main


def run(argv):
    out, err = io.BytesIO(), io.BytesIO()
    code = main(argv, out, err)
    return code, out.getvalue().decode("latin-1"), err.getvalue().decode("latin-1")


@pytest.fixture
def text_file(tmp_path):
    def make(data):
        p = tmp_path / "input.txt"
        p.write_bytes(data)
        return str(p)

    return make


def test_recognize_per_prefix(text_file):
    code, out, _ = run(["recognize", "--k", "1", text_file(b"aa\n")])
    assert (code, out) == (0, "11\n")
    code, out, _ = run(["recognize", "--k", "2", text_file(b"ab")])
    assert (code, out) == (0, "01\n")
    code, out, _ = run(["recognize", text_file(b"ab")])
    assert (code, out) == (1, "10\n")


def test_recognize_final_on_example(text_file):
    path = text_file(EXAMPLE_PAL3 + b"\n")
    assert run(["recognize", "--k", "3", "--final", path])[:2] == (0, "ACCEPT\n")
    assert run(["recognize", "--k", "1", "--final", path])[:2] == (1, "REJECT\n")


def test_keep_newline(text_file):
    path = text_file(b"a\n")
    assert run(["recognize", path])[1] == "1\n"
    assert run(["recognize", "--keep-newline", path])[1] == "10\n"


def test_engines_and_oracle_print_the_same(text_file):
    path = text_file(EXAMPLE_PAL3)
    outputs = {run(["recognize", "--k", "3", "--engine", kind, path])[1] for kind in ("naive", "nlogn", "linear")}
    outputs.add(run(["oracle", "--k", "3", path])[1])
    assert len(outputs) == 1


def test_trace(text_file):
    code, out, _ = run(["trace", "--k", "2", text_file(b"aba")])
    lines = out.splitlines()
    assert code == 0
    assert lines[0].split("\t") == ["n", "letter", "max_pal", "suffix_centers", "verdicts"]
    assert lines[3].split("\t") == ["3", "a", "2", "2 3 3.5", "10"]


def test_fuzz_clean_and_deterministic():
    argv = ["fuzz", "--k", "3", "--max-ab", "7", "--max-abc", "4",
            "--random-cases", "15", "--random-len", "150", "--seed", "3"]
    first = run(argv)
    assert first[0] == 0
    assert "cases clean" in first[2]
    assert run(argv) == first


def test_fuzz_catches_injected_fault():
    code, _, err = run(["fuzz", "--engine", "linear", "--inject-fault", "--max-ab", "12",
                        "--max-abc", "0", "--random-cases", "0"])
    assert code == 1
    assert err.startswith("MISMATCH string=") and "engine=linear" in err


def test_bench_header_and_rows():
    code, out, err = run(["bench", "--sizes", "500,1000", "--families", "equal,aab"])
    rows = [line.split("\t") for line in out.splitlines()]
    assert code == 0
    assert rows[0][:5] == ["family", "n", "engine", "nanos", "finished"]
    assert len(rows) == 5
    assert all(r[2] == "linear" and r[4] == "1" for r in rows[1:])
    assert "equal" in err


def test_bench_inputs_are_seeded():
    assert bench_text("random26", 1000, 5) == bench_text("random26", 1000, 5)
    assert bench_text("random2", 1000, 5) != bench_text("random2", 1000, 6)
    assert bench_marks(100, 1) == bench_marks(100, 1)
    assert len(bench_text("periodic_pal", 777)) == 777


def test_selftest():
    assert run(["selftest"])[:2] == (0, "selftest ok\n")


@pytest.mark.parametrize("argv", [
    [],
    ["recognize", "--k", "0"],
    ["recognize", "--engine", "quantum"],
    ["bench", "--sizes", "ten"],
    ["bench", "--families", "nope", "--sizes", "10"],
    ["recognize", "/nonexistent/file"],
])
def test_usage_errors(argv):
    assert run(argv)[0] == 2


def test_module_entry_point(text_file):
    path = text_file(b"abba")
    done = subprocess.run([sys.executable, "-m", "palrec", "recognize", "--k", "2", path],
                          capture_output=True)
    assert done.returncode == 1
    assert done.stdout == b"0110\n"
