import io
import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

from dynlcs import cli
from dynlcs.oracle import lcs_dp

STREAMS = sorted((Path(__file__).parent / "streams").glob("*.txt"))


def run(args):
    out, err = io.StringIO(), io.StringIO()
    code = cli.main([str(a) for a in args], out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def write(tmp_path, text, name="s.txt"):
    p = tmp_path / name
    p.write_text(text)
    return p


@pytest.mark.parametrize("path", STREAMS, ids=[p.stem for p in STREAMS])
def test_bundled_streams_pass_oracle_check(path):
    code, out, err = run([path, "--oracle-check"])
    assert code == 0, err
    stream = cli.parse_stream(path.read_text())
    assert len(out.splitlines()) == len(stream.updates) + 1


def test_partial_example(tmp_path):
    code, out, _ = run([write(tmp_path, "partial\nabaab\n$$$$$\nS 3 a\n")])
    assert code == 0
    first, second = out.splitlines()
    assert first == "0 0 - -"
    idx, length, s, t = second.split()
    assert idx == "1" and int(length) == lcs_dp("$$a$$", "abaab")[0] == 1
    assert "$$a$$"[int(s) - 1] == "abaab"[int(t) - 1] == "a"


def test_zero_ops_prints_initial_answer(tmp_path):
    code, out, _ = run([write(tmp_path, "full\nbaaba\nabaab\n")])
    assert code == 0
    assert out.splitlines() == ["0 4 2 1"]  # "baab" in both


def test_json_output(tmp_path):
    code, out, _ = run([write(tmp_path, "full\nab\ncd\nS 1 b\n"), "--json"])
    assert code == 0
    rows = [json.loads(x) for x in out.splitlines()]
    assert rows[0] == {"index": 0, "length": 0, "s_pos": None, "t_pos": None}
    assert rows[1] == {"index": 1, "length": 1, "s_pos": 1, "t_pos": 2}


@pytest.mark.parametrize("text,line,needle", [
    ("full\nab\nab\nS x a\n", 4, "not an integer"),
    ("full\nab\nab\nS 3 a\n", 4, "outside"),
    ("full\nab\nab\nS 0 a\n", 4, "outside"),
    ("full\nab\nab\n\nT 1 ab\n", 5, "single character"),
    ("full\nab\nab\nU 1 a\n", 4, "target"),
    ("full\nab\nab\nS 1\n", 4, "expected"),
    ("partial\nab\nab\nT 1 a\n", 4, "static"),
    ("both\nab\nab\n", 1, "mode"),
    ("full\n\nab\n", 2, "empty"),
    ("full\nab\na b\n", 3, "space"),
    ("full\nab\n", 3, "expected"),
])
def test_input_errors_name_the_line(tmp_path, text, line, needle):
    code, out, err = run([write(tmp_path, text)])
    assert code == 2
    assert out == ""
    assert ":%d:" % line in err and needle in err


def test_missing_file_and_missing_stream(tmp_path):
    assert run([tmp_path / "nope.txt"])[0] == 2
    assert run([])[0] == 2


def test_seed_range(tmp_path):
    p = write(tmp_path, "full\nab\nba\nS 1 b\n")
    assert run([p, "--seed", str(2 ** 64 - 1)])[0] == 0
    assert run([p, "--seed", "-1"])[0] == 2
    assert run([p, "--seed", str(2 ** 64)])[0] == 2


def test_seed_does_not_change_answers(tmp_path):
    p = STREAMS[0]
    a = run([p, "--seed", "1"])[1]
    b = run([p, "--seed", "99"])[1]
    assert [x.split()[:2] for x in a.splitlines()] == [x.split()[:2] for x in b.splitlines()]


def test_mismatch_exits_1(tmp_path, monkeypatch):
    p = write(tmp_path, "full\nab\nab\nS 1 b\nS 2 a\n")
    real = cli.Runner.apply

    def broken(self, target, pos, letter):
        ans = real(self, target, pos, letter)
        self.answer = ans._replace(length=ans.length + 1)
        return self.answer

    monkeypatch.setattr(cli.Runner, "apply", broken)
    code, out, err = run([p, "--oracle-check"])
    assert code == 1
    assert len(out.splitlines()) == 2  # initial answer plus the offending update
    assert "line 4" in err and "mismatch" in err


def test_output_identical_across_processes():
    path = max(STREAMS, key=lambda p: p.stat().st_size)
    outs = []
    for hashseed in ("0", "12345"):
        env = dict(os.environ, PYTHONHASHSEED=hashseed)
        res = subprocess.run([sys.executable, "-m", "dynlcs", str(path), "--seed", "7"],
                             capture_output=True, env=env, check=True)
        outs.append(res.stdout)
    assert outs[0] == outs[1] and outs[0]


def test_bench_csv():
    code, out, _ = run(["--bench", "--sizes", "16,32", "--ops", "5"])
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "mode,n,ops,mean_us,median_us,p99_us"
    assert [ln.split(",")[:3] for ln in lines[1:]] == [
        ["partial", "16", "5"], ["partial", "32", "5"], ["full", "16", "5"], ["full", "32", "5"]]
    assert all(float(v) >= 0 for ln in lines[1:] for v in ln.split(",")[3:])


def test_bench_stream_and_errors(tmp_path):
    code, out, _ = run(["--bench", write(tmp_path, "partial\nabc\nabc\nS 1 c\nS 2 c\n")])
    assert code == 0 and out.splitlines()[1].startswith("partial,3,2,")
    assert run(["--bench", "--sizes", "0"])[0] == 2
    assert run(["--bench", "--ops", "-1"])[0] == 2


def test_help_documents_second_run(capsys):
    assert run(["--help"])[0] == 0
    assert "second run" in capsys.readouterr().out
