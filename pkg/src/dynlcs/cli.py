"""Command-line driver: replay update streams, check them against the DP oracle, time them.

Stream file format::

    partial | full        engine to use
    <T>                   initial T
    <S>                   initial S (in partial mode letters absent from T are foreign)
    <S|T> <pos> <letter>  one substitution per line, 1-based; T edits need "full"

Blank update lines are skipped.  Output is one line per answer, starting with
index 0 for the initial strings: ``<index> <length> <s_pos> <t_pos>``, with
``-`` for the positions when the LCS is empty.
"""

from __future__ import annotations

import argparse
import json
import random
import statistics
import sys
import time
from typing import List, NamedTuple, Optional, Sequence, TextIO

from .full_lcs import FullEngine
from .oracle import is_common_substring, lcs_dp
from .partial_lcs import PartialLcs

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT = 0, 1, 2
MODES = ("partial", "full")
U64 = 1 << 64

BENCH_HELP = """\
benchmark mode: time random substitutions and print CSV with columns
mode,n,ops,mean_us,median_us,p99_us.  Without a STREAM, random instances
with |S| = |T| = n over a 4-letter alphabet are generated for each size in
--sizes; with a STREAM, its updates are timed.  Every measurement is run
twice on a fresh engine and only the second run is reported (the first one
warms caches and the allocator).  Initialisation is not timed."""


class InputError(ValueError):
    def __init__(self, line: int, msg: str):
        super().__init__("line %d: %s" % (line, msg))
        self.line, self.msg = line, msg


class Update(NamedTuple):
    target: str
    pos: int
    letter: str
    line: int


class Stream(NamedTuple):
    mode: str
    T: str
    S: str
    updates: List[Update]


def _check_letters(s: str, line: int, what: str):
    if not s:
        raise InputError(line, "%s is empty" % what)
    for c in s:
        if c.isspace() or not c.isprintable():
            raise InputError(line, "%s contains a space or unprintable letter %r" % (what, c))


def parse_stream(text: str) -> Stream:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    lines = [ln.rstrip("\r") for ln in lines]
    if len(lines) < 3:
        raise InputError(len(lines) + 1, "expected a mode line, T and S")
    mode = lines[0].strip()
    if mode not in MODES:
        raise InputError(1, "mode must be 'partial' or 'full', got %r" % lines[0])
    T, S = lines[1], lines[2]
    _check_letters(T, 2, "T")
    _check_letters(S, 3, "S")
    size = {"S": len(S), "T": len(T)}
    updates = []
    for no, ln in enumerate(lines[3:], 4):
        parts = ln.split()
        if not parts:
            continue
        if len(parts) != 3:
            raise InputError(no, "expected '<S|T> <pos> <letter>', got %r" % ln)
        target, pos, letter = parts
        if target not in size:
            raise InputError(no, "target must be S or T, got %r" % target)
        if target == "T" and mode == "partial":
            raise InputError(no, "T is static in partial mode")
        try:
            p = int(pos)
        except ValueError:
            raise InputError(no, "position %r is not an integer" % pos) from None
        if not 1 <= p <= size[target]:
            raise InputError(no, "position %d outside [1, %d]" % (p, size[target]))
        if len(letter) != 1:
            raise InputError(no, "letter must be a single character, got %r" % letter)
        _check_letters(letter, no, "letter")
        updates.append(Update(target, p, letter, no))
    return Stream(mode, T, S, updates)


class Runner:
    """Wraps either engine behind one substitute/answer interface."""

    def __init__(self, mode: str, T: Sequence, S: Sequence, seed: int):
        self.mode = mode
        self.S, self.T = list(S), list(T)
        if mode == "partial":
            self.eng = PartialLcs.from_strings(T, S)
        else:
            self.eng = FullEngine(S, T, seed=seed)
        self.answer = self.eng.current_lcs()

    def apply(self, target: str, pos: int, letter):
        (self.S if target == "S" else self.T)[pos - 1] = letter
        if self.mode == "partial":
            self.answer = self.eng.substitute(pos, letter)
        else:
            self.answer = self.eng.substitute(target, pos, letter)
        return self.answer

    def mismatch(self) -> Optional[str]:
        """Why the current answer disagrees with the DP oracle, or None."""
        a = self.answer
        want = lcs_dp(self.S, self.T)[0]
        if a.length != want:
            return "length %d, oracle says %d" % (a.length, want)
        if want == 0:
            if a.s_pos is not None or a.t_pos is not None:
                return "positions given for an empty LCS"
        elif not is_common_substring(self.S, self.T, a.length, a.s_pos, a.t_pos):
            return "S[%d..] and T[%d..] do not match over %d letters" % (a.s_pos, a.t_pos, a.length)
        return None


def format_answer(index: int, ans, as_json: bool) -> str:
    if as_json:
        return json.dumps({"index": index, "length": ans.length, "s_pos": ans.s_pos, "t_pos": ans.t_pos})
    dash = lambda v: "-" if v is None else str(v)
    return "%d %d %s %s" % (index, ans.length, dash(ans.s_pos), dash(ans.t_pos))


def run_stream(stream: Stream, out: TextIO, err: TextIO, oracle_check=False, as_json=False,
               seed=0, name="<stream>") -> int:
    run = Runner(stream.mode, stream.T, stream.S, seed)
    steps = [(0, None)] + [(k, u) for k, u in enumerate(stream.updates, 1)]
    for k, u in steps:
        if u is not None:
            run.apply(u.target, u.pos, u.letter)
        out.write(format_answer(k, run.answer, as_json) + "\n")
        if oracle_check:
            why = run.mismatch()
            if why is not None:
                where = "initial strings" if u is None else "line %d" % u.line
                err.write("dynlcs: %s: oracle mismatch after update %d (%s): %s\n" % (name, k, where, why))
                return EXIT_MISMATCH
    return EXIT_OK


# ------------------------------------------------------------------ benchmark
def _time_updates(mode, T, S, updates, seed) -> List[float]:
    run = Runner(mode, T, S, seed)
    clock = time.perf_counter
    times = []
    for target, pos, letter in updates:
        t0 = clock()
        run.apply(target, pos, letter)
        times.append((clock() - t0) * 1e6)
    return times


def _summary(times: List[float]):
    if not times:
        return 0.0, 0.0, 0.0
    s = sorted(times)
    p99 = s[min(len(s) - 1, int(0.99 * len(s)))]
    return statistics.fmean(s), statistics.median(s), p99


def bench_rows(mode: str, sizes: Sequence[int], ops: int, seed: int, alphabet="abcd"):
    """(mode, n, ops, mean, median, p99) per size, second of two runs."""
    rows = []
    for n in sizes:
        rng = random.Random("%d/%s/%d" % (seed, mode, n))
        T = "".join(rng.choice(alphabet) for _ in range(n))
        S = "".join(rng.choice(alphabet) for _ in range(n))
        targets = "S" if mode == "partial" else "ST"
        updates = [(t, rng.randint(1, n), rng.choice(alphabet))
                   for t in (rng.choice(targets) for _ in range(ops))]
        _time_updates(mode, T, S, updates, seed)
        times = _time_updates(mode, T, S, updates, seed)
        rows.append((mode, n, len(times)) + _summary(times))
    return rows


def bench_stream(stream: Stream, seed: int):
    n = max(len(stream.S), len(stream.T))
    ups = [(u.target, u.pos, u.letter) for u in stream.updates]
    _time_updates(stream.mode, stream.T, stream.S, ups, seed)
    times = _time_updates(stream.mode, stream.T, stream.S, ups, seed)
    return [(stream.mode, n, len(times)) + _summary(times)]


def write_csv(rows, out: TextIO):
    out.write("mode,n,ops,mean_us,median_us,p99_us\n")
    for mode, n, ops, mean, med, p99 in rows:
        out.write("%s,%d,%d,%.1f,%.1f,%.1f\n" % (mode, n, ops, mean, med, p99))


# ----------------------------------------------------------------------- main
def _u64(text: str) -> int:
    try:
        v = int(text, 0)
    except ValueError:
        raise argparse.ArgumentTypeError("not an integer: %r" % text) from None
    if not 0 <= v < U64:
        raise argparse.ArgumentTypeError("seed must fit in 64 unsigned bits")
    return v


def _sizes(text: str) -> List[int]:
    try:
        vals = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError("sizes must be comma-separated integers") from None
    if not vals or min(vals) < 1:
        raise argparse.ArgumentTypeError("sizes must be positive")
    return vals


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="dynlcs",
        description="Replay a substitution stream and print the longest common substring after every update.",
        epilog=BENCH_HELP + "\n\nexit codes: 0 ok, 1 oracle mismatch, 2 input error.",
        formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("stream", nargs="?", help="stream file ('-' for stdin)")
    ap.add_argument("--oracle-check", action="store_true",
                    help="compare every answer with the DP oracle; exit 1 on the first mismatch")
    ap.add_argument("--json", action="store_true", help="one JSON object per line")
    ap.add_argument("--seed", type=_u64, default=0, help="grammar randomness seed (unsigned 64-bit)")
    ap.add_argument("--bench", action="store_true", help="benchmark mode (see below)")
    ap.add_argument("--mode", choices=("partial", "full", "both"), default="both",
                    help="engines to benchmark without a stream (default both)")
    ap.add_argument("--sizes", type=_sizes, default=[256, 1024],
                    help="comma-separated string lengths for --bench (default 256,1024)")
    ap.add_argument("--ops", type=int, default=200, help="substitutions per size for --bench")
    return ap


def main(argv: Optional[Sequence[str]] = None, out: TextIO = None, err: TextIO = None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return EXIT_INPUT if e.code else EXIT_OK
    stream = None
    if args.stream is not None:
        name = args.stream
        try:
            if name == "-":
                text = sys.stdin.read()
            else:
                with open(name, encoding="utf-8") as fh:
                    text = fh.read()
            stream = parse_stream(text)
        except OSError as e:
            err.write("dynlcs: cannot read %s: %s\n" % (name, e.strerror or e))
            return EXIT_INPUT
        except UnicodeDecodeError:
            err.write("dynlcs: %s: not valid UTF-8\n" % name)
            return EXIT_INPUT
        except InputError as e:
            err.write("dynlcs: %s:%d: %s\n" % (name, e.line, e.msg))
            return EXIT_INPUT
    if args.bench:
        if args.ops < 0:
            err.write("dynlcs: --ops must be non-negative\n")
            return EXIT_INPUT
        if stream is not None:
            rows = bench_stream(stream, args.seed)
        else:
            modes = MODES if args.mode == "both" else (args.mode,)
            rows = [r for m in modes for r in bench_rows(m, args.sizes, args.ops, args.seed)]
        write_csv(rows, out)
        return EXIT_OK
    if stream is None:
        err.write("dynlcs: a stream file is required unless --bench is given\n")
        return EXIT_INPUT
    return run_stream(stream, out, err, args.oracle_check, args.json, args.seed, args.stream)


if __name__ == "__main__":
    sys.exit(main())
