"""Acceptance criteria, one test each; every test reports a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -s`` to see the lines as they are
produced; they are also collected in the "acceptance criteria" section of the
terminal summary.

Environment knobs:

* ``DYNLCS_FULL_EXHAUSTIVE=1`` - keep checking full-dynamic updates after the
  time budget is exhausted (the criterion still fails on time, but every one
  of the 20 000 answers is verified).
* ``DYNLCS_SCALING_FULL_SIZES`` - comma-separated string lengths for the
  full-dynamic scaling measurement (default ``1024,4096``).
"""

import io
import math
import os
import random
import time
import warnings
from pathlib import Path

from dynlcs import cli
from dynlcs.anchors import anchoring_failures, default_window, family_from_scratch
from dynlcs.bicolored import BicoloredTrees
from dynlcs.full_lcs import FullEngine
from dynlcs.geom import BichromaticSet, ColoredPoint
from dynlcs.grammar import Grammar
from dynlcs.hia import WeightedTree, build_hia
from dynlcs.oracle import bichromatic_brute, bicolored_brute, hia_brute, is_common_substring, lcs_dp
from dynlcs.partial_lcs import PartialLcs

ALPHABET = "abcd"
ARTIFACTS = Path(__file__).resolve().parent.parent / "artifacts"


def rand_word(rng, letters, n):
    return "".join(rng.choice(letters) for _ in range(n))


def answer_ok(S, T, ans):
    want = lcs_dp(S, T)[0]
    if ans.length != want:
        return False
    return is_common_substring(S, T, ans.length, ans.s_pos, ans.t_pos)


# --------------------------------------------------------------- partial
def test_partial_dynamic_correctness(report):
    rng = random.Random(1001)
    engine, bad, checked = 0.0, [], 0
    for inst in range(50):
        T = rand_word(rng, ALPHABET, 512)
        S = ["\0"] * 512  # every position starts foreign
        t0 = time.perf_counter()
        eng = PartialLcs(T, len(S))
        engine += time.perf_counter() - t0
        for step in range(2000):
            pos, c = rng.randint(1, len(S)), rng.choice(ALPHABET)
            S[pos - 1] = c
            t0 = time.perf_counter()
            ans = eng.substitute(pos, c)
            engine += time.perf_counter() - t0
            checked += 1
            if not answer_ok(S, T, ans):
                bad.append((inst, step))
    ok = not bad and engine <= 60
    report("partial", ok, "%d answers checked, %d wrong; engine time %.1f s (target <= 60 s)"
           % (checked, len(bad), engine))
    assert ok, bad[:5]


# ------------------------------------------------------------------ full
def test_full_dynamic_correctness(report):
    budget = 120.0
    exhaustive = os.environ.get("DYNLCS_FULL_EXHAUSTIVE") == "1"
    rng = random.Random(2002)
    engine, bad, checked, stopped = 0.0, [], 0, False
    for inst in range(20):
        S = list(rand_word(rng, ALPHABET, 256))
        T = list(rand_word(rng, ALPHABET, 256))
        t0 = time.perf_counter()
        eng = FullEngine(S, T, seed=inst)
        engine += time.perf_counter() - t0
        for step in range(1000):
            which = rng.choice("ST")
            pos, c = rng.randint(1, 256), rng.choice(ALPHABET)
            (S if which == "S" else T)[pos - 1] = c
            t0 = time.perf_counter()
            ans = eng.substitute(which, pos, c)
            engine += time.perf_counter() - t0
            checked += 1
            if not answer_ok(S, T, ans):
                bad.append((inst, step))
            if engine > budget and not exhaustive:
                stopped = True
                break
        if stopped:
            break
    ok = not bad and not stopped and engine <= budget
    if stopped:
        detail = ("time budget of %.0f s used up after %d of 20000 updates (%d wrong so far); "
                  "about %.0f ms per update" % (budget, checked, len(bad), 1000 * engine / checked))
    else:
        detail = "%d answers checked, %d wrong; engine time %.1f s (target <= %.0f s)" % (
            checked, len(bad), engine, budget)
    report("full", ok, detail)
    assert ok, detail


# ------------------------------------------------------------- anchoring
def test_anchoring_exhaustive(report):
    rng = random.Random(3003)
    K = default_window()
    failures = []
    for inst in range(200):
        g = Grammar(seed=inst)
        sigma = rng.choice(["ab", "abc", "abcd"])
        if rng.random() < 0.25:  # periodic strings stress the run handling
            base = rand_word(rng, sigma, rng.randint(1, 4))
            S = (base * 64)[:rng.randint(1, 64)]
            T = (base * 64)[rng.randint(0, 4):][:rng.randint(1, 60)]
        else:
            S = rand_word(rng, sigma, rng.randint(1, 64))
            T = rand_word(rng, sigma, rng.randint(1, 64))
        fs = family_from_scratch(g, g.makestring(S), K)
        ft = family_from_scratch(g, g.makestring(T), K)
        miss = anchoring_failures(S, T, fs, ft)
        if miss:
            failures.append((S, T, miss))
    ok = not failures
    report("anchoring", ok, "200 string pairs, %d with an unanchored common substring (K = %d)"
           % (len(failures), K))
    assert ok, failures[:3]


# --------------------------------------------------------------- grammar
def test_grammar_determinism(report):
    rng = random.Random(4004)
    g = Grammar(seed=44)
    mism = height_bad = dec_bad = steps = 0
    height_bad_n = 0  # longest string that broke the height bound
    worst_height = worst_dec = 0.0
    pool = []
    for _ in range(1000):
        s = list(rand_word(rng, rng.choice(["ab", "abc", "abcd"]), rng.randint(1, 256)))
        h = g.makestring(s)
        for _ in range(8):
            r = rng.random()
            if r < 0.6:
                i, c = rng.randint(1, len(s)), rng.choice("abcd")
                h, s = g.substitute(h, i, c), s[:i - 1] + [c] + s[i:]
            elif r < 0.8 and len(s) > 1:
                i = rng.randint(1, len(s) - 1)
                left, right = g.split(h, i)
                h, s = g.concat(right, left), s[i:] + s[:i]
            else:
                extra = list(rand_word(rng, "ab", rng.randint(1, 20)))
                h, s = g.concat(h, g.makestring(extra)), s + extra
            steps += 1
            if h.root != g.makestring(s).root:
                mism += 1
            n = len(s)
            if n >= 2:
                worst_height = max(worst_height, g.height(h) / math.log2(n))
                if g.height(h) > 16 * math.log2(n):
                    height_bad += 1
                    height_bad_n = max(height_bad_n, n)
                a = rng.randint(1, n)
                b = rng.randint(a, n)
                up, down = g.decompose(h, a, b)
                worst_dec = max(worst_dec, (len(up) + len(down) - 4) / math.log2(n))
                if len(up) + len(down) > 8 * math.log2(n) + 4:
                    dec_bad += 1
        pool.append((h, s))
    lcp_bad = 0
    for _ in range(10 ** 4):
        (h1, s1), (h2, s2) = rng.choice(pool), rng.choice(pool)
        if rng.random() < 0.5:  # give the pair a long common prefix
            k = rng.randint(0, len(s1))
            s2 = s1[:k] + s2
            h2 = g.makestring(s2)
        k = 0
        while k < min(len(s1), len(s2)) and s1[k] == s2[k]:
            k += 1
        if g.lcp(h1, h2) != k:
            lcp_bad += 1
    ok = not (mism or height_bad or dec_bad or lcp_bad)
    report("grammar", ok, "%d edit steps: %d root mismatches; height/log2 n <= %.2f (%d over 16, all at n <= %d); "
           "(decomposition-4)/log2 n <= %.2f (%d over 8); lcp: %d of 10000 wrong"
           % (steps, mism, worst_height, height_bad, height_bad_n, worst_dec, dec_bad, lcp_bad))
    assert ok


# ------------------------------------------------------------------- HIA
def _random_tree(rng, n, labels):
    parent = [-1] + [rng.randrange(v) for v in range(1, n)]
    weight = [0] * n
    for v in range(1, n):
        weight[v] = weight[parent[v]] + rng.randint(1, 3)
    kids = set(parent[1:])
    leaves = [v for v in range(n) if v not in kids]
    rng.shuffle(leaves)
    return WeightedTree(parent, weight, dict(zip(leaves, labels)))


def test_hia_oracle_suite(report):
    rng = random.Random(5005)
    bad = queries = 0
    for _ in range(300):
        n1, n2 = rng.randint(2, 200), rng.randint(2, 200)
        pool = list(range(120))
        t1 = _random_tree(rng, n1, rng.sample(pool, 120))
        t2 = _random_tree(rng, n2, rng.sample(pool, 120))
        idx = build_hia(t1, t2)
        for _ in range(100):
            u, v = rng.randrange(n1), rng.randrange(n2)
            cu, cv = rng.randint(0, t1.weight[u]), rng.randint(0, t2.weight[v])
            got = idx.query(u, cu, v, cv)
            want = hia_brute(t1.parent, t1.weight, t1.labels, t2.parent, t2.weight, t2.labels, u, cu, v, cv)
            queries += 1
            if (got.total if got else None) != want:
                bad += 1
            elif got is not None and min(t1.weight[got.u], cu) + min(t2.weight[got.v], cv) != got.total:
                bad += 1
    ok = bad == 0
    report("hia", ok, "300 tree pairs, %d queries, %d mismatches with hia_brute" % (queries, bad))
    assert ok


# -------------------------------------------------------------- geometry
def test_geometry_oracle_suite(report):
    rng = random.Random(6006)
    bad = audits = audit_bad = 0
    for run in range(100):
        ds = BichromaticSet()
        live = {}
        span = rng.choice([4, 50, 10 ** 6])
        target = rng.choice([20, 100, 200, 400])
        nxt = 0
        for step in range(10 ** 4):
            if live and (len(live) >= target or rng.random() < 0.45):
                lab = rng.choice(list(live))
                ds.delete(lab)
                del live[lab]
            else:
                p = ColoredPoint(rng.randint(0, span), rng.randint(0, span), rng.randint(0, 1), nxt)
                nxt += 1
                ds.insert(p)
                live[p.label] = p
            b = ds.best_pair()
            want = bichromatic_brute(live.values())
            if (b.value if b else None) != want:
                bad += 1
            elif b is not None:
                r, q = live[b.red], live[b.blue]
                if r.color != 0 or q.color != 1 or min(r.x, q.x) + min(r.y, q.y) != b.value:
                    bad += 1
            if step % 250 == 0 and len(live) <= 200:
                audits += 1
                try:
                    ds.audit()
                except AssertionError:
                    audit_bad += 1
    ok = bad == 0 and audit_bad == 0
    report("geometry", ok, "100 runs x 10^4 ops: %d mismatches with bichromatic_brute; %d audits, %d failed"
           % (bad, audits, audit_bad))
    assert ok


# ------------------------------------------------------------- bicolored
def _leaf_counts(t):
    cnt = [0] * t.size
    order = []
    stack = [0]
    while stack:
        x = stack.pop()
        order.append(x)
        stack.extend(t.children[x])
    for x in reversed(order):
        cnt[x] = sum(cnt[c] for c in t.children[x]) if t.children[x] else 1
    return cnt, order


def _invariants(t):
    """(max heavy paths above a node / log2 m, worst L(e)/L(r)) from scratch."""
    cnt, order = _leaf_counts(t)
    m = max(2, cnt[0])
    above = [0] * t.size
    for x in order:
        p = t.parent[x]
        above[x] = 1 if p < 0 else above[p] + (t.path_of[x] != t.path_of[p])
    ratio = min(cnt[nodes[-1]] / cnt[nodes[0]] for nodes in t.paths.values())
    # paths must be parent chains covering every node exactly once
    covered = sorted(x for nodes in t.paths.values() for x in nodes)
    chains = all(t.parent[b] == a for nodes in t.paths.values() for a, b in zip(nodes, nodes[1:]))
    return max(above) / math.log2(m), ratio, covered == list(range(t.size)) and chains


def test_bicolored_invariants(report):
    rng = random.Random(7007)
    updates = brute_checks = brute_bad = inv_bad = 0
    worst_above, worst_ratio = 0.0, 1.0
    cap = 300
    while updates < 10 ** 4:
        bt = BicoloredTrees()
        inner = [[0], [0]]
        live, nxt = [], 0
        while updates < 10 ** 4:
            sizes = [t.size for t in bt.trees]
            moves = []
            if max(sizes) < cap:
                moves += ["attach"] * 5
            if min(sizes) < cap:
                moves += ["split"] * 2
            if live:
                moves += ["delete"] * 3
            if not moves:
                break
            move = rng.choice(moves)
            if move == "attach":
                lab, nxt = nxt, nxt + 1
                col = rng.randint(0, 1)
                for t in (0, 1):
                    par = rng.choice(inner[t])
                    bt.attach_leaf(t, par, bt.trees[t].weight[par] + rng.randint(1, 6), lab, col)
                live.append(lab)
            elif move == "split":
                t = rng.choice([i for i in (0, 1) if sizes[i] < cap])
                tr = bt.trees[t]
                cands = [v for v in range(1, tr.size) if tr.weight[v] - tr.weight[tr.parent[v]] >= 2]
                if not cands:
                    continue
                v = rng.choice(cands)
                w = rng.randint(tr.weight[tr.parent[v]] + 1, tr.weight[v] - 1)
                inner[t].append(bt.split_edge(t, v, w))
            else:
                lab = live.pop(rng.randrange(len(live)))
                for t in (0, 1):
                    bt.delete_leaf(t, bt.trees[t].leaf_of[lab])
            updates += 1
            for t in bt.trees:
                a, r, shape = _invariants(t)
                worst_above, worst_ratio = max(worst_above, a), min(worst_ratio, r)
                if a > 6 or r < 2 / 3 or not shape:
                    inv_bad += 1
            if updates % 3 == 0:
                p1, w1, l1 = bt.export(0)
                p2, w2, l2 = bt.export(1)
                b = bt.global_best()
                brute_checks += 1
                if (b.total if b else None) != bicolored_brute(p1, w1, l1, p2, w2, l2, bt.color):
                    brute_bad += 1
    ok = inv_bad == 0 and brute_bad == 0
    report("bicolored", ok, "10^4 updates: heavy paths above <= %.2f log2 m (bound 6), min L(e)/L(r) = %.3f "
           "(bound 2/3), %d violations; global_best vs brute: %d checks, %d wrong"
           % (worst_above, worst_ratio, inv_bad, brute_checks, brute_bad))
    assert ok


# --------------------------------------------------------------- scaling
def _bench(args):
    out, err = io.StringIO(), io.StringIO()
    assert cli.main(["--bench"] + args, out=out, err=err) == 0, err.getvalue()
    rows = [ln.split(",") for ln in out.getvalue().splitlines()[1:]]
    return out.getvalue(), {int(r[1]): float(r[3]) for r in rows}


def test_scaling_evidence(report):
    """Soft-gated: the ratios are reported; only producing the CSV is required."""
    ARTIFACTS.mkdir(exist_ok=True)
    csv_p, partial = _bench(["--mode", "partial", "--sizes", "4096,65536", "--ops", "300", "--seed", "8"])
    sizes = os.environ.get("DYNLCS_SCALING_FULL_SIZES", "1024,4096")
    csv_f, full = _bench(["--mode", "full", "--sizes", sizes, "--ops", "30", "--seed", "8"])
    (ARTIFACTS / "scaling.csv").write_text(csv_p + "".join(csv_f.splitlines(True)[1:]))
    ratio_p = partial[65536] / partial[4096]
    if 65536 in full and 4096 in full:
        ratio_f = full[65536] / full[4096]
        full_txt = "full 2^16/2^12 = %.2f (<= 12)" % ratio_f
        full_ok = ratio_f <= 12
    else:
        lo, hi = min(full), max(full)
        full_txt = ("full at 2^16 not measured (memory); %d->%d grows %.2fx"
                    % (lo, hi, full[hi] / full[lo]))
        full_ok = False
    ok = ratio_p <= 6 and full_ok
    report("scaling", ok, "(soft) partial 2^16/2^12 = %.2f (<= 6); %s; CSV in %s"
           % (ratio_p, full_txt, ARTIFACTS / "scaling.csv"))
    if not ok:
        warnings.warn("scaling criterion not met; see the acceptance summary")
    assert (ARTIFACTS / "scaling.csv").stat().st_size > 0
