import random

import pytest

from dynlcs.geom import BLUE, RED
from dynlcs.grammar import Grammar
from dynlcs.oracle import family_brute, trie_brute
from dynlcs.pair_families import PairFamilies, PairFamilyError, PairRecord


def handle(g, s):
    return g.makestring(s) if s else None


def lcp(a, b):
    k = 0
    while k < min(len(a), len(b)) and a[k] == b[k]:
        k += 1
    return k


def test_example_shared_prefix():
    g = Grammar()
    pf = PairFamilies(g)
    pf.insert_pair(PairRecord(1, RED, handle(g, "ab"), handle(g, "cd")))
    pf.insert_pair(PairRecord(2, BLUE, handle(g, "ab"), handle(g, "ce")))
    b = pf.best()
    assert (b.red, b.blue, b.total, b.lcp_p, b.lcp_q) == (1, 2, 3, 2, 1)
    tp, tq = pf.live_shapes()
    assert tp == trie_brute(["ab", "ab"])
    assert tq == trie_brute(["cd", "ce"])


def test_identical_pair_and_disjoint():
    g = Grammar()
    pf = PairFamilies(g)
    pf.insert_pair(PairRecord(1, RED, handle(g, "xyz"), handle(g, "uv")))
    pf.insert_pair(PairRecord(2, BLUE, handle(g, "xyz"), handle(g, "uv")))
    assert pf.best().total == 5
    pf.delete_pair(2)
    assert pf.best() is None
    pf.insert_pair(PairRecord(3, BLUE, handle(g, "abc"), handle(g, "q")))
    assert pf.best().total == 0


def test_delete_only_record():
    g = Grammar()
    pf = PairFamilies(g)
    pf.insert_pair(PairRecord(7, RED, handle(g, "a"), None))
    pf.delete_pair(7)
    assert pf.best() is None


def test_errors():
    g = Grammar()
    pf = PairFamilies(g)
    pf.insert_pair(PairRecord(1, RED, handle(g, "a"), handle(g, "b")))
    with pytest.raises(PairFamilyError):
        pf.insert_pair(PairRecord(1, BLUE, handle(g, "a"), handle(g, "b")))
    with pytest.raises(PairFamilyError):
        pf.delete_pair(9)
    with pytest.raises(PairFamilyError):
        pf.insert_pair(PairRecord(2, 5, handle(g, "a"), handle(g, "b")))


def random_string(rng, sigma, maxlen):
    # strings drawn around a few stems so that tries branch deep
    stems = ["abab", "abba", "baab", "aaaa"]
    s = rng.choice(stems) * rng.randint(0, 3) if rng.random() < 0.6 else ""
    s += "".join(rng.choice(sigma) for _ in range(rng.randint(0, maxlen)))
    return s[:maxlen]


@pytest.mark.parametrize("seed", range(6))
def test_random_against_brute(seed):
    rng = random.Random(seed)
    g = Grammar(seed=seed)
    pf = PairFamilies(g)
    live = {}
    nxt = 0
    for step in range(500):
        if live and (rng.random() < 0.4 or len(live) >= 300):
            rid = rng.choice(list(live))
            pf.delete_pair(rid)
            del live[rid]
        else:
            P = random_string(rng, "ab", 24)
            Q = random_string(rng, "abc", 24)
            fam = rng.randint(0, 1)
            pf.insert_pair(PairRecord(nxt, fam, handle(g, P), handle(g, Q)))
            for t in pf.tries:
                assert t.last_splits <= 1 and t.last_attaches == 1
            live[nxt] = (fam, P, Q)
            nxt += 1
        red = [(p, q) for f, p, q in live.values() if f == RED]
        blue = [(p, q) for f, p, q in live.values() if f == BLUE]
        b = pf.best()
        expect = family_brute(red, blue) if red and blue else None
        assert (None if b is None else b.total) == expect
        if b is not None:
            (fr, pr, qr), (fb, pb, qb) = live[b.red], live[b.blue]
            assert fr == RED and fb == BLUE
            assert (lcp(pr, pb), lcp(qr, qb)) == (b.lcp_p, b.lcp_q)
        assert pf.leaf_count() <= 2 * len(live) + 17
        if step % 50 == 0:
            tp, tq = pf.live_shapes()
            assert tp == trie_brute([p for _, p, _ in live.values()])
            assert tq == trie_brute([q for _, _, q in live.values()])
    assert pf.rebuilds > 0 or nxt < 40
