import random

import pytest

from dynlcs.oracle import is_common_substring, lcs_dp
from dynlcs.partial_lcs import PartialLcs


def check(eng):
    S = ["\0" if c is None else c for c in eng.S]
    ans = eng.current_lcs()
    want = lcs_dp("".join(S), "".join(eng.text))[0]
    assert ans.length == want
    assert is_common_substring(S, eng.text, ans.length, ans.s_pos, ans.t_pos)


def test_init_all_foreign():
    eng = PartialLcs("abaab", 5)
    assert len(eng.block_list()) == 5 and all(b.foreign for b in eng.block_list())
    assert eng.current_lcs() == (0, None, None)
    assert len(PartialLcs("a", 1).block_list()) == 1
    with pytest.raises(ValueError):
        PartialLcs("abaab", 0)


def test_substitution_example():
    eng = PartialLcs.from_strings("abaab", "bbbbb")
    ans = eng.substitute(3, "a")
    lens = [len(b) for b in eng.block_list()]
    assert lens == [1, 2, 1, 1]
    assert ans.length == 2
    assert is_common_substring(eng.S, "abaab", 2, ans.s_pos, ans.t_pos)
    eng.check_invariants()
    check(eng)


def test_two_letters():
    eng = PartialLcs("ab", 2)
    eng.substitute(1, "a")
    assert eng.substitute(2, "b").length == 2


def test_candidate_example():
    eng = PartialLcs.from_strings("abaab", "bbabb")
    c = eng.candidate_for(1)
    assert c.length == 2
    last = eng.candidate_for(len(eng.block_list()))
    assert last.length == 1


def test_identity_and_noop():
    eng = PartialLcs.from_strings("abaab", "abaab")
    assert eng.current_lcs() == (5, 1, 1)
    before = eng.current_lcs().length
    eng.substitute(2, "b")
    assert eng.current_lcs().length == before


def test_out_of_range():
    eng = PartialLcs("ab", 2)
    with pytest.raises(IndexError):
        eng.substitute(3, "a")


@pytest.mark.parametrize("seed", range(12))
def test_random_streams_match_dp(seed):
    rng = random.Random(seed)
    sigma = "abcd"[: rng.randint(2, 4)]
    T = "".join(rng.choice(sigma) for _ in range(rng.randint(1, 128)))
    m = rng.randint(1, 128)
    eng = PartialLcs(T, m)
    for _ in range(300):
        eng.substitute(rng.randint(1, m), rng.choice(sigma + "xy"))
        assert eng.last_merges <= 4 and eng.last_recomputed <= 12
        check(eng)
    eng.check_invariants()
