import random

import pytest
from hypothesis import given, settings, strategies as st

from dynlcs.core_strings import EMPTY, EmptyTextError, Span, SpanError, build_index


def brute_extend(t, u, v):
    uv = u + v
    best = 0
    for L in range(len(uv) + 1):
        w = uv[:L]
        if any(t[i:i + L] == w for i in range(len(t) - L + 1)):
            best = L
    return best


def frag(t, span):
    return t[span.start - 1:span.end]


def spell_from_root(tree, locus):
    return tree.path_label(locus.node, locus.depth_cap)


def test_leaf_counts():
    idx = build_index("abaab")
    assert sum(idx.fwd_tree.is_leaf) == 6
    assert sum(idx.rev_tree.is_leaf) == 6


def test_single_letter_shape():
    tree = build_index("a").fwd_tree
    assert len(tree.children[0]) == 2
    assert all(tree.is_leaf[c] for c in tree.children[0])


def test_rev_tree_indexes_reversal():
    idx = build_index("abaab")
    inv = {c: a for a, c in idx.code.items()}
    assert "".join(inv[c] for c in idx.rev_tree.s[:-1]) == "baaba"


def test_empty_text_rejected():
    with pytest.raises(EmptyTextError):
        build_index("")


def test_locus_examples():
    idx = build_index("abaab")
    loc = idx.locus(Span(2, 3))
    assert loc.depth_cap == 2
    assert spell_from_root(idx.fwd_tree, loc) == [idx.code["b"], idx.code["a"]]
    loc = idx.locus(Span(1, 5))
    assert loc.depth_cap == 5 and idx.fwd_tree.is_leaf[loc.node]
    loc = idx.locus(Span(3, 3))
    assert loc.depth_cap == 1
    with pytest.raises(SpanError):
        idx.locus(Span(4, 6))
    with pytest.raises(SpanError):
        idx.locus(EMPTY)


def test_extend_prefix_examples():
    idx = build_index("abaab")
    assert idx.extend_prefix(Span(1, 2), Span(3, 4)) == (4, Span(1, 4))
    assert idx.extend_prefix(Span(2, 2), Span(2, 2))[0] == 1
    assert idx.extend_prefix(EMPTY, Span(1, 5))[0] == 5


@settings(max_examples=150, deadline=None)
@given(st.text(alphabet="abc", min_size=1, max_size=64), st.data())
def test_extend_prefix_matches_scan(t, data):
    idx = build_index(t)
    n = len(t)
    rev = t[::-1]
    for _ in range(8):
        reversed_ = data.draw(st.booleans())
        base = rev if reversed_ else t
        spans = []
        for _ in range(2):
            a = data.draw(st.integers(1, n + 1))
            b = data.draw(st.integers(a - 1, n))
            spans.append(Span(a, b))
        U, V = spans
        L, w = idx.extend_prefix(U, V, reversed=reversed_)
        assert L == brute_extend(base, frag(base, U), frag(base, V))
        assert len(frag(base, U)) <= L <= len(frag(base, U)) + len(frag(base, V))
        if L:
            assert frag(base, w) == (frag(base, U) + frag(base, V))[:L]


@settings(max_examples=100, deadline=None)
@given(st.text(alphabet="ab", min_size=1, max_size=40), st.data())
def test_locus_spells_fragment(t, data):
    idx = build_index(t)
    a = data.draw(st.integers(1, len(t)))
    b = data.draw(st.integers(a, len(t)))
    for rev in (False, True):
        base = t[::-1] if rev else t
        loc = idx.locus(Span(a, b), reversed=rev)
        tree = idx.rev_tree if rev else idx.fwd_tree
        assert spell_from_root(tree, loc) == [idx.code[c] for c in base[a - 1:b]]
        p = tree.parent[loc.node]
        assert tree.depth[p] < loc.depth_cap <= tree.depth[loc.node]
        assert loc.is_implicit == (tree.depth[loc.node] != loc.depth_cap)


def test_depths_increase_and_lce():
    rng = random.Random(5)
    t = "".join(rng.choice("ab") for _ in range(300))
    tree = build_index(t).fwd_tree
    for v in range(1, tree.size):
        assert tree.depth[v] > tree.depth[tree.parent[v]]
    for _ in range(300):
        i, j = rng.randrange(301), rng.randrange(301)
        k = 0
        while i + k < 300 and j + k < 300 and t[i + k] == t[j + k]:
            k += 1
        assert tree.lce(i, j) == k
