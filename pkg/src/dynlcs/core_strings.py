"""Static indexing of the fixed string T.

Suffix trees of T$ and T^R# are built from the suffix array and LCP array,
weighted-ancestor lookups use binary lifting, and longest-common-extension
queries use a sparse table over the LCP array.  On top of these sits
``extend_prefix``: the longest prefix of UV that occurs in T, for fragments U
and V of T.

Positions in the public API are 1-based and spans are inclusive, matching the
usual ``T[i..j]`` notation; ``Span(i, i - 1)`` is the empty fragment.
"""

from __future__ import annotations

from typing import NamedTuple, Optional, Sequence

import numpy as np


class IndexError_(ValueError):
    """Invalid argument for a static-index operation."""


class EmptyTextError(IndexError_):
    pass


class SpanError(IndexError_):
    pass


class Span(NamedTuple):
    start: int
    end: int

    def __len__(self) -> int:
        return self.end - self.start + 1

    @property
    def empty(self) -> bool:
        return self.end < self.start


EMPTY = Span(1, 0)


class Locus(NamedTuple):
    node: int
    depth_cap: int
    is_implicit: bool


def suffix_array(codes: Sequence[int]) -> np.ndarray:
    """Prefix doubling with numpy sorts; O(n log^2 n) worst case, fast in practice."""
    n = len(codes)
    rank = np.asarray(codes, dtype=np.int64)
    if n <= 1:
        return np.arange(n, dtype=np.int64)
    # dense ranks first so the doubling keys stay small
    _, rank = np.unique(rank, return_inverse=True)
    rank = rank.astype(np.int64)
    k = 1
    sa = np.argsort(rank, kind="stable")
    while True:
        second = np.full(n, -1, dtype=np.int64)
        second[: n - k] = rank[k:]
        sa = np.lexsort((second, rank))
        r1 = rank[sa]
        r2 = second[sa]
        diff = np.empty(n, dtype=np.int64)
        diff[0] = 0
        diff[1:] = (r1[1:] != r1[:-1]) | (r2[1:] != r2[:-1])
        new_rank = np.empty(n, dtype=np.int64)
        new_rank[sa] = np.cumsum(diff)
        rank = new_rank
        if rank[sa[-1]] == n - 1:
            return sa
        k *= 2
        if k >= n:
            return sa


def lcp_array(codes: Sequence[int], sa: Sequence[int]) -> list:
    """Kasai et al.; lcp[i] = lcp of suffixes sa[i-1] and sa[i], lcp[0] = 0."""
    n = len(codes)
    rank = [0] * n
    for i, s in enumerate(sa):
        rank[s] = i
    lcp = [0] * n
    h = 0
    for i in range(n):
        r = rank[i]
        if r == 0:
            h = 0
            continue
        j = sa[r - 1]
        while i + h < n and j + h < n and codes[i + h] == codes[j + h]:
            h += 1
        lcp[r] = h
        if h:
            h -= 1
    return lcp


class SuffixTree:
    """Suffix tree of ``codes + [0]`` with explicit nodes stored in flat lists.

    Node 0 is the root.  Every node keeps its string-depth, parent, and the
    range ``[lb, rb]`` of suffix-array ranks of the leaves below it.
    """

    def __init__(self, codes: Sequence[int]):
        s = list(codes) + [0]
        self.s = s
        N = len(s)
        self.N = N
        sa = [int(x) for x in suffix_array(s)]
        self.sa = sa
        self.rank = [0] * N
        for i, p in enumerate(sa):
            self.rank[p] = i
        lcp = lcp_array(s, sa)
        self.lcp = lcp

        depth = [0]
        parent = [-1]
        self.leaf_of = [0] * N
        stack = [0]
        for i in range(N):
            h = lcp[i]
            while depth[stack[-1]] > h:
                last = stack.pop()
                if depth[stack[-1]] >= h:
                    parent[last] = stack[-1]
                else:
                    mid = len(depth)
                    depth.append(h)
                    parent.append(-1)
                    parent[last] = mid
                    stack.append(mid)
            leaf = len(depth)
            depth.append(N - sa[i])
            parent.append(-1)
            self.leaf_of[sa[i]] = leaf
            stack.append(leaf)
        while len(stack) > 1:
            last = stack.pop()
            parent[last] = stack[-1]
        self.depth = depth
        self.parent = parent
        size = len(depth)
        self.size = size
        self.children = [[] for _ in range(size)]
        for v in range(1, size):
            self.children[parent[v]].append(v)
        lb = [N] * size
        rb = [-1] * size
        for i in range(N):
            leaf = self.leaf_of[sa[i]]
            lb[leaf] = rb[leaf] = i
        for v in sorted(range(1, size), key=depth.__getitem__, reverse=True):
            p = parent[v]
            if lb[v] < lb[p]:
                lb[p] = lb[v]
            if rb[v] > rb[p]:
                rb[p] = rb[v]
        self.lb, self.rb = lb, rb
        self.is_leaf = [not c for c in self.children]

        self._build_lifting()
        self._build_sparse()

    def _build_lifting(self):
        up0 = [p if p >= 0 else 0 for p in self.parent]
        up = [up0]
        LOG = max(1, (self.size).bit_length())
        for _ in range(1, LOG):
            prev = up[-1]
            up.append([prev[prev[v]] for v in range(self.size)])
        self.up = up

    def _build_sparse(self):
        table = [self.lcp[:]]
        j = 1
        while (1 << j) <= self.N:
            prev = table[-1]
            half = 1 << (j - 1)
            table.append([min(prev[i], prev[i + half]) for i in range(self.N - (1 << j) + 1)])
            j += 1
        self.sparse = table

    def lce(self, i: int, j: int) -> int:
        """Longest common extension of the suffixes at 0-based i and j."""
        if i == j:
            return self.N - i - 1
        if i >= self.N - 1 or j >= self.N - 1:
            return 0
        a, b = self.rank[i], self.rank[j]
        if a > b:
            a, b = b, a
        a += 1
        k = (b - a + 1).bit_length() - 1
        row = self.sparse[k]
        x, y = row[a], row[b - (1 << k) + 1]
        return x if x < y else y

    def ancestor_at_depth(self, v: int, d: int) -> int:
        """Highest ancestor of v whose string-depth is at least d (d >= 1)."""
        depth = self.depth
        for row in reversed(self.up):
            a = row[v]
            if depth[a] >= d:
                v = a
        return v

    def locus0(self, start0: int, length: int) -> Locus:
        if length == 0:
            return Locus(0, 0, False)
        v = self.ancestor_at_depth(self.leaf_of[start0], length)
        return Locus(v, length, self.depth[v] != length)

    def path_label(self, v: int, length: Optional[int] = None) -> list:
        d = self.depth[v] if length is None else length
        start = self.sa[self.lb[v]]
        return self.s[start:start + d]


class StaticIndex:
    """Suffix trees of T$ and T^R# plus the queries the partial engine needs."""

    def __init__(self, text: Sequence):
        text = list(text)
        if not text:
            raise EmptyTextError("the static text must be non-empty")
        self.text = text
        self.alphabet = sorted(set(text))
        self.code = {c: i + 1 for i, c in enumerate(self.alphabet)}
        codes = [self.code[c] for c in text]
        self.codes = codes
        self.n = len(text)
        self.fwd_tree = SuffixTree(codes)
        self.rev_tree = SuffixTree(codes[::-1])
        self.first_occurrence = {}
        for i, c in enumerate(text):
            self.first_occurrence.setdefault(c, i + 1)

    def _tree(self, reversed_: bool) -> SuffixTree:
        return self.rev_tree if reversed_ else self.fwd_tree

    def _check(self, span: Span, allow_empty: bool = True):
        if span.end < span.start - 1:
            raise SpanError("malformed span %r" % (span,))
        if span.empty:
            if not allow_empty:
                raise SpanError("empty span not allowed here")
            return
        if span.start < 1 or span.end > self.n:
            raise SpanError("span %r outside [1, %d]" % (span, self.n))

    def occurs(self, letter) -> bool:
        return letter in self.code

    def mirror(self, span: Span) -> Span:
        """The span of T^R holding the reverse of ``span`` of T (and vice versa)."""
        if span.empty:
            return EMPTY
        return Span(self.n - span.end + 1, self.n - span.start + 1)

    def locus(self, frag: Span, reversed: bool = False) -> Locus:
        self._check(frag, allow_empty=False)
        return self._tree(reversed).locus0(frag.start - 1, len(frag))

    def extend_prefix(self, U: Span, V: Span, reversed: bool = False):
        """Longest prefix of UV occurring in T (T^R when ``reversed``).

        Returns ``(length, witness)`` where witness is a span of an
        occurrence.  Length is at least |U|.
        """
        self._check(U)
        self._check(V)
        tree = self._tree(reversed)
        lu = 0 if U.empty else len(U)
        lv = 0 if V.empty else len(V)
        if lu == 0 and lv == 0:
            return 0, EMPTY
        if lu:
            node = tree.locus0(U.start - 1, lu).node
            lo, hi = tree.lb[node], tree.rb[node]
        else:
            lo, hi = 0, tree.N - 1
        sa = tree.sa
        if lv == 0:
            s = sa[lo]
            return lu, Span(s + 1, s + lu)
        v0 = V.start - 1
        s_codes = tree.s
        lce = tree.lce
        # binary search for V among the suffixes in [lo, hi] offset by |U|
        a, b = lo, hi + 1
        best_len, best_s = -1, sa[lo]
        while a < b:
            mid = (a + b) >> 1
            s = sa[mid]
            l = lce(s + lu, v0)
            if l >= lv:
                best_len, best_s = lv, s
                break
            if l > best_len:
                best_len, best_s = l, s
            if s_codes[s + lu + l] < s_codes[v0 + l]:
                a = mid + 1
            else:
                b = mid
        else:
            for r in (a - 1, a):
                if lo <= r <= hi:
                    s = sa[r]
                    l = min(lce(s + lu, v0), lv)
                    if l > best_len:
                        best_len, best_s = l, s
        L = lu + best_len
        return L, Span(best_s + 1, best_s + L)


def build_index(text: Sequence) -> StaticIndex:
    return StaticIndex(text)
