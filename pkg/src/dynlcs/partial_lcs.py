"""Longest common substring of a dynamic string S and a static string T.

S is kept as a maximal block decomposition: a sequence of fragments of T
(plus length-1 blocks for letters that do not occur in T) such that no two
consecutive blocks concatenate to a substring of T.  Any common substring of
S and T then lies inside at most three consecutive blocks and contains the
first letter of one of them, so every block proposes one candidate -- the
longest substring of UV occurring in T, where U is the longest suffix of
s_{i-1}s_i found in T and V the longest prefix of s_{i+1}s_{i+2} found in T --
and the answer is the best candidate.  The last step is a single
heaviest-induced-ancestors query over the suffix trees of T$ and T^R#.

A substitution splits one block, re-merges at most five blocks and recomputes
the candidates of the blocks within distance two of the change.
"""

from __future__ import annotations

from typing import List, NamedTuple, Optional, Sequence

from sortedcontainers import SortedDict, SortedList

from .core_strings import EMPTY, Span, StaticIndex
from .hia import HiaIndex, WeightedTree

MAX_RECOMPUTE = 12


class LcsAnswer(NamedTuple):
    length: int
    s_pos: Optional[int]
    t_pos: Optional[int]


NO_ANSWER = LcsAnswer(0, None, None)


class Candidate(NamedTuple):
    length: int
    s_pos: Optional[int]
    t_pos: Optional[int]
    owner: int


class Block:
    __slots__ = ("start", "end", "tpos", "uid")

    def __init__(self, start: int, end: int, tpos: Optional[int], uid: int):
        self.start, self.end, self.tpos, self.uid = start, end, tpos, uid

    @property
    def foreign(self) -> bool:
        return self.tpos is None

    def __len__(self):
        return self.end - self.start + 1

    def witness(self) -> Span:
        if self.tpos is None:
            return EMPTY
        return Span(self.tpos, self.tpos + self.end - self.start)

    def __repr__(self):
        return "Block(%d..%d @%s)" % (self.start, self.end, self.tpos)


def _tree_view(tree, label_of_start) -> WeightedTree:
    labels = {tree.leaf_of[j]: label_of_start(j) for j in range(tree.N)}
    return WeightedTree(tree.parent, tree.depth, labels)


class PartialLcs:
    """Partially dynamic engine; positions are 1-based."""

    def __init__(self, T: Sequence, s_len: int, index: Optional[StaticIndex] = None):
        if s_len < 1:
            raise ValueError("S must be non-empty")
        self.index = index if index is not None else StaticIndex(T)
        idx = self.index
        n = idx.n
        if index is None or not hasattr(idx, "_hia"):
            # label j+1 <-> split between T[..j] and T[j+1..]
            fwd = _tree_view(idx.fwd_tree, lambda j: j + 1)
            rev = _tree_view(idx.rev_tree, lambda j: n - j + 1)
            idx._hia = HiaIndex(fwd, rev)
        self.hia: HiaIndex = idx._hia
        self.S: List = [None] * s_len
        self._uid = 0
        self.blocks = SortedDict()
        for p in range(1, s_len + 1):
            self.blocks[p] = self._new_block(p, p, None)
        self.cands = {}
        self.heap = SortedList()
        self.last_merges = 0
        self.last_recomputed = 0

    @classmethod
    def from_strings(cls, T: Sequence, S: Sequence) -> "PartialLcs":
        eng = cls(T, len(S))
        for i, c in enumerate(S, 1):
            eng.substitute(i, c)
        return eng

    def _new_block(self, start, end, tpos) -> Block:
        self._uid += 1
        return Block(start, end, tpos, self._uid)

    def __len__(self):
        return len(self.S)

    @property
    def text(self):
        return self.index.text

    def block_list(self) -> List[Block]:
        return list(self.blocks.values())

    # ---------------------------------------------------------------- merging
    def _try_merge(self, a: Block, b: Block) -> Optional[Block]:
        if a.foreign or b.foreign:
            return None
        L, w = self.index.extend_prefix(a.witness(), b.witness())
        if L < len(a) + len(b):
            return None
        return self._new_block(a.start, b.end, w.start)

    def substitute(self, pos: int, letter) -> LcsAnswer:
        if not 1 <= pos <= len(self.S):
            raise IndexError("position %r outside [1, %d]" % (pos, len(self.S)))
        self.S[pos - 1] = letter
        blocks = self.blocks
        k = blocks.bisect_right(pos) - 1
        old = blocks.peekitem(k)[1]
        seq = []
        lo_k = k
        if k > 0:
            seq.append(blocks.peekitem(k - 1)[1])
            lo_k = k - 1
        removed = [b for b in seq] + [old]
        if old.start < pos:
            seq.append(self._new_block(old.start, pos - 1, old.tpos))
        tp = self.index.first_occurrence.get(letter)
        seq.append(self._new_block(pos, pos, tp))
        if pos < old.end:
            seq.append(self._new_block(pos + 1, old.end,
                                       None if old.tpos is None else old.tpos + pos + 1 - old.start))
        if k + 1 < len(blocks):
            nxt = blocks.peekitem(k + 1)[1]
            seq.append(nxt)
            removed.append(nxt)

        merges = 0
        out = [seq[0]]
        for b in seq[1:]:
            m = self._try_merge(out[-1], b)
            if m is not None:
                out[-1] = m
                merges += 1
            else:
                out.append(b)
        self.last_merges = merges

        keep = {id(b) for b in out}
        for b in removed:
            if id(b) not in keep:
                del blocks[b.start]
                self._drop_candidate(b.uid)
        for b in out:
            blocks[b.start] = b  # overwrites entries with the same start
        a_idx = lo_k
        b_idx = lo_k + len(out) - 1
        lo = max(0, a_idx - 2)
        hi = min(len(blocks) - 1, b_idx + 1)
        base = max(0, lo - 1)
        window = blocks.values()[base:hi + 3]
        recomputed = 0
        for i in range(lo, hi + 1):
            j = i - base
            prev = window[j - 1] if j > 0 else None
            nb = window[j + 1:j + 3]
            self._refresh(prev, window[j], *(list(nb) + [None, None])[:2])
            recomputed += 1
        self.last_recomputed = recomputed
        assert merges <= 4 and recomputed <= MAX_RECOMPUTE
        return self.current_lcs()

    # ------------------------------------------------------------- candidates
    def _drop_candidate(self, uid):
        c = self.cands.pop(uid, None)
        if c is not None and c.length > 0:
            self.heap.remove((c.length, uid))

    def _refresh(self, prev, blk, nxt, nxt2):
        self._drop_candidate(blk.uid)
        c = self._compute_from(prev, blk, nxt, nxt2)
        self.cands[blk.uid] = c
        if c.length > 0:
            self.heap.add((c.length, blk.uid))

    def candidate_for(self, i: int) -> Candidate:
        """Candidate proposed by the i-th block (1-based)."""
        if not 1 <= i <= len(self.blocks):
            raise IndexError("block index out of range")
        return self._compute(i - 1)

    def _compute(self, i: int) -> Candidate:
        blocks = self.blocks
        nb = len(blocks)
        get = lambda j: blocks.peekitem(j)[1] if 0 <= j < nb else None
        return self._compute_from(get(i - 1), get(i), get(i + 1), get(i + 2))

    def _compute_from(self, prev, cur, nxt, nxt2) -> Candidate:
        idx = self.index
        split = cur.end + 1
        # U: longest suffix of s_{i-1} s_i occurring in T, as a span of T^R
        if cur.foreign:
            U_rev = EMPTY
        elif prev is None or prev.foreign:
            U_rev = idx.mirror(cur.witness())
        else:
            L, w = idx.extend_prefix(idx.mirror(cur.witness()), idx.mirror(prev.witness()), reversed=True)
            U_rev = w
        # V: longest prefix of s_{i+1} s_{i+2} occurring in T
        if nxt is None or nxt.foreign:
            V = EMPTY
        elif nxt2 is None or nxt2.foreign:
            V = nxt.witness()
        else:
            L, V = idx.extend_prefix(nxt.witness(), nxt2.witness())
        lu = 0 if U_rev.empty else len(U_rev)
        lv = 0 if V.empty else len(V)
        if lu + lv == 0:
            return Candidate(0, None, None, cur.uid)
        u = idx.locus(V).node if lv else 0
        v = idx.locus(U_rev, reversed=True).node if lu else 0
        res = self.hia.query(u, lv, v, lu)
        if res is None or res.total == 0:
            return Candidate(0, None, None, cur.uid)
        b = min(idx.fwd_tree.depth[res.u], lv)
        a = res.total - b
        return Candidate(res.total, split - a, res.label - a, cur.uid)

    def current_lcs(self) -> LcsAnswer:
        if not self.heap:
            return NO_ANSWER
        _, uid = self.heap[-1]
        c = self.cands[uid]
        return LcsAnswer(c.length, c.s_pos, c.t_pos)

    # ------------------------------------------------------------- checking
    def check_invariants(self):
        """Verify the decomposition directly against T (test helper)."""
        T = self.index.text
        bl = self.block_list()
        pos = 1
        for j, b in enumerate(bl):
            assert b.start == pos, "blocks must tile S"
            pos = b.end + 1
            if b.foreign:
                assert len(b) == 1 and self.S[b.start - 1] not in self.index.code
            else:
                assert list(self.S[b.start - 1:b.end]) == list(T[b.tpos - 1:b.tpos - 1 + len(b)])
            if j and not b.foreign and not bl[j - 1].foreign:
                joined = list(self.S[bl[j - 1].start - 1:b.end])
                assert not _occurs(joined, T), "decomposition is not maximal"
        assert pos == len(self.S) + 1


def _occurs(w, T) -> bool:
    m = len(w)
    return any(list(T[i:i + m]) == w for i in range(len(T) - m + 1))


def init(T: Sequence, s_len: int) -> PartialLcs:
    return PartialLcs(T, s_len)


def substitute(engine: PartialLcs, pos: int, letter) -> LcsAnswer:
    return engine.substitute(pos, letter)


def candidate_for(engine: PartialLcs, i: int) -> Candidate:
    return engine.candidate_for(i)


def current_lcs(engine: PartialLcs) -> LcsAnswer:
    return engine.current_lcs()
