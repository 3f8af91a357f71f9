"""Longest common substring of two strings that both undergo substitutions.

Both strings are kept in a recompression grammar together with their
reverses.  Every eligible parse-tree node contributes an anchor pair
(Y_l^R, Y_r); pairs from S form the red family and pairs from T the blue one.
The best red/blue pair maximises lcp(P, P') + lcp(Q, Q'), which equals the
LCS length, and its split tells where the LCS sits: it starts lcp(P, P')
positions before the boundary b of both pairs.

A substitution re-parses the edited string, diffs its anchor family and
forwards the removed and added pairs to the pair-family structure.  All
structures are rebuilt from the current strings after every |S| + |T|
updates, which bounds the memory held by dead grammar symbols and trie leaves.
"""

from __future__ import annotations

from collections import Counter
from typing import Dict, Optional, Sequence, Tuple

from .anchors import AnchorFamily, _Counter, default_window, diff_update, family_from_scratch
from .geom import BLUE, RED
from .grammar import DynString, Grammar
from .pair_families import PairFamilies, PairRecord
from .partial_lcs import NO_ANSWER, LcsAnswer


class FullLcsError(ValueError):
    pass


class FullEngine:
    def __init__(self, S: Sequence, T: Sequence, seed: int = 0, window: Optional[int] = None,
                 reinit_every: Optional[int] = None):
        S, T = list(S), list(T)
        if not S or not T:
            raise FullLcsError("S and T must be non-empty")
        self.seed = seed
        self.K = window if window is not None else default_window(len(S) + len(T))
        self.reinit_every = reinit_every if reinit_every is not None else len(S) + len(T)
        self.updates = 0
        self.reinits = 0
        self.last_events = 0
        self._build(S, T)

    def _build(self, S, T):
        self.g = Grammar(seed=self.seed)
        g = self.g
        self.strings = {"S": DynString(g, S), "T": DynString(g, T)}
        ids = _Counter()
        self.families = {"S": AnchorFamily("S", ids), "T": AnchorFamily("T", ids)}
        self.pairs: Dict[int, Tuple[str, int, int, int]] = {}
        self.pf = PairFamilies(g)
        records = []
        for owner in ("S", "T"):
            fam = family_from_scratch(g, self.strings[owner].fwd, self.K)
            _, inserted = self.families[owner].apply(Counter(), fam)
            records.extend(self._record(pair) for pair in inserted)
        self.pf.load(records)
        self.since_init = 0

    def _record(self, pair) -> PairRecord:
        ds = self.strings[pair.owner]
        P = ds.reversed_fragment(pair.a, pair.b - 1) if pair.b > pair.a else None
        Q = ds.fragment(pair.b, pair.c - 1) if pair.c > pair.b else None
        fam = RED if pair.owner == "S" else BLUE
        self.pairs[pair.id] = (pair.owner, pair.a, pair.b, pair.c)
        return PairRecord(pair.id, fam, P, Q)

    def _insert(self, pair):
        self.pf.insert_pair(self._record(pair))

    def _delete(self, pid):
        del self.pairs[pid]
        self.pf.delete_pair(pid)

    # ------------------------------------------------------------ interface
    def text(self, which: str) -> list:
        return self.strings[which].text()

    def substitute(self, which: str, pos: int, letter) -> LcsAnswer:
        if which not in self.strings:
            raise FullLcsError("target must be 'S' or 'T', got %r" % (which,))
        ds = self.strings[which]
        n = len(ds)
        if not 1 <= pos <= n:
            raise FullLcsError("position %r outside [1, %d]" % (pos, n))
        g = self.g
        old = g.char_at(ds.fwd, pos)
        before = ds.fwd
        after, layer, center = g.substitute_layer(before, pos, letter)
        ds.fwd = after
        ds.rev = g.substitute(ds.rev, n - pos + 1, letter)
        deleted, inserted = diff_update(g, before, after, layer, center, self.K,
                                        self.families[which], old != letter)
        for pid in deleted:
            self._delete(pid)
        for pair in inserted:
            self._insert(pair)
        self.last_events = len(deleted) + len(inserted)
        self.updates += 1
        self.since_init += 1
        if self.since_init >= self.reinit_every:
            self.reinits += 1
            self._build(self.text("S"), self.text("T"))
        return self.current_lcs()

    def current_lcs(self) -> LcsAnswer:
        b = self.pf.best()
        if b is None or b.total == 0:
            return NO_ANSWER
        _, _, bs, _ = self.pairs[b.red]
        _, _, bt, _ = self.pairs[b.blue]
        return LcsAnswer(b.total, bs - b.lcp_p, bt - b.lcp_p)


def full_init(S: Sequence, T: Sequence, seed: int = 0) -> FullEngine:
    return FullEngine(S, T, seed=seed)


def full_substitute(engine: FullEngine, which: str, pos: int, letter) -> LcsAnswer:
    return engine.substitute(which, pos, letter)
