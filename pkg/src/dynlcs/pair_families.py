"""Maximum lcp(P, P') + lcp(Q, Q') between a red and a blue family of string pairs.

The P strings and the Q strings each go into a compacted trie.  Every string
is (conceptually) terminated by a letter unique to its record, so no string is
a prefix of another and each record owns one leaf per trie.  For a red and a
blue record, lcp(P, P') is the string-depth of the lowest common ancestor of
their leaves, so the problem becomes the bicoloured trees problem over the two
tries with record ids as labels.

Tries are stored directly in the trees of a ``BicoloredTrees`` instance (trie
node ids are tree node ids).  Insertion finds the locus of the new string by
binary search over the sorted list of all strings inserted so far, compared
through grammar lcp queries, then splits at most one edge and attaches one
leaf.  Deletion only removes the record's label; when dead leaves outnumber
live records everything is rebuilt from the live records.
"""

from __future__ import annotations

from typing import Dict, List, NamedTuple, Optional

from sortedcontainers import SortedList

from .bicolored import BicoloredTrees
from .geom import BLUE, RED
from .grammar import Grammar, Handle

REBUILD_MIN = 16


class PairFamilyError(ValueError):
    pass


class PairRecord(NamedTuple):
    id: int
    family: int  # RED (from S) or BLUE (from T)
    P: Optional[Handle]  # None stands for the empty string
    Q: Optional[Handle]


class FamilyBest(NamedTuple):
    red: int
    blue: int
    total: int
    lcp_p: int
    lcp_q: int


def _length(h: Optional[Handle]) -> int:
    return 0 if h is None else h.length


class _Term:
    """A record's string followed by its unique terminator, ordered lexicographically.

    Terminators sort before every letter and among themselves by record id.
    """

    __slots__ = ("g", "h", "id")

    def __init__(self, g: Grammar, h: Optional[Handle], rid: int):
        self.g, self.h, self.id = g, h, rid

    def _cmp(self, other: "_Term") -> int:
        if self.h is None or other.h is None:
            c = (self.h is not None) - (other.h is not None)
        else:
            c = self.g.compare(self.h, other.h)
        if c == 0:
            c = (self.id > other.id) - (self.id < other.id)
        return c

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __eq__(self, other):
        return self._cmp(other) == 0


class DynTrie:
    """One compacted trie, living in tree ``side`` of a BicoloredTrees."""

    def __init__(self, g: Grammar, bt: BicoloredTrees, side: int):
        self.g, self.bt, self.side = g, bt, side
        self.tree = bt.trees[side]
        self.order = SortedList()
        self.rep: Dict[int, _Term] = {}  # node -> string of some leaf below it
        self.leaf: Dict[int, int] = {}  # record id -> leaf node
        self.last_splits = 0
        self.last_attaches = 0

    def lcp(self, a: Optional[Handle], b: Optional[Handle]) -> int:
        if a is None or b is None:
            return 0
        return self.g.lcp(a, b)

    def insert(self, h: Optional[Handle], rid: int, color: int) -> int:
        t = self.tree
        key = _Term(self.g, h, rid)
        self.last_splits = self.last_attaches = 0
        parent = 0
        if self.order:
            i = self.order.bisect_left(key)
            best, near = -1, None
            for j in (i - 1, i):
                if 0 <= j < len(self.order):
                    other = self.order[j]
                    l = self.lcp(h, other.h)
                    if l > best:
                        best, near = l, other
            x, child = self.leaf[near.id], None
            while t.weight[x] > best:
                child, x = x, t.parent[x]
            if t.weight[x] == best:
                parent = x
            else:
                parent = self.bt.split_edge(self.side, child, best)
                self.rep[parent] = self.rep[child]
                self.last_splits = 1
        leaf = self.bt.attach_leaf(self.side, parent, _length(h) + 1, rid, color)
        self.last_attaches = 1
        self.rep[leaf] = key
        self.leaf[rid] = leaf
        self.order.add(key)
        return leaf

    def delete(self, rid: int):
        self.bt.delete_leaf(self.side, self.leaf[rid])

    def path_label(self, v: int) -> tuple:
        term = self.rep.get(v)
        d = self.tree.weight[v]
        if term is None or d == 0:
            return ()
        return tuple(self.g.expand(term.h)[:d])

    def live_shape(self, live: set) -> list:
        """The trie restricted to live records, in ``trie_brute`` format."""
        t = self.tree
        has_live = [False] * t.size
        for rid in live:
            x = self.leaf[rid]
            while x >= 0 and not has_live[x]:
                has_live[x] = True
                x = t.parent[x]
        out = [()]
        for v in range(1, t.size):
            if not has_live[v] or not t.children[v]:
                continue
            if sum(has_live[c] for c in t.children[v]) >= 2:
                out.append(self.path_label(v))
        for rid in live:
            term = self.rep[self.leaf[rid]]
            out.append(("leaf",) + (tuple(self.g.expand(term.h)) if term.h is not None else ()))
        return sorted(out, key=repr)


class PairFamilies:
    def __init__(self, g: Grammar):
        self.g = g
        self.records: Dict[int, PairRecord] = {}
        self.rebuilds = 0
        self._fresh()

    def _fresh(self):
        self.bt = BicoloredTrees()
        self.tries = (DynTrie(self.g, self.bt, 0), DynTrie(self.g, self.bt, 1))
        self.dead = 0

    def __len__(self):
        return len(self.records)

    def insert_pair(self, rec: PairRecord):
        if rec.id in self.records:
            raise PairFamilyError("duplicate record id %r" % (rec.id,))
        if rec.family not in (RED, BLUE):
            raise PairFamilyError("family must be RED or BLUE")
        self.records[rec.id] = rec
        self.tries[0].insert(rec.P, rec.id, rec.family)
        self.tries[1].insert(rec.Q, rec.id, rec.family)

    def delete_pair(self, rid: int):
        if rid not in self.records:
            raise PairFamilyError("unknown record id %r" % (rid,))
        del self.records[rid]
        self.tries[0].delete(rid)
        self.tries[1].delete(rid)
        self.dead += 1
        if self.dead > max(REBUILD_MIN, len(self.records)):
            self.rebuild()

    def load(self, records):
        """Insert many records at once into an empty instance."""
        if self.records:
            raise PairFamilyError("load needs an empty instance")
        recs = list(records)
        for rec in recs:
            if rec.id in self.records:
                raise PairFamilyError("duplicate record id %r" % (rec.id,))
            self.records[rec.id] = rec
        self._load_all()

    def _load_all(self):
        self.bt.begin_bulk()
        for rid in sorted(self.records):
            rec = self.records[rid]
            self.tries[0].insert(rec.P, rid, rec.family)
            self.tries[1].insert(rec.Q, rid, rec.family)
        self.bt.end_bulk()

    def rebuild(self):
        self.rebuilds += 1
        self._fresh()
        self._load_all()

    def best(self) -> Optional[FamilyBest]:
        b = self.bt.global_best()
        if b is None:
            return None
        t1, t2 = self.bt.trees
        return FamilyBest(b.red, b.blue, b.total, t1.weight[b.u], t2.weight[b.v])

    def leaf_count(self) -> int:
        return len(self.tries[0].leaf)

    def live_shapes(self):
        live = set(self.records)
        return self.tries[0].live_shape(live), self.tries[1].live_shape(live)


def insert_pair(pf: PairFamilies, rec: PairRecord):
    pf.insert_pair(rec)


def delete_pair(pf: PairFamilies, rid: int):
    pf.delete_pair(rid)


def best(pf: PairFamilies) -> Optional[FamilyBest]:
    return pf.best()
