"""Anchor pairs of a parse tree and their maintenance under substitutions.

For a node v at level h whose parent z has more than one child, two windows of
level-h nodes are formed around the boundary right after v:

* z a concatenation (two children): J_up = the K nodes ending with v,
  J_down = the next K + deg(w) nodes, w being the parent of v's right
  neighbour;
* z a power with r > 1 children, v among its K+1 leftmost or K+1 rightmost
  children: J_up = the K nodes preceding z's first child plus z's children up
  to v, J_down = the next K nodes, or K + deg(w) when v is z's last child and
  its right neighbour's parent w has more than two children.

With Y_l = val(J_up) and Y_r = val(J_down), every common substring X of two
strings splits as X_l X_r with X_l a suffix of Y_l and X_r a prefix of Y_r for
some node of each parse tree (provided K is large enough; see
``default_window``).  A pair is stored as the triple (a, b, c) of positions:
Y_l = X[a..b-1] and Y_r = X[b..c-1].
"""

from __future__ import annotations

from collections import Counter
from typing import Dict, List, NamedTuple, Optional, Tuple

import numpy as np

from .grammar import CONCAT, LETTER, POWER, Grammar, Handle, Item, Walker

Triple = Tuple[int, int, int]


DEFAULT_WINDOW = 4


def default_window(n: int = 0) -> int:
    """Window size K.

    Recompression decides each block from a constant-size neighbourhood, so a
    constant window suffices; exhaustive checks on short strings find K = 3 to
    be the smallest value that anchors every common substring, and one unit of
    slack is added.
    """
    return DEFAULT_WINDOW


class AnchorPair(NamedTuple):
    id: int
    owner: str
    a: int
    b: int
    c: int


class LevelView:
    """Lazily materialised run of consecutive nodes on one level."""

    __slots__ = ("g", "n", "lvl", "w", "nodes", "lo", "hi", "base_start")

    def __init__(self, g: Grammar, h: Handle, lvl: int, p: int):
        self.g, self.n, self.lvl = g, h.length, lvl
        self.w = Walker(g, h)
        sym, start = self.w.node_at(lvl, p)
        self.nodes = {0: (sym, start) + self.w.parent_info(lvl)}
        self.lo = self.hi = 0

    def get(self, i: int):
        nodes = self.nodes
        if i in nodes:
            return nodes[i]
        length = self.g.length
        while i > self.hi:
            sym, start = nodes[self.hi][:2]
            p = start + length[sym]
            if p > self.n:
                return None
            s2, st2 = self.w.node_at(self.lvl, p)
            self.hi += 1
            nodes[self.hi] = (s2, st2) + self.w.parent_info(self.lvl)
        while i < self.lo:
            start = nodes[self.lo][1]
            if start == 1:
                return None
            s2, st2 = self.w.node_at(self.lvl, start - 1)
            self.lo -= 1
            nodes[self.lo] = (s2, st2) + self.w.parent_info(self.lvl)
        return nodes[i]

    def end(self, i: int) -> int:
        node = self.get(i)
        return node[1] + self.g.length[node[0]] - 1


def _pair_at(view: LevelView, i: int, K: int) -> Optional[Triple]:
    node = view.get(i)
    sym, start, pk, pd, t, pstart = node
    if pk != CONCAT and pk != POWER:
        return None
    if pk == POWER and K < t < pd - K - 1:
        return None
    g = view.g
    b = start + g.length[sym]
    # left end of J_up
    first = i - K + 1 if pk == CONCAT else i - t - K
    if first < view.lo and view.get(first) is None:
        a = 1
    else:
        nd = view.get(first)
        a = nd[1] if nd is not None else 1
    # right end of J_down
    right = view.get(i + 1)
    if right is None:
        return (a, b, b)
    wdeg = right[3]
    cnt = K
    if pk == CONCAT or (t == pd - 1 and wdeg > 2):
        cnt = K + wdeg
    last = view.get(i + cnt)
    if last is None:
        c = view.n + 1
    else:
        c = last[1] + g.length[last[0]]
    return (a, b, c)


def family_from_scratch(g: Grammar, h: Handle, K: int) -> Counter:
    """Multiset of triples (a, b, c) over all nodes of the parse tree."""
    out = Counter()
    if h.length == 1:
        # a lone letter has no branching ancestor; anchor it on both sides
        out[(1, 1, 2)] += 1
        out[(1, 2, 2)] += 1
        return out
    for lvl in range(g.lev[h.root] + 1):
        view = LevelView(g, h, lvl, 1)
        i = 0
        while view.get(i) is not None:
            tr = _pair_at(view, i, K)
            if tr is not None:
                out[tr] += 1
            i += 1
    return out


def pairs_for_node(g: Grammar, h: Handle, level: int, start: int, K: int) -> List[Triple]:
    """Pair (as a triple) created for the node at (level, start), if any."""
    view = LevelView(g, h, level, start)
    if view.get(0)[1] != start:
        raise ValueError("no node starts at %d on level %d" % (start, level))
    tr = _pair_at(view, 0, K)
    return [] if tr is None else [tr]


def _active_spans(g: Grammar, layer: List[Item], center: int):
    """Per level h, the position span of layer items with level <= h."""
    starts = []
    p = 1
    for sym, e, _ in layer:
        starts.append(p)
        p += g.length[sym] * e
    n = p - 1
    top = max(l for _, _, l in layer)
    spans = []
    lo = hi = center
    for h in range(top + 1):
        while lo > 0 and layer[lo - 1][2] <= h:
            lo -= 1
        while hi + 1 < len(layer) and layer[hi + 1][2] <= h:
            hi += 1
        end = starts[hi] + g.length[layer[hi][0]] * layer[hi][1] - 1
        spans.append((starts[lo], end))
    return spans, n


def _region_pairs(view: LevelView, lo_idx: int, rpos: int, K: int, out: Counter):
    i = lo_idx
    while True:
        node = view.get(i)
        if node is None or node[1] > rpos:
            break
        tr = _pair_at(view, i, K)
        if tr is not None:
            out[tr] += 1
        i += 1


def substitution_diff(g: Grammar, before: Handle, after: Handle, layer: List[Item],
                      center: int, K: int, content_changed: bool = True):
    """Triples removed from / added to the family by one substitution.

    ``layer`` is the spliced layer of ``after`` and ``center`` the index of the
    substituted letter in it.  Triples whose windows cover the edited position
    are reported on both sides when the content changed, since their strings
    differ even though the positions agree.
    """
    if before.length == 1:
        # the two root pairs of a lone letter always cover the edit
        fam = family_from_scratch(g, before, K)
        return (fam, Counter(fam)) if content_changed else (Counter(), Counter())
    spans, n = _active_spans(g, layer, center)
    pos =sum(g.length[s] * e for s, e, _ in layer[:center]) + 1
    Hb, Ha = g.lev[before.root], g.lev[after.root]
    cb, ca = Counter(), Counter()
    for h in range(max(Hb, Ha) + 1):
        p, q = spans[h] if h < len(spans) else (1, n)
        vb = LevelView(g, before, h, p) if h <= Hb else None
        va = LevelView(g, after, h, p) if h <= Ha else None
        ref = vb if vb is not None else va
        # how far left a J_down window can reach from
        maxdeg = max(v.get(0)[3] for v in (vb, va) if v is not None)
        for d in range(1, K + 2):
            nd = ref.get(-d)
            if nd is None:
                break
            maxdeg = max(maxdeg, nd[3])
        lim = K + 1 + maxdeg
        lo_idx = 0
        for d in range(1, lim + 1):
            if ref.get(-d) is None:
                break
            lo_idx = -d
        # how far right a J_up window can reach from: K nodes, or a whole power
        j = 0
        while ref.end(j) < q:
            j += 1
        last = j
        for d in range(1, K + 2):
            nd = ref.get(j + d)
            if nd is None:
                break
            last = max(last, j + d)
            if nd[2] == POWER:
                last = max(last, j + d + nd[3] - 1 - nd[4])
        nd = ref.get(last) if last > j else None
        rpos = n if nd is None else nd[1]
        if vb is not None:
            _region_pairs(vb, lo_idx, rpos, K, cb)
        if va is not None:
            _region_pairs(va, lo_idx, rpos, K, ca)
    removed, added = Counter(), Counter()
    for tr in set(cb) | set(ca):
        x, y = cb.get(tr, 0), ca.get(tr, 0)
        if content_changed and tr[0] <= pos < tr[2]:
            if x:
                removed[tr] = x
            if y:
                added[tr] = y
        elif x > y:
            removed[tr] = x - y
        elif y > x:
            added[tr] = y - x
    return removed, added


class AnchorFamily:
    """Reference-counted family of anchor pairs for one owner string.

    Each distinct triple is one logical pair with an id; ids are drawn from a
    shared counter so that a content change (same triple, new strings) always
    yields a fresh id.
    """

    def __init__(self, owner: str, counter=None):
        self.owner = owner
        self.count: Dict[Triple, int] = {}
        self.ids: Dict[Triple, int] = {}
        self._counter = counter if counter is not None else _Counter()

    def __len__(self):
        return len(self.count)

    def as_counter(self) -> Counter:
        return Counter(self.count)

    def pairs(self) -> List[AnchorPair]:
        return [AnchorPair(self.ids[t], self.owner, *t) for t in self.count]

    def apply(self, removed: Counter, added: Counter):
        """Apply a diff; returns (deleted pair ids, inserted AnchorPairs)."""
        deleted, inserted = [], []
        for tr, k in removed.items():
            c = self.count[tr] - k
            if c < 0:
                raise ValueError("removing more copies of %r than present" % (tr,))
            if c == 0:
                del self.count[tr]
                deleted.append(self.ids.pop(tr))
            else:
                self.count[tr] = c
        for tr, k in added.items():
            c = self.count.get(tr, 0)
            if c == 0:
                pid = self._counter.next()
                self.ids[tr] = pid
                inserted.append(AnchorPair(pid, self.owner, *tr))
            self.count[tr] = c + k
        return deleted, inserted


class _Counter:
    def __init__(self):
        self.value = 0

    def next(self) -> int:
        self.value += 1
        return self.value


def diff_update(g: Grammar, before: Handle, after: Handle, layer, center, K, family: AnchorFamily,
                content_changed: bool = True):
    removed, added = substitution_diff(g, before, after, layer, center, K, content_changed)
    return family.apply(removed, added)


# ------------------------------------------------------------- anchoring check
def _split_table(n: int, triples) -> np.ndarray:
    """R[s, e, b] = True when X[s..e-1] splits at b inside some pair's windows."""
    R = np.zeros((n + 2, n + 2, n + 2), dtype=bool)
    for a, b, c in triples:
        R[a:b + 1, b:c + 1, b] = True
    return R


def anchoring_failures(S, T, fam_s, fam_t, limit: int = 1) -> list:
    """Common substrings of S and T with no witness (partition, S-pair, T-pair)."""
    S, T = tuple(S), tuple(T)
    RS = _split_table(len(S), fam_s)
    RT = _split_table(len(T), fam_t)
    occ_s: Dict[tuple, list] = {}
    for s in range(1, len(S) + 1):
        for e in range(s + 1, len(S) + 2):
            occ_s.setdefault(S[s - 1:e - 1], []).append((s, e))
    occ_t: Dict[tuple, list] = {}
    for s in range(1, len(T) + 1):
        for e in range(s + 1, len(T) + 2):
            x = T[s - 1:e - 1]
            if x in occ_s:
                occ_t.setdefault(x, []).append((s, e))
    bad = []
    for x, occs_t in occ_t.items():
        ks = set()
        for s, e in occ_s[x]:
            ks.update((np.flatnonzero(RS[s, e]) - s).tolist())
        ok = False
        for s, e in occs_t:
            kt = np.flatnonzero(RT[s, e]) - s
            if any(k in ks for k in kt.tolist()):
                ok = True
                break
        if not ok:
            bad.append(x)
            if len(bad) >= limit:
                break
    return bad
