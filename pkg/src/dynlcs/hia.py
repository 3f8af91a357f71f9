"""Heaviest induced ancestors over two weighted, labelled trees.

Two nodes u' (first tree) and v' (second tree) are *induced* when some label
occurs below both.  ``hia_query(u, cap_u, v, cap_v)`` maximises
``min(w(u'), cap_u) + min(w(v'), cap_v)`` over induced pairs of ancestors.

Both trees get a heavy-path decomposition.  A label contributes one point per
pair (p, q) of heavy paths met on the way up from its two nodes, with
coordinates equal to the positions where it leaves p and q.  A query walks the
O(log n) heavy paths above u and above v and, for each pair (p, q), finds the
best point in O(log n).  Since path weights increase with the position, a
point dominated in both coordinates never wins; each group keeps only its
staircase of undominated points, which reduces a group query to two binary
searches and a range-maximum query.
"""

from __future__ import annotations

from array import array
from bisect import bisect_left, bisect_right
from typing import Dict, NamedTuple, Optional, Sequence

import numpy as np


class HiaError(ValueError):
    pass


class DuplicateLabelError(HiaError):
    pass


class WeightedTree:
    """A rooted tree given by parent pointers (root: -1) and node weights.

    ``labels`` maps node -> label; labels must be distinct within the tree.
    """

    def __init__(self, parent: Sequence[int], weight: Sequence[int], labels: Dict[int, int]):
        self.parent = list(parent)
        self.weight = list(weight)
        n = len(self.parent)
        if n == 0 or len(self.weight) != n:
            raise HiaError("parent and weight arrays must be non-empty and aligned")
        roots = [v for v, p in enumerate(self.parent) if p < 0]
        if len(roots) != 1:
            raise HiaError("tree must have exactly one root")
        self.root = roots[0]
        for v, p in enumerate(self.parent):
            if p >= 0 and not self.weight[v] > self.weight[p]:
                raise HiaError("weights must strictly increase away from the root (node %d)" % v)
        seen = set()
        for node, lab in labels.items():
            if lab in seen:
                raise DuplicateLabelError("label %r occurs twice" % (lab,))
            seen.add(lab)
            if not 0 <= node < n:
                raise HiaError("labelled node %d out of range" % node)
        self.labels = dict(labels)
        self.node_of = {lab: node for node, lab in self.labels.items()}
        self.size = n


class _Paths:
    """Heavy-path decomposition (heavy child = largest subtree)."""

    def __init__(self, tree: WeightedTree):
        n = tree.size
        parent = tree.parent
        children = [[] for _ in range(n)]
        for v, p in enumerate(parent):
            if p >= 0:
                children[p].append(v)
        order = [tree.root]
        for v in order:
            order.extend(children[v])
        size = [1] * n
        for v in reversed(order):
            p = parent[v]
            if p >= 0:
                size[p] += size[v]
        heavy = [-1] * n
        for v in range(n):
            best = -1
            for c in children[v]:
                if best < 0 or size[c] > size[best]:
                    best = c
            heavy[v] = best
        path_of = [0] * n
        pos_of = [0] * n
        paths = []
        for v in order:
            p = parent[v]
            if p >= 0 and heavy[p] == v:
                continue
            pid = len(paths)
            nodes = []
            x = v
            while x >= 0:
                path_of[x] = pid
                pos_of[x] = len(nodes)
                nodes.append(x)
                x = heavy[x]
            paths.append(nodes)
        self.paths = paths
        self.path_of = path_of
        self.pos_of = pos_of
        self.weights = [[tree.weight[x] for x in nodes] for nodes in paths]
        self.parent = parent

    def above(self, v: int):
        """(path, exit position) for every heavy path met on the way to the root."""
        out = []
        while v >= 0:
            p = self.path_of[v]
            out.append((p, self.pos_of[v]))
            v = self.parent[self.paths[p][0]]
        return out


class HiaResult(NamedTuple):
    u: int
    v: int
    total: int
    label: int


class HiaIndex:
    def __init__(self, t1: WeightedTree, t2: WeightedTree):
        self.t1, self.t2 = t1, t2
        self.h1, self.h2 = _Paths(t1), _Paths(t2)
        n2 = len(self.h2.paths)
        gid, xs, ys, labs = array("q"), array("q"), array("q"), array("q")
        for node1, lab in t1.labels.items():
            node2 = t2.node_of.get(lab)
            if node2 is None:
                continue
            a2 = self.h2.above(node2)
            for p, x in self.h1.above(node1):
                base = p * n2
                for q, y in a2:
                    gid.append(base + q)
                    xs.append(x)
                    ys.append(y)
                    labs.append(lab)
        self._finalize(np.frombuffer(gid, dtype=np.int64), np.frombuffer(xs, dtype=np.int64),
                       np.frombuffer(ys, dtype=np.int64), np.frombuffer(labs, dtype=np.int64), n2)

    def _finalize(self, gid, xs, ys, labs, n2):
        self.n2 = n2
        self.groups: Dict[int, tuple] = {}
        if len(gid) == 0:
            self.xs = self.negys = self.labs = self.h = []
            self.sparse = [[]]
            return
        order = np.lexsort((-ys, -xs, gid))
        gid, xs, ys, labs = gid[order], xs[order], ys[order], labs[order]
        big = int(ys.max()) + 2
        key = ys + gid * big
        run = np.maximum.accumulate(key)
        first = np.ones(len(gid), dtype=bool)
        first[1:] = gid[1:] != gid[:-1]
        keep = first.copy()
        keep[1:] |= key[1:] > run[:-1]
        gid, xs, ys, labs = gid[keep][::-1], xs[keep][::-1], ys[keep][::-1], labs[keep][::-1]
        # now ascending x (strictly) and descending y inside each group; groups descending
        p_idx = gid // n2
        q_idx = gid % n2
        w1 = np.concatenate([np.asarray(w, dtype=np.int64) for w in self.h1.weights])
        off1 = np.cumsum([0] + [len(w) for w in self.h1.weights])
        w2 = np.concatenate([np.asarray(w, dtype=np.int64) for w in self.h2.weights])
        off2 = np.cumsum([0] + [len(w) for w in self.h2.weights])
        h = w1[off1[p_idx] + xs] + w2[off2[q_idx] + ys]
        bounds = np.flatnonzero(np.r_[True, gid[1:] != gid[:-1], True])
        for s, e in zip(bounds[:-1].tolist(), bounds[1:].tolist()):
            self.groups[int(gid[s])] = (s, e)
        self.xs = xs.tolist()
        self.negys = (-ys).tolist()
        self.labs = labs.tolist()
        self.h = h.tolist()
        # sparse table of argmax over h
        idx = np.arange(len(h))
        table = [idx]
        j = 1
        while (1 << j) <= len(h):
            prev = table[-1]
            half = 1 << (j - 1)
            a, b = prev[:-half], prev[half:]
            table.append(np.where(h[a] >= h[b], a, b))
            j += 1
        self.sparse = [t.tolist() for t in table]

    def _range_argmax(self, lo: int, hi: int) -> int:
        """Index of the maximum of h[lo:hi] (hi exclusive, non-empty)."""
        k = (hi - lo).bit_length() - 1
        row = self.sparse[k]
        a, b = row[lo], row[hi - (1 << k)]
        return a if self.h[a] >= self.h[b] else b

    def point_count(self) -> int:
        return len(self.xs)

    def query(self, u: int, cap_u: int, v: int, cap_v: int) -> Optional[HiaResult]:
        if not 0 <= u < self.t1.size:
            raise HiaError("node %r is not in the first tree" % (u,))
        if not 0 <= v < self.t2.size:
            raise HiaError("node %r is not in the second tree" % (v,))
        h1, h2 = self.h1, self.h2
        side1 = []
        for p, X in h1.above(u):
            W = h1.weights[p]
            Xe = min(X, bisect_left(W, cap_u))
            side1.append((min(W[X], cap_u), p, X, Xe))
        side2 = []
        for q, Y in h2.above(v):
            W = h2.weights[q]
            Ye = min(Y, bisect_left(W, cap_v))
            side2.append((min(W[Y], cap_v), q, Y, Ye))
        cands = []
        groups = self.groups
        n2 = self.n2
        for wx, p, X, Xe in side1:
            for wy, q, Y, Ye in side2:
                g = groups.get(p * n2 + q)
                if g is not None:
                    cands.append((wx + wy, wx, p, X, Xe, wy, q, Y, Ye, g))
        cands.sort(key=lambda c: -c[0])
        best = None
        xs, negys, labs, h = self.xs, self.negys, self.labs, self.h
        for bound, wx, p, X, Xe, wy, q, Y, Ye, (s, e) in cands:
            if best is not None and bound <= best[2]:
                break
            i = bisect_left(xs, Xe, s, e)       # [s, i): x < Xe
            j = bisect_right(negys, -Ye, s, e)  # [j, e): y < Ye
            P1 = h1.weights[p]
            P2 = h2.weights[q]
            if i > j:
                k = self._range_argmax(j, i)
                val, idx, ux, vy = h[k], k, xs[k], -negys[k]
            elif i < j:
                val, idx, ux, vy = bound, i, min(xs[i], X), min(-negys[i], Y)
            else:
                val, idx = -1, -1
            lo, hi = min(i, j), max(i, j)
            if lo > s:
                k = lo - 1
                c = P1[xs[k]] + wy
                if c > val:
                    val, idx, ux, vy = c, k, xs[k], min(-negys[k], Y)
            if hi < e:
                k = hi
                c = wx + P2[-negys[k]]
                if c > val:
                    val, idx, ux, vy = c, k, min(xs[k], X), -negys[k]
            if idx >= 0 and (best is None or val > best[2]):
                best = (h1.paths[p][ux], h2.paths[q][vy], val, labs[idx])
        return HiaResult(*best) if best is not None else None


def build_hia(t1: WeightedTree, t2: WeightedTree) -> HiaIndex:
    return HiaIndex(t1, t2)


def hia_query(idx: HiaIndex, u: int, cap_u: int, v: int, cap_v: int) -> Optional[HiaResult]:
    return idx.query(u, cap_u, v, cap_v)
