"""Dynamic best bichromatic point pair.

Maintains a multiset of red and blue points and reports a red/blue pair
maximising ``min(x, x') + min(y, y')``.

Storage is a two-level range tree.  The primary tree is leaf-oriented and keyed
by ``(x, seq)``; every internal node u keeps a secondary tree over the points
below it, keyed by ``(y, seq)``, in which each point remembers on which side of
u's split it lies.  A pair separated by u (one point left, one right) is
separated by exactly one node v of u's secondary tree (one point below, one
above), and for such pairs the objective has a closed form:

* left point below, right point above: both minima come from the left point,
  so the best value is the largest x+y among left-below points of one colour,
  provided some right-above point of the other colour exists;
* left point above, right point below: the minima are the left point's x and
  the right point's y, so the best is max x (left-above) + max y (right-below).

Each secondary node stores, per colour, the left-side points with maximum x
and maximum x+y and the right-side point with maximum y (all the formula
needs), plus the best pair it or its descendants separate; each primary node stores the best pair among the points
below it.  Both levels are weight balanced by rebuilding a subtree when one
child holds more than ALPHA of its points.

Ties in a coordinate are broken by insertion order, which never changes the
reported value because values are computed from raw coordinates.
"""

from __future__ import annotations

import itertools
from typing import Dict, List, NamedTuple, Optional, Tuple

import numpy as np

RED, BLUE = 0, 1
ALPHA = 0.75
_NF = 6


class GeomError(ValueError):
    pass


class ColoredPoint(NamedTuple):
    x: int
    y: int
    color: int
    label: object


class BestPair(NamedTuple):
    red: object
    blue: object
    value: int


# --------------------------------------------------------------- aggregates
# Only six per-node maxima are needed by the cross-pair formula:
#   0/1: max x   among left-side points (red/blue)
#   2/3: max y   among right-side points (red/blue)
#   4/5: max x+y among left-side points (red/blue)
# Each entry is (value, point) or None.

def _leaf_fields(p: ColoredPoint, side: int) -> list:
    f = [None] * _NF
    c = p.color
    if side == 0:
        f[c] = (p.x, p)
        f[4 + c] = (p.x + p.y, p)
    else:
        f[2 + c] = (p.y, p)
    return f


def _merge_fields(a: list, b: list) -> list:
    out = a[:]
    for i in range(_NF):
        v = b[i]
        if v is not None:
            u = out[i]
            if u is None or v[0] > u[0]:
                out[i] = v
    return out


def _pair(p: ColoredPoint, q: ColoredPoint, value: int) -> BestPair:
    if p.color == RED:
        return BestPair(p.label, q.label, value)
    return BestPair(q.label, p.label, value)


def _better(a: Optional[BestPair], b: Optional[BestPair]) -> Optional[BestPair]:
    if a is None:
        return b
    if b is None or a.value >= b.value:
        return a
    return b


def _cross(lo: list, hi: list) -> Optional[BestPair]:
    """Best pair with one point in ``lo`` (smaller y) and one in ``hi``."""
    best = None
    for c in (RED, BLUE):
        o = 1 - c
        # left point below, right point above: value = x + y of the left point,
        # partnered with any right point above (the highest one is reported)
        s = lo[4 + c]
        if s is not None:
            q = hi[2 + o]
            if q is not None:
                best = _better(best, _pair(s[1], q[1], s[0]))
        # left point above, right point below
        mx = hi[c]
        my = lo[2 + o]
        if mx is not None and my is not None:
            best = _better(best, _pair(mx[1], my[1], mx[0] + my[0]))
    return best


# ----------------------------------------------------------- secondary tree
class _SNode:
    __slots__ = ("left", "right", "size", "key", "fields", "best", "point", "side")

    def __init__(self):
        self.left = self.right = None
        self.point = None
        self.side = 0
        self.best = None


def _s_leaf(ykey, p: ColoredPoint, side: int) -> _SNode:
    n = _SNode()
    n.size = 1
    n.key = ykey
    n.point = p
    n.side = side
    n.fields = _leaf_fields(p, side)
    return n


def _s_build(leaves: List[_SNode], lo: int, hi: int) -> _SNode:
    if hi - lo == 1:
        return leaves[lo]
    mid = (lo + hi) // 2
    n = _SNode()
    n.left = _s_build(leaves, lo, mid)
    n.right = _s_build(leaves, mid, hi)
    n.key = leaves[mid - 1].key  # routing key: max key of the left subtree
    _s_pull(n)
    return n


def _s_pull(n: _SNode):
    a, b = n.left, n.right
    n.size = a.size + b.size
    n.fields = _merge_fields(a.fields, b.fields)
    n.best = _better(_better(a.best, b.best), _cross(a.fields, b.fields))


def _s_collect(n: _SNode, out: list):
    if n.point is not None:
        out.append(n)
        return
    _s_collect(n.left, out)
    _s_collect(n.right, out)


def _s_max_key(n: _SNode):
    while n.point is None:
        n = n.right
    return n.key


def _s_insert(n: Optional[_SNode], leaf: _SNode, stats) -> _SNode:
    if n is None:
        return leaf
    if n.point is not None:
        m = _SNode()
        if leaf.key < n.key:
            m.left, m.right = leaf, n
        else:
            m.left, m.right = n, leaf
        m.key = m.left.key
        _s_pull(m)
        return m
    if leaf.key <= n.key:
        n.left = _s_insert(n.left, leaf, stats)
    else:
        n.right = _s_insert(n.right, leaf, stats)
    _s_pull(n)
    return _s_balance(n, stats)


def _s_delete(n: _SNode, ykey) -> Optional[_SNode]:
    if n.point is not None:
        if n.key != ykey:
            raise GeomError("point missing from secondary tree")
        return None
    if ykey <= n.key:
        sub = _s_delete(n.left, ykey)
        if sub is None:
            return n.right
        n.left = sub
    else:
        sub = _s_delete(n.right, ykey)
        if sub is None:
            return n.left
        n.right = sub
    n.key = _s_max_key(n.left)
    _s_pull(n)
    return n


def _s_balance(n: _SNode, stats) -> _SNode:
    if n.size >= 4 and max(n.left.size, n.right.size) > ALPHA * n.size:
        leaves = []
        _s_collect(n, leaves)
        stats["rebuilds"] += 1
        return _s_build(leaves, 0, len(leaves))
    return n


# ------------------------------------------------------------- primary tree
class _PNode:
    __slots__ = ("left", "right", "size", "key", "sec", "best", "point")

    def __init__(self):
        self.left = self.right = None
        self.sec = None
        self.point = None
        self.best = None


class BichromaticSet:
    """Multiset of coloured points with a maintained best red/blue pair."""

    def __init__(self):
        self.root: Optional[_PNode] = None
        self.points: Dict[object, Tuple[ColoredPoint, tuple, tuple]] = {}
        self._seq = itertools.count()
        self.stats = {"rebuilds": 0}

    @classmethod
    def from_points(cls, points) -> "BichromaticSet":
        """Build in O(k log k) from an iterable of ColoredPoints."""
        ds = cls()
        items = []
        for p in points:
            if p.color not in (RED, BLUE):
                raise GeomError("colour must be RED or BLUE")
            if p.label in ds.points:
                raise GeomError("label %r already present" % (p.label,))
            s = next(ds._seq)
            xk, yk = (p.x, s), (p.y, s)
            ds.points[p.label] = (p, xk, yk)
            items.append((xk, yk, p))
        if items:
            items.sort(key=lambda t: t[0])
            by_y = sorted(range(len(items)), key=lambda i: items[i][1])
            ds.root = ds._build(items, 0, len(items), by_y)
        return ds

    def __len__(self):
        return len(self.points)

    def __contains__(self, label):
        return label in self.points

    # ------------------------------------------------------------ updates
    def insert(self, p: ColoredPoint):
        if p.color not in (RED, BLUE):
            raise GeomError("colour must be RED or BLUE")
        if p.label in self.points:
            raise GeomError("label %r already present" % (p.label,))
        s = next(self._seq)
        xk, yk = (p.x, s), (p.y, s)
        self.points[p.label] = (p, xk, yk)
        self.root = self._insert(self.root, p, xk, yk)

    def delete(self, label):
        rec = self.points.pop(label, None)
        if rec is None:
            raise GeomError("unknown label %r" % (label,))
        p, xk, yk = rec
        self.root = self._delete(self.root, xk, yk)

    def best_pair(self) -> Optional[BestPair]:
        return None if self.root is None else self.root.best

    def _insert(self, n: Optional[_PNode], p, xk, yk) -> _PNode:
        if n is None:
            leaf = _PNode()
            leaf.size, leaf.key, leaf.point = 1, (xk, yk), p
            return leaf
        if n.point is not None:
            leaf = self._insert(None, p, xk, yk)
            m = _PNode()
            m.left, m.right = (leaf, n) if xk < n.key[0] else (n, leaf)
            return self._make_internal(m)
        side = 0 if xk <= n.key[0] else 1
        if side == 0:
            n.left = self._insert(n.left, p, xk, yk)
        else:
            n.right = self._insert(n.right, p, xk, yk)
        n.size += 1
        n.sec = _s_insert(n.sec, _s_leaf(yk, p, side), self.stats)
        n.best = _better(_better(n.left.best, n.right.best), n.sec.best)
        if max(n.left.size, n.right.size) > ALPHA * n.size and n.size >= 4:
            return self._rebuild(n)
        return n

    def _delete(self, n: _PNode, xk, yk) -> Optional[_PNode]:
        if n.point is not None:
            return None
        if xk <= n.key[0]:
            sub = self._delete(n.left, xk, yk)
            if sub is None:
                return n.right
            n.left = sub
        else:
            sub = self._delete(n.right, xk, yk)
            if sub is None:
                return n.left
            n.right = sub
        n.size -= 1
        n.key = (self._max_key(n.left), None)
        n.sec = _s_delete(n.sec, yk)
        n.best = _better(_better(n.left.best, n.right.best), n.sec.best)
        if max(n.left.size, n.right.size) > ALPHA * n.size and n.size >= 4:
            return self._rebuild(n)
        return n

    @staticmethod
    def _max_key(n: _PNode):
        while n.point is None:
            n = n.right
        return n.key[0]

    def _make_internal(self, m: _PNode) -> _PNode:
        m.size = m.left.size + m.right.size
        m.key = (self._max_key(m.left), None)
        pts = self._leaves(m.left, 0) + self._leaves(m.right, 1)
        pts.sort(key=lambda t: t[0])
        leaves = [_s_leaf(yk, p, side) for yk, p, side in pts]
        m.sec = _s_build(leaves, 0, len(leaves))
        m.best = _better(_better(m.left.best, m.right.best), m.sec.best)
        return m

    def _leaves(self, n: _PNode, side: int) -> list:
        out = []
        stack = [n]
        while stack:
            v = stack.pop()
            if v.point is not None:
                out.append((v.key[1], v.point, side))
            else:
                stack.append(v.left)
                stack.append(v.right)
        return out

    def _rebuild(self, n: _PNode) -> _PNode:
        self.stats["rebuilds"] += 1
        items = [(k[0], k[1], p) for k, p in self._pleaves(n)]
        items.sort(key=lambda t: t[0])
        by_y = sorted(range(len(items)), key=lambda i: items[i][1])
        return self._build(items, 0, len(items), by_y)

    def _pleaves(self, n: _PNode) -> list:
        out = []
        stack = [n]
        while stack:
            v = stack.pop()
            if v.point is not None:
                out.append((v.key, v.point))
            else:
                stack.append(v.left)
                stack.append(v.right)
        return out

    def _build(self, items, lo, hi, by_y) -> _PNode:
        """Build over items[lo:hi] (sorted by x); by_y lists those indices by y."""
        if hi - lo == 1:
            xk, yk, p = items[lo]
            leaf = _PNode()
            leaf.size, leaf.key, leaf.point = 1, (xk, yk), p
            return leaf
        mid = (lo + hi) // 2
        left_y = [i for i in by_y if i < mid]
        right_y = [i for i in by_y if i >= mid]
        m = _PNode()
        m.left = self._build(items, lo, mid, left_y)
        m.right = self._build(items, mid, hi, right_y)
        m.size = hi - lo
        m.key = (items[mid - 1][0], None)
        leaves = [_s_leaf(items[i][1], items[i][2], 0 if i < mid else 1) for i in by_y]
        m.sec = _s_build(leaves, 0, len(leaves))
        m.best = _better(_better(m.left.best, m.right.best), m.sec.best)
        return m

    # -------------------------------------------------------------- audit
    def audit(self):
        """Recompute every stored field from scratch and compare (test helper)."""
        if self.root is None:
            assert not self.points
            return
        assert self.root.size == len(self.points)
        self._audit_p(self.root)

    def _audit_p(self, n: _PNode):
        if n.point is not None:
            assert n.size == 1 and n.best is None
            return [(n.key, n.point)]
        L = self._audit_p(n.left)
        R = self._audit_p(n.right)
        assert n.size == len(L) + len(R)
        assert all(k[0] <= n.key[0] for k, _ in L) and all(k[0] > n.key[0] for k, _ in R)
        pts = [(k[1], p, 0) for k, p in L] + [(k[1], p, 1) for k, p in R]
        pts.sort(key=lambda t: t[0])
        got = []
        self._audit_s(n.sec, got)
        assert [(yk, p.label, s) for yk, p, s in got] == [(yk, p.label, s) for yk, p, s in pts]
        expect = _better(_better(n.left.best, n.right.best), n.sec.best)
        assert _val(n.best) == _val(expect)
        return L + R

    def _audit_s(self, n: _SNode, out):
        if n.point is not None:
            assert n.fields == _leaf_fields(n.point, n.side) and n.best is None
            out.append((n.key, n.point, n.side))
            return
        start = len(out)
        self._audit_s(n.left, out)
        mid = len(out)
        self._audit_s(n.right, out)
        assert n.size == len(out) - start
        assert all(k <= n.key for k, _, _ in out[start:mid]) and all(k > n.key for k, _, _ in out[mid:])
        # fields recomputed from the points themselves
        fields = [None] * _NF
        for _, p, s in out[start:]:
            fields = _merge_fields(fields, _leaf_fields(p, s))
        assert [_val(f) for f in n.fields] == [_val(f) for f in fields]
        # best separated pair in this subtree, by enumeration over separating nodes
        sub = out[start:]
        lo, hi = out[start:mid], out[mid:]
        cross = None
        for _, p, sp in lo:
            for _, q, sq in hi:
                if sp != sq and p.color != q.color:
                    cross = _better(cross, _pair(p, q, min(p.x, q.x) + min(p.y, q.y)))
        expect = _better(_better(n.left.best, n.right.best), cross)
        assert _val(n.best) == _val(expect), (n.best, expect, len(sub))

    def separating_nodes(self, a, b) -> int:
        """Number of secondary nodes (over all primary nodes) separating labels a and b."""
        pa, xa, ya = self.points[a]
        pb, xb, yb = self.points[b]
        count = 0
        stack = [self.root]
        while stack:
            n = stack.pop()
            if n is None or n.point is not None:
                continue
            sa = 0 if xa <= n.key[0] else 1
            sb = 0 if xb <= n.key[0] else 1
            if sa == sb:
                stack.append(n.left if sa == 0 else n.right)
                continue
            s = n.sec
            while s.point is None:
                da = ya <= s.key
                db = yb <= s.key
                if da != db:
                    count += 1
                    break
                s = s.left if da else s.right
        return count


def _val(r):
    return None if r is None else r[0] if not isinstance(r, BestPair) else r.value


def insert_point(ds: BichromaticSet, p: ColoredPoint):
    ds.insert(p)


def delete_point(ds: BichromaticSet, label):
    ds.delete(label)


def best_pair(ds: BichromaticSet) -> Optional[BestPair]:
    return ds.best_pair()


class SmallPointSet:
    """Same interface as BichromaticSet, by vectorised enumeration.

    Points are kept in one coordinate array per colour.  Inserting compares
    the new point against every point of the other colour; deleting a member
    of the current best pair recomputes the best over all red/blue pairs.
    Meant for sets of at most ``SMALL_SET`` points, where this beats the
    range tree by a wide margin.
    """

    def __init__(self, points=()):
        self.points: Dict[object, Tuple[ColoredPoint, None, None]] = {}
        self._pts: List[List[ColoredPoint]] = [[], []]  # per colour
        self._where: Dict[object, int] = {}  # label -> index in its colour list
        self._best: Optional[BestPair] = None
        for p in points:
            self._add(p)
        self._best = self._enumerate()

    def __len__(self):
        return len(self.points)

    def __contains__(self, label):
        return label in self.points

    def _add(self, p: ColoredPoint):
        if p.color not in (RED, BLUE):
            raise GeomError("colour must be RED or BLUE")
        if p.label in self.points:
            raise GeomError("label %r already present" % (p.label,))
        self.points[p.label] = (p, None, None)
        lst = self._pts[p.color]
        self._where[p.label] = len(lst)
        lst.append(p)

    def _enumerate(self) -> Optional[BestPair]:
        reds, blues = self._pts
        if not reds or not blues:
            return None
        if len(reds) * len(blues) <= _VECTOR_MIN:
            best = None
            for p in reds:
                for q in blues:
                    best = _better(best, BestPair(p.label, q.label, min(p.x, q.x) + min(p.y, q.y)))
            return best
        r = np.array([(p.x, p.y) for p in reds], dtype=np.int64)
        b = np.array([(q.x, q.y) for q in blues], dtype=np.int64)
        val = np.minimum(r[:, None, 0], b[None, :, 0]) + np.minimum(r[:, None, 1], b[None, :, 1])
        i, j = divmod(int(val.argmax()), len(blues))
        return BestPair(reds[i].label, blues[j].label, int(val[i, j]))

    def insert(self, p: ColoredPoint):
        self._add(p)
        other = self._pts[1 - p.color]
        if not other:
            return
        if len(other) <= _VECTOR_MIN:
            best = self._best
            for q in other:
                best = _better(best, _pair(p, q, min(p.x, q.x) + min(p.y, q.y)))
            self._best = best
            return
        xy = np.array([(q.x, q.y) for q in other], dtype=np.int64)
        val = np.minimum(xy[:, 0], p.x) + np.minimum(xy[:, 1], p.y)
        j = int(val.argmax())
        self._best = _better(self._best, _pair(p, other[j], int(val[j])))

    def delete(self, label):
        entry = self.points.pop(label, None)
        if entry is None:
            raise GeomError("unknown label %r" % (label,))
        lst = self._pts[entry[0].color]
        i = self._where.pop(label)
        last = lst.pop()
        if last.label != label:
            lst[i] = last
            self._where[last.label] = i
        b = self._best
        if b is not None and label in (b.red, b.blue):
            self._best = self._enumerate()

    def best_pair(self) -> Optional[BestPair]:
        return self._best

    def audit(self):
        pass


SMALL_SET = 1024
_VECTOR_MIN = 64  # below this many comparisons plain loops are faster


def point_set(points):
    """A point set for ``points``: the small variant below SMALL_SET points."""
    points = list(points)
    if len(points) <= SMALL_SET:
        return SmallPointSet(points)
    return BichromaticSet.from_points(points)
