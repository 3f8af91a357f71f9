"""Dynamic bicoloured trees.

Two rooted trees with string-depth weights share a set of labels; each label
has a colour and (eventually) one leaf in each tree.  ``global_best`` returns
nodes u (first tree) and v (second tree) maximising w(u) + w(v) such that
some red label and some blue label have leaves below both u and v.

Both trees keep a heavy-path decomposition maintained by partial rebuilding:
L(u) is the leaf count of u's subtree at its last rebuild and every heavy-path
root counts the insertions I(u) below it since then; once 6·I(u) >= L(u) the
subtree is recounted and re-decomposed.  A child is made heavy when its count
is at least 5/6 of the count at the root of the path being grown, which keeps
the current leaf count of a path's end above 2/3 of its root's.

For every pair (p, q) of heavy paths and every label with leaves below r(p)
and r(q), a point (x, y) is stored in the structure of (p, q), where x and y
are the weights of the deepest nodes of p and q above the label's leaves.  The
best red/blue pair of that structure then gives the deepest pair of nodes of p
and q that both colours reach.  Structures with fewer than ``SMALL_SET``
points enumerate their red/blue pairs (vectorised); larger ones switch to the
range tree of ``geom``.  A sorted list over the structures' answers yields
the global best.
"""

from __future__ import annotations

from bisect import bisect_left
from typing import Dict, List, NamedTuple, Optional

from sortedcontainers import SortedList

from .geom import BLUE, RED, SMALL_SET, BichromaticSet, ColoredPoint, SmallPointSet, point_set

HEAVY_FRACTION = 5 / 6
REBUILD_FRACTION = 1 / 6


class BicoloredError(ValueError):
    pass


class Best(NamedTuple):
    u: int
    v: int
    total: int
    red: object
    blue: object


class HldTree:
    """A growable rooted tree with a maintained heavy-path decomposition."""

    def __init__(self, root_weight: int = 0):
        self.parent: List[int] = [-1]
        self.children: List[List[int]] = [[]]
        self.weight: List[int] = [root_weight]
        self.label: List[object] = [None]
        self.L: List[int] = [1]
        self.I: List[int] = [0]
        self.path_of: List[int] = [0]
        self.paths: Dict[int, List[int]] = {0: [0]}
        self._pid = 1
        self.leaf_of: Dict[object, int] = {}

    @property
    def size(self) -> int:
        return len(self.parent)

    def is_leaf(self, v: int) -> bool:
        return not self.children[v]

    def root_of(self, v: int) -> int:
        return self.paths[self.path_of[v]][0]

    def _new_path(self, nodes: List[int]) -> int:
        pid = self._pid
        self._pid += 1
        self.paths[pid] = nodes
        for x in nodes:
            self.path_of[x] = pid
        return pid

    def _add_node(self, parent: int, weight: int, label=None) -> int:
        v = len(self.parent)
        self.parent.append(parent)
        self.children.append([])
        self.weight.append(weight)
        self.label.append(label)
        self.L.append(1)
        self.I.append(0)
        self.path_of.append(-1)
        return v

    def above(self, v: int):
        """(path id, weight of the deepest path node above v) for every path met."""
        out = []
        while v >= 0:
            pid = self.path_of[v]
            out.append((pid, self.weight[v]))
            v = self.parent[self.paths[pid][0]]
        return out

    def node_on_path(self, pid: int, weight: int) -> int:
        nodes = self.paths[pid]
        ws = [self.weight[x] for x in nodes]
        return nodes[bisect_left(ws, weight)]

    def leaf_count(self, v: int) -> int:
        stack, c = [v], 0
        while stack:
            x = stack.pop()
            if self.children[x]:
                stack.extend(self.children[x])
            else:
                c += 1
        return c

    def subtree(self, v: int) -> List[int]:
        out, stack = [], [v]
        while stack:
            x = stack.pop()
            out.append(x)
            stack.extend(self.children[x])
        return out

    def decompose(self, u: int):
        """Recount leaves below u and rebuild the decomposition of u's subtree.

        Paths whose node sequence comes out unchanged keep their ids.  Returns
        (ids of paths that disappeared, ids of paths that are new).
        """
        nodes = self.subtree(u)
        for x in reversed(nodes):
            ch = self.children[x]
            self.L[x] = sum(self.L[c] for c in ch) if ch else 1
            self.I[x] = 0
        old = {}
        for x in nodes:
            pid = self.path_of[x]
            if pid >= 0 and pid in self.paths and pid not in old:
                old[pid] = tuple(self.paths[pid])
        by_nodes = {v: k for k, v in old.items()}
        kept, added = set(), []
        stack = [u]
        while stack:
            r = stack.pop()
            path = [r]
            x = r
            while True:
                ch = self.children[x]
                if not ch:
                    break
                best = max(ch, key=self.L.__getitem__)
                for c in ch:
                    if c != best:
                        stack.append(c)
                if self.L[best] >= HEAVY_FRACTION * self.L[r]:
                    path.append(best)
                    x = best
                else:
                    stack.append(best)
                    break
            pid = by_nodes.get(tuple(path))
            if pid is not None:
                kept.add(pid)
            else:
                added.append(path)
        removed = [pid for pid in old if pid not in kept]
        for pid in removed:
            del self.paths[pid]
        new_ids = [self._new_path(path) for path in added]
        return removed, new_ids

    def heavy_paths_above(self, v: int) -> int:
        return len(self.above(v))

    def check(self):
        """Structural invariants (test helper)."""
        seen = set()
        for pid, nodes in self.paths.items():
            for a, b in zip(nodes, nodes[1:]):
                assert self.parent[b] == a
            for x in nodes:
                assert self.path_of[x] == pid and x not in seen
                seen.add(x)
            r, e = nodes[0], nodes[-1]
            assert self.leaf_count(e) * 3 >= 2 * self.leaf_count(r), "heavy path too light"
        assert len(seen) == self.size
        for v in range(1, self.size):
            assert self.weight[v] > self.weight[self.parent[v]]


class BicoloredTrees:
    def __init__(self):
        self.trees = (HldTree(), HldTree())
        self.color: Dict[object, int] = {}
        self.structs: Dict[tuple, BichromaticSet] = {}
        self.answers: Dict[tuple, tuple] = {}
        self.heap = SortedList()
        self.by_path = ({}, {})  # path id -> keys of structures using it
        self.bulk = False
        self.stats = {"rebuilds": 0, "points": 0, "point_ops": 0}

    # ------------------------------------------------------------ points
    def _groups(self, label):
        t1, t2 = self.trees
        a = t1.leaf_of.get(label)
        b = t2.leaf_of.get(label)
        if a is None or b is None:
            return []
        above2 = t2.above(b)
        return [((p, q), x, y) for p, x in t1.above(a) for q, y in above2]

    def _refresh(self, key):
        s = self.structs.get(key)
        old = self.answers.pop(key, None)
        if old is not None:
            self.heap.remove(old)
        if s is None:
            return
        if len(s) == 0:
            self._drop(key)
            return
        b = s.best_pair()
        if b is not None:
            entry = (b.value, key)
            self.answers[key] = entry
            self.heap.add(entry)

    def _create(self, key, ds: BichromaticSet):
        self.structs[key] = ds
        self.by_path[0].setdefault(key[0], set()).add(key)
        self.by_path[1].setdefault(key[1], set()).add(key)

    def _drop(self, key):
        old = self.answers.pop(key, None)
        if old is not None:
            self.heap.remove(old)
        del self.structs[key]
        for t in (0, 1):
            keys = self.by_path[t][key[t]]
            keys.discard(key)
            if not keys:
                del self.by_path[t][key[t]]

    def _add_points(self, label):
        c = self.color[label]
        for key, x, y in self._groups(label):
            s = self.structs.get(key)
            if s is None:
                s = SmallPointSet()
                self._create(key, s)
            if len(s) >= SMALL_SET and isinstance(s, SmallPointSet):
                s = BichromaticSet.from_points(p for p, _, _ in s.points.values())
                self.structs[key] = s
            s.insert(ColoredPoint(x, y, c, label))
            self.stats["points"] += 1
            self.stats["point_ops"] += 1
            self._refresh(key)

    def _remove_points(self, label):
        for key, x, y in self._groups(label):
            self.structs[key].delete(label)
            self.stats["points"] -= 1
            self.stats["point_ops"] += 1
            self._refresh(key)

    # ------------------------------------------------------------ updates
    def split_edge(self, tree: int, child: int, weight: int) -> int:
        """Insert a node of the given weight between ``child`` and its parent."""
        t = self.trees[tree]
        par = t.parent[child]
        if par < 0:
            raise BicoloredError("cannot split above the root")
        if not t.weight[par] < weight < t.weight[child]:
            raise BicoloredError("weight %r not strictly between its neighbours" % (weight,))
        v = t._add_node(par, weight)
        ch = t.children[par]
        ch[ch.index(child)] = v
        t.children[v].append(child)
        t.parent[child] = v
        t.L[v] = t.L[child]
        pid = t.path_of[child]
        nodes = t.paths[pid]
        i = nodes.index(child)
        nodes.insert(i, v)  # v joins child's path (as its new root if child was one)
        t.path_of[v] = pid
        if i == 0:
            t.I[v], t.I[child] = t.I[child], 0
        return v

    def attach_leaf(self, tree: int, parent: int, weight: int, label, color: int) -> int:
        t = self.trees[tree]
        if not 0 <= parent < t.size:
            raise BicoloredError("unknown parent node %r" % (parent,))
        if weight <= t.weight[parent]:
            raise BicoloredError("leaf weight must exceed its parent's")
        if color not in (RED, BLUE):
            raise BicoloredError("colour must be RED or BLUE")
        if label in t.leaf_of:
            raise BicoloredError("label %r already has a leaf in this tree" % (label,))
        if self.color.setdefault(label, color) != color:
            raise BicoloredError("label %r has a different colour in the other tree" % (label,))
        if t.is_leaf(parent) and parent != 0:
            raise BicoloredError("cannot attach below a leaf")
        v = t._add_node(parent, weight, label)
        t.children[parent].append(v)
        t._new_path([v])
        if self.bulk:
            t.leaf_of[label] = v
            return v
        # count the insertion at every path root above, rebuild the highest due one
        due = None
        x = parent
        while x >= 0:
            r = t.root_of(x)
            t.I[r] += 1
            if 6 * t.I[r] >= t.L[r]:
                due = r
            x = t.parent[r]
        if due is not None:
            self._rebuild(tree, due)  # the new label has no points yet
        t.leaf_of[label] = v
        self._add_points(label)
        return v

    def delete_leaf(self, tree: int, leaf: int):
        """Remove a leaf's label (the node itself stays, unlabelled)."""
        t = self.trees[tree]
        label = t.label[leaf] if 0 <= leaf < t.size else None
        if label is None:
            raise BicoloredError("node %r is not a labelled leaf" % (leaf,))
        self._remove_points(label)
        t.label[leaf] = None
        del t.leaf_of[label]
        other = self.trees[1 - tree]
        if label not in other.leaf_of:
            del self.color[label]

    def _rebuild(self, tree: int, u: int):
        """Re-decompose u's subtree and rebuild the structures of changed paths.

        The points of a structure are determined by its two paths, so only
        structures on paths that disappeared are dropped, and only structures
        on newly formed paths are built (in bulk).
        """
        t = self.trees[tree]
        self.stats["rebuilds"] += 1
        removed, added = t.decompose(u)
        for pid in removed:
            for key in list(self.by_path[tree].get(pid, ())):
                self.stats["points"] -= len(self.structs[key])
                self._drop(key)
        if added:
            labels = set()
            for pid in added:
                for x in t.subtree(t.paths[pid][0]):
                    if t.label[x] is not None:
                        labels.add(t.label[x])
            self._build_groups(tree, labels, set(added))

    def _build_groups(self, tree: int, labels, only=None):
        """Create the structures for ``labels`` on paths of ``tree`` (all, or those in ``only``)."""
        t = self.trees[tree]
        other = self.trees[1 - tree]
        buckets: Dict[tuple, list] = {}
        for lab in labels:
            if lab not in other.leaf_of or lab not in t.leaf_of:
                continue
            mine = t.above(t.leaf_of[lab])
            if only is not None:
                mine = [e for e in mine if e[0] in only]
            theirs = other.above(other.leaf_of[lab])
            c = self.color[lab]
            for p, a in mine:
                for q, b in theirs:
                    key, pt = ((p, q), ColoredPoint(a, b, c, lab)) if tree == 0 else \
                        ((q, p), ColoredPoint(b, a, c, lab))
                    buckets.setdefault(key, []).append(pt)
        for key, pts in buckets.items():
            self._create(key, point_set(pts))
            self.stats["points"] += len(pts)
            self.stats["point_ops"] += len(pts)
            self._refresh(key)

    def begin_bulk(self):
        """Defer decomposition and point structures while loading many leaves."""
        if self.structs or self.color:
            raise BicoloredError("bulk loading needs empty trees")
        self.bulk = True

    def end_bulk(self):
        self.bulk = False
        for t in self.trees:
            t.decompose(0)
        self._build_groups(0, list(self.trees[0].leaf_of))

    # ------------------------------------------------------------ queries
    def global_best(self) -> Optional[Best]:
        if not self.heap:
            return None
        value, key = self.heap[-1]
        b = self.structs[key].best_pair()
        t1, t2 = self.trees
        pr, xr, yr = self.structs[key].points[b.red]
        pb, xb, yb = self.structs[key].points[b.blue]
        u = t1.node_on_path(key[0], min(pr.x, pb.x))
        v = t2.node_on_path(key[1], min(pr.y, pb.y))
        return Best(u, v, value, b.red, b.blue)

    def point_count(self) -> int:
        return sum(len(s) for s in self.structs.values())

    def check(self):
        """Invariants and heap consistency (test helper)."""
        for t in self.trees:
            t.check()
        for t in (0, 1):
            idx = {k for keys in self.by_path[t].values() for k in keys}
            assert idx == set(self.structs)
        for key, s in self.structs.items():
            b = s.best_pair()
            assert len(s) > 0
            assert self.answers.get(key) == (None if b is None else (b.value, key))
        assert len(self.heap) == len(self.answers)
        # every point is where the current decomposition says it should be
        expect = {}
        for lab in self.color:
            for key, x, y in self._groups(lab):
                expect[(key, lab)] = (x, y)
        got = {(key, lab): (p.x, p.y) for key, s in self.structs.items() for lab, (p, _, _) in s.points.items()}
        assert got == expect

    def export(self, tree: int):
        """(parents, weights, {label: leaf}) of one tree, for the oracle."""
        t = self.trees[tree]
        return list(t.parent), list(t.weight), dict(t.leaf_of)
