"""Brute-force reference computations.

Nothing in here imports from the rest of the package: every function works on
plain Python data (strings, lists of parents and weights, point tuples) so it
can serve as an independent check of the real structures.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Any, Iterable, Optional, Sequence

import numpy as np

try:
    from numba import njit
except ImportError:  # pragma: no cover - numba is optional
    njit = None

LCS_DP_CAP = 2048
TREE_CAP = 500
ELEMENT_CAP = 1000


class OracleLimitError(ValueError):
    """Raised when an instance exceeds the size an oracle is meant for."""


@dataclass
class OracleReport:
    value: Any
    elapsed: float
    instance: str = ""
    extra: dict = field(default_factory=dict)


def _lcs_table_py(s, t):
    n, m = len(s), len(t)
    prev = [0] * (m + 1)
    best, bi, bj = 0, -1, -1
    for i in range(1, n + 1):
        cur = [0] * (m + 1)
        si = s[i - 1]
        for j in range(1, m + 1):
            if si == t[j - 1]:
                v = prev[j - 1] + 1
                cur[j] = v
                if v > best:
                    best, bi, bj = v, i, j
        prev = cur
    return best, bi, bj


if njit is not None:
    _lcs_table = njit(cache=True)(_lcs_table_py)
else:  # pragma: no cover
    _lcs_table = _lcs_table_py


def _as_codes(s, t):
    """Map the letters of both sequences to shared integer codes."""
    code = {}
    a = np.array([code.setdefault(c, len(code)) for c in s], dtype=np.int64)
    b = np.array([code.setdefault(c, len(code)) for c in t], dtype=np.int64)
    return a, b


def lcs_dp(s, t):
    """Longest common substring by the classical suffix-match table.

    Returns ``(length, s_pos, t_pos)`` with 1-based starting positions of one
    longest common substring, or ``(0, None, None)`` if the strings share no
    letter.
    """
    if len(s) > LCS_DP_CAP or len(t) > LCS_DP_CAP:
        raise OracleLimitError("lcs_dp is capped at %d letters" % LCS_DP_CAP)
    if len(s) == 0 or len(t) == 0:
        return 0, None, None
    best, bi, bj = _lcs_table(*_as_codes(s, t))
    if best == 0:
        return 0, None, None
    return int(best), int(bi - best + 1), int(bj - best + 1)


def lcs_dp_report(s, t) -> OracleReport:
    t0 = time.perf_counter()
    value = lcs_dp(s, t)
    return OracleReport(value, time.perf_counter() - t0, "lcs |S|=%d |T|=%d" % (len(s), len(t)))


def is_common_substring(s, t, length, s_pos, t_pos) -> bool:
    """True when S[s_pos..] and T[t_pos..] agree on ``length`` letters (1-based)."""
    if length == 0:
        return s_pos is None and t_pos is None
    if s_pos is None or t_pos is None:
        return False
    if s_pos < 1 or t_pos < 1 or s_pos + length - 1 > len(s) or t_pos + length - 1 > len(t):
        return False
    return list(s[s_pos - 1:s_pos - 1 + length]) == list(t[t_pos - 1:t_pos - 1 + length])


def _leaf_label_sets(parents: Sequence[int], labels: dict) -> list:
    n = len(parents)
    sets = [set() for _ in range(n)]
    for leaf, lab in labels.items():
        x = leaf
        while x != -1:
            sets[x].add(lab)
            x = parents[x]
    return sets


def _ancestors(parents, u):
    out = []
    while u != -1:
        out.append(u)
        u = parents[u]
    return out


def hia_brute(parents1, weights1, labels1, parents2, weights2, labels2, u, cap_u, v, cap_v):
    """Heaviest induced ancestors by enumerating every ancestor pair.

    Trees are given as parent arrays (root has parent -1), weight arrays and a
    ``{leaf: label}`` dict.  Returns the best capped total or None.
    """
    if len(parents1) + len(parents2) > 2 * TREE_CAP:
        raise OracleLimitError("hia_brute is capped at %d nodes per tree" % TREE_CAP)
    sets1 = _leaf_label_sets(parents1, labels1)
    sets2 = _leaf_label_sets(parents2, labels2)
    best = None
    for a in _ancestors(parents1, u):
        wa = min(weights1[a], cap_u)
        for b in _ancestors(parents2, v):
            if sets1[a] & sets2[b]:
                total = wa + min(weights2[b], cap_v)
                if best is None or total > best:
                    best = total
    return best


def bichromatic_brute(points: Iterable) -> Optional[int]:
    """Best min(x,x')+min(y,y') over red/blue pairs; points are (x, y, color, ...)."""
    pts = list(points)
    if len(pts) > ELEMENT_CAP * 10:
        raise OracleLimitError("too many points")
    reds = np.array([(p[0], p[1]) for p in pts if p[2] == 0], dtype=np.int64).reshape(-1, 2)
    blues = np.array([(p[0], p[1]) for p in pts if p[2] == 1], dtype=np.int64).reshape(-1, 2)
    if not len(reds) or not len(blues):
        return None
    # every red/blue combination at once
    val = np.minimum(reds[:, None, 0], blues[None, :, 0]) + np.minimum(reds[:, None, 1], blues[None, :, 1])
    return int(val.max())


def _lcp(a, b) -> int:
    k = 0
    for x, y in zip(a, b):
        if x != y:
            break
        k += 1
    return k


def family_brute(red: Sequence, blue: Sequence) -> Optional[int]:
    """max lcp(P,P') + lcp(Q,Q') over (P,Q) in red and (P',Q') in blue."""
    if len(red) > ELEMENT_CAP or len(blue) > ELEMENT_CAP:
        raise OracleLimitError("family_brute is capped at %d pairs" % ELEMENT_CAP)
    best = None
    for p, q in red:
        for p2, q2 in blue:
            val = _lcp(p, p2) + _lcp(q, q2)
            if best is None or val > best:
                best = val
    return best


def trie_brute(strings: Iterable) -> list:
    """Shape of the compacted trie of ``strings`` (each implicitly terminated).

    Builds an uncompacted character trie node by node and returns the sorted
    path-labels (as tuples) of the nodes that survive compaction: the root,
    every branching node, and one entry per terminated string.
    """
    root: dict = {}
    ends = []
    for i, s in enumerate(strings):
        node = root
        for ch in s:
            node = node.setdefault(ch, {})
        node.setdefault(("$end", i), {})
        ends.append(tuple(s))
    out = []

    def walk(node, path):
        if len(node) != 1 or not path:
            out.append(tuple(path))
        for ch, child in node.items():
            if isinstance(ch, tuple) and len(ch) == 2 and ch[0] == "$end":
                continue
            walk(child, path + [ch])

    walk(root, [])
    out.extend(("leaf",) + e for e in ends)
    return sorted(out, key=repr)


def bicolored_brute(parents1, weights1, leaf1, parents2, weights2, leaf2, colors) -> Optional[int]:
    """Dynamic bicolored trees answer by testing every node pair.

    ``leaf1``/``leaf2`` map label -> leaf node, ``colors`` maps label -> 0/1.
    A pair (u, v) qualifies if some red label and some blue label each have
    their leaves below u and v respectively.  Label sets are bitmasks.
    """
    bit = {lab: 1 << i for i, lab in enumerate(sorted(set(leaf1) & set(leaf2), key=repr))}
    red = sum(b for lab, b in bit.items() if colors[lab] == 0)
    blue = sum(b for lab, b in bit.items() if colors[lab] == 1)

    def masks(parents, leaf):
        m = [0] * len(parents)
        for lab, b in bit.items():
            x = leaf[lab]
            while x != -1:
                m[x] |= b
                x = parents[x]
        return m

    m1 = masks(parents1, leaf1)
    m2 = masks(parents2, leaf2)
    best = None
    for a in range(len(parents1)):
        ra, ba = m1[a] & red, m1[a] & blue
        if not ra or not ba:
            continue
        for b in range(len(parents2)):
            if ra & m2[b] and ba & m2[b]:
                val = weights1[a] + weights2[b]
                if best is None or val > best:
                    best = val
    return best


def all_common_substrings(s, t) -> set:
    """Every distinct non-empty common substring of s and t, as tuples."""
    subs_t = set()
    t = tuple(t)
    for i in range(len(t)):
        for j in range(i + 1, len(t) + 1):
            subs_t.add(t[i:j])
    s = tuple(s)
    out = set()
    for i in range(len(s)):
        for j in range(i + 1, len(s) + 1):
            if s[i:j] in subs_t:
                out.add(s[i:j])
            else:
                break
    return out
