"""A persistent collection of strings represented by recompression grammars.

Every string is parsed by alternating two rounds until one symbol is left:

* even level h: each maximal run ``B^r`` (r >= 2) becomes the power symbol
  ``B^r`` at level h + 1;
* odd level h: with the alphabet split into a left half and a right half (a
  seeded hash of the symbol's fingerprint and the level), every adjacent pair
  ``BC`` with B on the left and C on the right becomes a concatenation symbol.

Symbols are hash-consed, so the parse of a string is a function of its
content and the seed only: equal strings get equal root ids no matter how
they were produced.  That is what makes ``lcp`` a synchronized descent over
symbol ids and what lets the edit operations work on *layers*.

A layer is a left-to-right list of ``(symbol, exponent, level)`` items whose
parse above each item does not depend on what lies outside it.  Splitting,
concatenating, substituting and extracting all decompose the relevant
fragments into such layers and recompress them upward, touching O(log n)
symbols per level instead of reparsing.

Parse-tree nodes are addressed as ``(symbol, level, start)``; a symbol whose
own level is below ``level`` is a chain of single-child nodes.
"""

from __future__ import annotations

import random
from typing import Iterable, List, NamedTuple, Optional, Sequence, Tuple

LETTER, CONCAT, POWER = 0, 1, 2
_MOD = (1 << 61) - 1
_MASK = (1 << 64) - 1

Item = Tuple[int, int, int]  # (symbol, exponent, level)


class GrammarError(ValueError):
    pass


class Handle(NamedTuple):
    root: int
    length: int


class Grammar:
    """Symbol table plus the string operations; handles stay valid forever."""

    def __init__(self, seed: int = 0):
        self.seed = seed & _MASK
        rng = random.Random(seed)
        self.base = rng.randrange(1 << 20, _MOD - 1)
        self.salt = rng.getrandbits(64)
        self.kind: List[int] = []
        self.a: List[int] = []
        self.b: List[int] = []
        self.lev: List[int] = []
        self.length: List[int] = []
        self.fp: List[int] = []
        self.letter_value: List = []
        self._intern = {}
        self.ops = 0  # collection updates since creation

    # ------------------------------------------------------------ symbols
    def __len__(self):
        return len(self.kind)

    def _new(self, key, kind, a, b, lev, length, fp, letter=None) -> int:
        sid = len(self.kind)
        self.kind.append(kind)
        self.a.append(a)
        self.b.append(b)
        self.lev.append(lev)
        self.length.append(length)
        self.fp.append(fp)
        self.letter_value.append(letter)
        self._intern[key] = sid
        return sid

    def letter(self, c) -> int:
        key = ("L", c)
        sid = self._intern.get(key)
        if sid is None:
            code = ord(c) if isinstance(c, str) else int(c)
            sid = self._new(key, LETTER, -1, -1, 0, 1, (code * 2654435761 + 12345) % _MOD, c)
        return sid

    def concat_symbol(self, x: int, y: int, level: int) -> int:
        key = (CONCAT, x, y, level)
        sid = self._intern.get(key)
        if sid is None:
            ly = self.length[y]
            fp = (self.fp[x] * pow(self.base, ly, _MOD) + self.fp[y]) % _MOD
            sid = self._new(key, CONCAT, x, y, level, self.length[x] + ly, fp)
        return sid

    def power_symbol(self, x: int, r: int, level: int) -> int:
        key = (POWER, x, r, level)
        sid = self._intern.get(key)
        if sid is None:
            q = pow(self.base, self.length[x], _MOD)
            if q == 1:
                geo = r % _MOD
            else:
                geo = (pow(q, r, _MOD) - 1) * pow(q - 1, _MOD - 2, _MOD) % _MOD
            sid = self._new(key, POWER, x, r, level, self.length[x] * r, self.fp[x] * geo % _MOD)
        return sid

    def is_left(self, sym: int, level: int) -> bool:
        """Membership of ``sym`` in the left half of the partition at ``level``."""
        z = (self.fp[sym] ^ self.salt ^ (level * 0x9E3779B97F4A7C15)) & _MASK
        z = ((z ^ (z >> 31)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return bool((z >> 33) & 1)

    def degree(self, sym: int) -> int:
        k = self.kind[sym]
        return 0 if k == LETTER else (2 if k == CONCAT else self.b[sym])

    # ------------------------------------------------------- compression
    def _even(self, run, h):
        out = []
        for sym, cnt in run:
            if out and out[-1][0] == sym:
                out[-1][1] += cnt
            else:
                out.append([sym, cnt])
        res = []
        for sym, cnt in out:
            if cnt >= 2:
                res.append([self.power_symbol(sym, cnt, h + 1), 1])
            else:
                res.append([sym, 1])
        return res

    def _odd(self, run, h):
        out = []
        carry = None
        is_left = self.is_left
        for sym, cnt in run:
            if carry is not None:
                if is_left(carry, h) and not is_left(sym, h):
                    out.append([self.concat_symbol(carry, sym, h + 1), 1])
                    cnt -= 1
                else:
                    out.append([carry, 1])
                carry = None
                if cnt == 0:
                    continue
            if cnt > 1:
                # equal neighbours never pair; all but the last copy are final
                out.append([sym, cnt - 1])
            carry = sym
        if carry is not None:
            out.append([carry, 1])
        return out

    def recompress(self, items: Sequence[Item]) -> Handle:
        """Root of the canonical parse of the string spelled by a layer."""
        seq = [[s, e, l] for s, e, l in items if e > 0]
        if not seq:
            raise GrammarError("empty string")
        length = sum(self.length[s] * e for s, e, _ in seq)
        h = 0
        while True:
            if len(seq) == 1 and seq[0][1] == 1 and seq[0][2] <= h:
                return Handle(seq[0][0], length)
            nxt = []
            run = []
            for ent in seq:
                if ent[2] <= h:
                    run.append((ent[0], ent[1]))
                else:
                    if run:
                        self._flush(run, h, nxt)
                        run = []
                    nxt.append(ent)
            if run:
                self._flush(run, h, nxt)
            seq = nxt
            h += 1

    def _flush(self, run, h, out):
        comp = self._even(run, h) if h % 2 == 0 else self._odd(run, h)
        for s, c in comp:
            out.append([s, c, h + 1])

    # ------------------------------------------------------- collection API
    def makestring(self, W: Sequence) -> Handle:
        if len(W) == 0:
            raise GrammarError("makestring needs a non-empty string")
        self.ops += 1
        return self.recompress([(self.letter(c), 1, 0) for c in W])

    def height(self, h: Handle) -> int:
        return self.lev[h.root]

    def _check_pos(self, h: Handle, i: int):
        if not 1 <= i <= h.length:
            raise GrammarError("position %r outside [1, %d]" % (i, h.length))

    def prefix_layer(self, h: Handle, e: int) -> List[Item]:
        """Layer spelling h[1..e] that stays valid whatever follows it."""
        if e <= 0:
            return []
        w = Walker(self, h)
        lev, length, kind = self.lev, self.length, self.kind
        out = []
        hi = e
        lvl = 0
        while hi >= 1:
            sym, start = w.node_at(lvl, hi)
            if lvl % 2 == 0:
                par = w.parent(lvl)
                rs = start
                if par is not None and kind[par[0]] == POWER and lev[par[0]] == lvl + 1:
                    rs = max(par[2], 1)
                out.append((sym, (hi - rs + 1) // length[sym], lvl))
                hi = rs - 1
            elif self.is_left(sym, lvl):
                out.append((sym, 1, lvl))
                hi = start - 1
            lvl += 1
        out.reverse()
        return out

    def suffix_layer(self, h: Handle, s: int) -> List[Item]:
        """Layer spelling h[s..] that stays valid whatever precedes it."""
        n = h.length
        if s > n:
            return []
        w = Walker(self, h)
        lev, length, kind = self.lev, self.length, self.kind
        out = []
        lo = s
        lvl = 0
        while lo <= n:
            sym, start = w.node_at(lvl, lo)
            if lvl % 2 == 0:
                par = w.parent(lvl)
                re = start + length[sym] - 1
                if par is not None and kind[par[0]] == POWER and lev[par[0]] == lvl + 1:
                    re = par[2] + length[par[0]] - 1
                out.append((sym, (re - lo + 1) // length[sym], lvl))
                lo = re + 1
            elif not self.is_left(sym, lvl):
                out.append((sym, 1, lvl))
                lo = start + length[sym]
            lvl += 1
        return out

    def decompose(self, h: Handle, a: int, b: int):
        """Context-insensitive decomposition of h[a..b] as (d_up, d_down).

        Both are lists of (symbol, exponent, level) in left-to-right order;
        levels increase along d_up and decrease along d_down.
        """
        if not 1 <= a <= b <= h.length:
            raise GrammarError("invalid range [%r, %r]" % (a, b))
        w = Walker(self, h)
        lev, length, kind = self.lev, self.length, self.kind
        up, down = [], []
        lo, hi = a, b
        lvl = 0
        while lo <= hi:
            if lvl % 2 == 0:
                sym, start = w.node_at(lvl, lo)
                par = w.parent(lvl)
                re = start + length[sym] - 1
                if par is not None and kind[par[0]] == POWER and lev[par[0]] == lvl + 1:
                    re = par[2] + length[par[0]] - 1
                re = min(re, hi)
                up.append((sym, (re - lo + 1) // length[sym], lvl))
                lo = re + 1
                if lo > hi:
                    break
                sym, start = w.node_at(lvl, hi)
                par = w.parent(lvl)
                rs = start
                if par is not None and kind[par[0]] == POWER and lev[par[0]] == lvl + 1:
                    rs = par[2]
                rs = max(rs, lo)
                down.append((sym, (hi - rs + 1) // length[sym], lvl))
                hi = rs - 1
            else:
                sym, start = w.node_at(lvl, lo)
                if not self.is_left(sym, lvl):
                    up.append((sym, 1, lvl))
                    lo = start + length[sym]
                    if lo > hi:
                        break
                sym, start = w.node_at(lvl, hi)
                if self.is_left(sym, lvl):
                    down.append((sym, 1, lvl))
                    hi = start - 1
            lvl += 1
        down.reverse()
        return up, down

    def split(self, h: Handle, i: int) -> Tuple[Handle, Handle]:
        """(h[1..i], h[i+1..]) for 1 <= i < |h|."""
        if not 1 <= i < h.length:
            raise GrammarError("split position %r outside [1, %d)" % (i, h.length))
        self.ops += 1
        return self.recompress(self.prefix_layer(h, i)), self.recompress(self.suffix_layer(h, i + 1))

    def concat(self, h1: Handle, h2: Handle) -> Handle:
        self.ops += 1
        return self.recompress(self.prefix_layer(h1, h1.length) + self.suffix_layer(h2, 1))

    def substitute(self, h: Handle, i: int, c) -> Handle:
        return self.substitute_layer(h, i, c)[0]

    def substitute_layer(self, h: Handle, i: int, c):
        """Substitute and also return the spliced layer and the letter's index in it."""
        self._check_pos(h, i)
        self.ops += 1
        left = self.prefix_layer(h, i - 1)
        layer = left + [(self.letter(c), 1, 0)] + self.suffix_layer(h, i + 1)
        return self.recompress(layer), layer, len(left)

    def extract(self, h: Handle, a: int, b: int) -> Handle:
        """Handle of the fragment h[a..b]."""
        if a == 1 and b == h.length:
            return h
        up, down = self.decompose(h, a, b)
        return self.recompress(up + down)

    def reparse(self, h: Handle) -> Handle:
        """From-scratch parse of the same content (reference mode)."""
        return self.makestring(self.expand(h))

    # ------------------------------------------------------------ queries
    def expand(self, h) -> list:
        root = h.root if isinstance(h, Handle) else h
        out = []
        stack = [root]
        kind, a, b, lv = self.kind, self.a, self.b, self.letter_value
        while stack:
            s = stack.pop()
            k = kind[s]
            if k == LETTER:
                out.append(lv[s])
            elif k == CONCAT:
                stack.append(b[s])
                stack.append(a[s])
            else:
                stack.extend([a[s]] * b[s])
        return out

    def char_at(self, h: Handle, i: int):
        self._check_pos(h, i)
        s = h.root
        p = i - 1
        kind, a, b, length = self.kind, self.a, self.b, self.length
        while kind[s] != LETTER:
            if kind[s] == CONCAT:
                la = length[a[s]]
                if p < la:
                    s = a[s]
                else:
                    p -= la
                    s = b[s]
            else:
                p %= length[a[s]]
                s = a[s]
        return self.letter_value[s]

    def lcp(self, h1: Handle, h2: Handle) -> int:
        if h1.root == h2.root:
            return h1.length
        kind, a, b, length, lev = self.kind, self.a, self.b, self.length, self.lev
        s1 = [(h1.root, 1)]
        s2 = [(h2.root, 1)]
        done = 0

        def expand(st):
            sym, cnt = st.pop()
            if cnt > 1:
                st.append((sym, cnt - 1))
            if kind[sym] == CONCAT:
                st.append((b[sym], 1))
                st.append((a[sym], 1))
            else:
                st.append((a[sym], b[sym]))

        while s1 and s2:
            x, cx = s1[-1]
            y, cy = s2[-1]
            if x == y:
                m = min(cx, cy)
                done += m * length[x]
                s1.pop()
                s2.pop()
                if cx > m:
                    s1.append((x, cx - m))
                if cy > m:
                    s2.append((y, cy - m))
                continue
            kx, ky = kind[x], kind[y]
            if kx == LETTER and ky == LETTER:
                break
            lx, ly = length[x], length[y]
            if ky == LETTER or (kx != LETTER and (lx > ly or (lx == ly and lev[x] >= lev[y]))):
                expand(s1)
            else:
                expand(s2)
        return done

    def compare(self, h1: Handle, h2: Handle) -> int:
        """Lexicographic comparison (-1, 0, 1); a proper prefix sorts first."""
        l = self.lcp(h1, h2)
        if l == h1.length:
            return 0 if l == h2.length else -1
        if l == h2.length:
            return 1
        c1, c2 = self.char_at(h1, l + 1), self.char_at(h2, l + 1)
        return -1 if c1 < c2 else 1

    # --------------------------------------------------------- navigation
    def level_nodes(self, h: Handle, lvl: int, p_lo: int, p_hi: int) -> list:
        """Consecutive level-``lvl`` nodes from the one holding p_lo to the one holding p_hi.

        Each entry is ``(sym, start, parent_kind, parent_degree, child_index,
        parent_start)``; parent_kind is -1 for the root, LETTER for a chain
        parent (single child), else CONCAT or POWER.
        """
        w = Walker(self, h)
        out = []
        p = p_lo
        length = self.length
        while p <= p_hi:
            sym, start = w.node_at(lvl, p)
            out.append((sym, start) + w.parent_info(lvl))
            p = start + length[sym]
        return out

    def root_ref(self, h: Handle) -> "NodeRef":
        return NodeRef(self, h, self.lev[h.root], 1)


class Walker:
    """Root-to-node path cache for repeated node lookups in one parse tree.

    Frames are ``(sym, top, start)``: the chain of ``sym`` nodes at levels
    lev(sym)..top starting at ``start``.
    """

    __slots__ = ("g", "stack")

    def __init__(self, g: Grammar, h: Handle):
        self.g = g
        self.stack = [(h.root, g.lev[h.root], 1)]

    def node_at(self, h: int, p: int):
        g = self.g
        st = self.stack
        length, lev, kind, A, B = g.length, g.lev, g.kind, g.a, g.b
        while True:
            sym, top, start = st[-1]
            if top >= h and start <= p < start + length[sym]:
                break
            if len(st) == 1:
                raise GrammarError("no level-%d node at position %d" % (h, p))
            st.pop()
        while lev[sym] > h:
            top = lev[sym] - 1
            if kind[sym] == CONCAT:
                x = A[sym]
                if p < start + length[x]:
                    sym = x
                else:
                    start += length[x]
                    sym = B[sym]
            else:
                x = A[sym]
                L = length[x]
                start += (p - start) // L * L
                sym = x
            st.append((sym, top, start))
        return sym, start

    def parent(self, h: int):
        """Parent frame of the node returned by the last ``node_at(h, .)``."""
        sym, top, start = self.stack[-1]
        if top > h:
            return (sym, top, start)
        if len(self.stack) == 1:
            return None
        return self.stack[-2]

    def parent_info(self, h: int):
        sym, top, start = self.stack[-1]
        if top > h:
            return (LETTER, 1, 0, start)
        if len(self.stack) == 1:
            return (-1, 0, 0, 0)
        ps, _, pstart = self.stack[-2]
        k = self.g.kind[ps]
        if k == CONCAT:
            return (CONCAT, 2, 0 if start == pstart else 1, pstart)
        return (POWER, self.g.b[ps], (start - pstart) // self.g.length[sym], pstart)


class NodeRef:
    """A node of a handle's parse tree, addressed by (level, start)."""

    __slots__ = ("g", "handle", "level", "start", "label")

    def __init__(self, g: Grammar, handle: Handle, level: int, start: int, label: Optional[int] = None):
        self.g, self.handle, self.level, self.start = g, handle, level, start
        if label is None:
            label, s = Walker(g, handle).node_at(level, start)
            if s != start:
                raise GrammarError("no node starts at %d on level %d" % (start, level))
        self.label = label

    def __eq__(self, other):
        return (isinstance(other, NodeRef) and self.handle == other.handle
                and self.level == other.level and self.start == other.start)

    def __hash__(self):
        return hash((self.handle, self.level, self.start))

    def __repr__(self):
        return "NodeRef(level=%d, span=%r, label=%d)" % (self.level, self.span, self.label)

    @property
    def span(self) -> Tuple[int, int]:
        return (self.start, self.start + self.g.length[self.label] - 1)

    def degree(self) -> int:
        if self.level > self.g.lev[self.label]:
            return 1
        return self.g.degree(self.label)

    def child(self, k: int) -> Optional["NodeRef"]:
        """k-th child, 1-based."""
        g = self.g
        d = self.degree()
        if not 1 <= k <= d:
            return None
        if self.level > g.lev[self.label]:
            return NodeRef(g, self.handle, self.level - 1, self.start, self.label)
        if g.kind[self.label] == CONCAT:
            c = g.a[self.label] if k == 1 else g.b[self.label]
            off = 0 if k == 1 else g.length[g.a[self.label]]
            return NodeRef(g, self.handle, self.level - 1, self.start + off, c)
        base = g.a[self.label]
        return NodeRef(g, self.handle, self.level - 1, self.start + (k - 1) * g.length[base], base)

    def parent(self) -> Optional["NodeRef"]:
        if self.level >= self.g.lev[self.handle.root]:
            return None
        w = Walker(self.g, self.handle)
        sym, start = w.node_at(self.level + 1, self.start)
        return NodeRef(self.g, self.handle, self.level + 1, start, sym)

    def _sibling_at(self, p: int) -> Optional["NodeRef"]:
        if not 1 <= p <= self.handle.length:
            return None
        sym, start = Walker(self.g, self.handle).node_at(self.level, p)
        return NodeRef(self.g, self.handle, self.level, start, sym)

    def left(self) -> Optional["NodeRef"]:
        return self._sibling_at(self.start - 1)

    def right(self) -> Optional["NodeRef"]:
        return self._sibling_at(self.start + self.g.length[self.label])


class DynString:
    """A string kept in the collection together with its reverse."""

    def __init__(self, g: Grammar, W: Sequence):
        self.g = g
        self.fwd = g.makestring(W)
        self.rev = g.makestring(list(W)[::-1])

    def __len__(self):
        return self.fwd.length

    def substitute(self, i: int, c):
        n = self.fwd.length
        self.fwd = self.g.substitute(self.fwd, i, c)
        self.rev = self.g.substitute(self.rev, n - i + 1, c)

    def fragment(self, a: int, b: int) -> Handle:
        return self.g.extract(self.fwd, a, b)

    def reversed_fragment(self, a: int, b: int) -> Handle:
        """Handle of (S[a..b])^R."""
        n = self.fwd.length
        return self.g.extract(self.rev, n - b + 1, n - a + 1)

    def text(self) -> list:
        return self.g.expand(self.fwd)


# module-level wrappers mirroring the operation names
def makestring(g: Grammar, W: Sequence) -> Handle:
    return g.makestring(W)


def concat(g: Grammar, h1: Handle, h2: Handle) -> Handle:
    return g.concat(h1, h2)


def split(g: Grammar, h: Handle, i: int):
    return g.split(h, i)


def lcp(g: Grammar, h1: Handle, h2: Handle) -> int:
    return g.lcp(h1, h2)


def substitute(g: Grammar, h: Handle, i: int, c) -> Handle:
    return g.substitute(h, i, c)


def decompose(g: Grammar, h: Handle, a: int, b: int):
    return g.decompose(h, a, b)
