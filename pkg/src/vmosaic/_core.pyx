# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled search kernels.

Mirrors ``_core_py`` exactly: same functions, same encodings, same output
order.  See that module for the encodings.
"""
from libc.stdlib cimport calloc, free

cdef int MASK[11]
cdef int TRANSIT[11][4]
cdef int DR[4]
cdef int DC[4]

_mask = (0, 0b1100, 0b0110, 0b0011, 0b1001, 0b1010, 0b0101, 0b1111, 0b1111, 0b1111, 0b1111)
_transit = (
    (-1, -1, -1, -1),
    (-1, -1, 3, 2),
    (-1, 2, 1, -1),
    (1, 0, -1, -1),
    (3, -1, -1, 0),
    (-1, 3, -1, 1),
    (2, -1, 0, -1),
    (1, 0, 3, 2),
    (3, 2, 1, 0),
    (2, 3, 0, 1),
    (2, 3, 0, 1),
)
for _t in range(11):
    MASK[_t] = _mask[_t]
    for _s in range(4):
        TRANSIT[_t][_s] = _transit[_t][_s]
DR[0], DR[1], DR[2], DR[3] = -1, 0, 1, 0
DC[0], DC[1], DC[2], DC[3] = 0, 1, 0, -1

BLANK_ADJACENT, BLANK_NONCROSSING, BLANK_ALL = 0, 1, 2


cdef inline void _loc(int m, int n, int e, int *r, int *c, int *s):
    if e < m:
        r[0], c[0], s[0] = e, 0, 3
        return
    e -= m
    if e < n:
        r[0], c[0], s[0] = m - 1, e, 2
        return
    e -= n
    if e < m:
        r[0], c[0], s[0] = m - 1 - e, n - 1, 1
        return
    e -= m
    r[0], c[0], s[0] = 0, n - 1 - e, 0


cdef inline int _index(int m, int n, int r, int c, int side):
    if side == 3:
        return r
    if side == 2:
        return m + c
    if side == 1:
        return m + n + (m - 1 - r)
    return 2 * m + n + (n - 1 - c)


def edge_location(int m, int n, int e):
    cdef int r, c, s
    _loc(m, n, e, &r, &c, &s)
    return r, c, s


def edge_index(int m, int n, int r, int c, int side):
    return _index(m, n, r, c, side)


cdef inline bint _fits(int t, int w, int nn):
    # w / nn: -1 boundary, else required connection flag
    if w >= 0 and ((MASK[t] >> 3) & 1) != w:
        return False
    if nn >= 0 and (MASK[t] & 1) != nn:
        return False
    return True


def iter_grids(int m, int n, int min_cross=0, int max_cross=-1, prefix=()):
    """Interior-consistent grids in lexicographic order of the row-major tuple."""
    cdef int cells = m * n
    cdef int k, k0, t, r, c, w, nn, cx
    if max_cross < 0:
        max_cross = cells
    grid = [0] * cells
    nxt = [0] * (cells + 1)
    crosses = [0] * (cells + 1)
    k0 = len(prefix)
    for k in range(k0):
        t = prefix[k]
        r, c = k // n, k % n
        w = (MASK[<int>grid[k - 1]] >> 1) & 1 if c else -1
        nn = (MASK[<int>grid[k - n]] >> 2) & 1 if r else -1
        if not _fits(t, w, nn):
            return
        grid[k] = t
        crosses[k + 1] = crosses[k] + (t >= 9)
    if crosses[k0] > max_cross or crosses[k0] + cells - k0 < min_cross:
        return
    if k0 == cells:
        yield tuple(grid)
        return
    k = k0
    nxt[k] = 0
    while k >= k0:
        if k == cells:
            yield tuple(grid)
            k -= 1
            continue
        r, c = k // n, k % n
        w = (MASK[<int>grid[k - 1]] >> 1) & 1 if c else -1
        nn = (MASK[<int>grid[k - n]] >> 2) & 1 if r else -1
        t = nxt[k]
        while t < 11:
            if _fits(t, w, nn):
                cx = crosses[k] + (t >= 9)
                if cx <= max_cross and cx + cells - k - 1 >= min_cross:
                    break
            t += 1
        if t == 11:
            k -= 1
            continue
        grid[k] = t
        nxt[k] = t + 1
        crosses[k + 1] = crosses[k] + (t >= 9)
        k += 1
        if k < cells:
            nxt[k] = 0


cdef class _Walker:
    cdef int m, n, size, cells, mode, require_knot
    cdef int n_arcs, n_blanks, used_count, nloops, seqlen, nids, nchords
    cdef int ntargets, tlen, depth
    cdef int *g
    cdef int *arc
    cdef int *end
    cdef int *vstart
    cdef int *vlen
    cdef int *vis
    cdef int *loopstart
    cdef int *looplen
    cdef int *partner
    cdef int *used
    cdef int *arcs
    cdef int *blanks
    cdef int *bused
    cdef int *chord_a
    cdef int *chord_b
    cdef int *seq
    cdef int *cell_id
    cdef int *cell_first
    cdef int *over_h
    cdef int *under_h
    cdef int *parent
    cdef int *scratch
    cdef int *targets
    cdef char *alive
    cdef list results

    def __cinit__(self, int m, int n, int ntargets, int tlen):
        self.m, self.n = m, n
        self.size = 2 * (m + n)
        self.cells = m * n
        cdef int size = self.size, cells = self.cells
        self.g = <int *>calloc(cells, sizeof(int))
        self.arc = <int *>calloc(size, sizeof(int))
        self.end = <int *>calloc(size, sizeof(int))
        self.vstart = <int *>calloc(size, sizeof(int))
        self.vlen = <int *>calloc(size, sizeof(int))
        self.vis = <int *>calloc(6 * cells + 8, sizeof(int))
        self.loopstart = <int *>calloc(cells * 2 + 1, sizeof(int))
        self.looplen = <int *>calloc(cells * 2 + 1, sizeof(int))
        self.partner = <int *>calloc(size, sizeof(int))
        self.used = <int *>calloc(size, sizeof(int))
        self.arcs = <int *>calloc(size, sizeof(int))
        self.blanks = <int *>calloc(size, sizeof(int))
        self.bused = <int *>calloc(size, sizeof(int))
        self.chord_a = <int *>calloc(size, sizeof(int))
        self.chord_b = <int *>calloc(size, sizeof(int))
        self.seq = <int *>calloc(2 * cells + 8, sizeof(int))
        self.cell_id = <int *>calloc(cells, sizeof(int))
        self.cell_first = <int *>calloc(cells, sizeof(int))
        self.over_h = <int *>calloc(cells, sizeof(int))
        self.under_h = <int *>calloc(cells, sizeof(int))
        self.parent = <int *>calloc(size, sizeof(int))
        self.scratch = <int *>calloc(cells, sizeof(int))
        self.ntargets, self.tlen = ntargets, tlen
        self.targets = <int *>calloc(ntargets * tlen + 1, sizeof(int))
        self.alive = <char *>calloc((size + 2) * (ntargets + 1), sizeof(char))
        if (not self.g or not self.arc or not self.end or not self.vstart or not self.vlen
                or not self.vis or not self.loopstart or not self.looplen or not self.partner
                or not self.used or not self.arcs or not self.blanks or not self.bused
                or not self.chord_a or not self.chord_b or not self.seq or not self.cell_id
                or not self.cell_first or not self.over_h or not self.under_h
                or not self.parent or not self.scratch or not self.targets or not self.alive):
            raise MemoryError()

    def __dealloc__(self):
        free(self.g); free(self.arc); free(self.end); free(self.vstart); free(self.vlen)
        free(self.vis); free(self.loopstart); free(self.looplen); free(self.partner)
        free(self.used); free(self.arcs); free(self.blanks); free(self.bused)
        free(self.chord_a); free(self.chord_b); free(self.seq); free(self.cell_id)
        free(self.cell_first); free(self.over_h); free(self.under_h); free(self.parent)
        free(self.scratch)
        free(self.targets); free(self.alive)

    # -- strands ----------------------------------------------------------
    cdef int _segments(self, int *usedcp):
        cdef int m = self.m, n = self.n, e, r, c, s, cell, t, out, nr, nc, visn = 0, s0, cc, tt
        self.n_arcs = 0
        self.n_blanks = 0
        for e in range(self.size):
            _loc(m, n, e, &r, &c, &s)
            self.arc[e] = (MASK[self.g[r * n + c]] >> s) & 1
            if not self.arc[e]:
                self.blanks[self.n_blanks] = e
                self.n_blanks += 1
                continue
            self.arcs[self.n_arcs] = e
            self.n_arcs += 1
            self.vstart[e] = visn
            while True:
                cell = r * n + c
                t = self.g[cell]
                out = TRANSIT[t][s]
                usedcp[cell * 4 + s] = 1
                usedcp[cell * 4 + out] = 1
                if t >= 9:
                    self.vis[visn] = cell * 8 + self._over(t, s) * 4 + out
                    visn += 1
                nr, nc = r + DR[out], c + DC[out]
                if 0 <= nr < m and 0 <= nc < n:
                    r, c, s = nr, nc, (out + 2) % 4
                else:
                    self.end[e] = _index(m, n, r, c, out)
                    break
            self.vlen[e] = visn - self.vstart[e]
        self.nloops = 0
        for cell in range(self.cells):
            t = self.g[cell]
            for s0 in range(4):
                if not (MASK[t] >> s0) & 1 or usedcp[cell * 4 + s0]:
                    continue
                r, c, s = cell // n, cell % n, s0
                self.loopstart[self.nloops] = visn
                while True:
                    cc = r * n + c
                    tt = self.g[cc]
                    out = TRANSIT[tt][s]
                    usedcp[cc * 4 + s] = 1
                    usedcp[cc * 4 + out] = 1
                    if tt >= 9:
                        self.vis[visn] = cc * 8 + self._over(tt, s) * 4 + out
                        visn += 1
                    r, c, s = r + DR[out], c + DC[out], (out + 2) % 4
                    if r * n + c == cell and s == s0:
                        break
                self.looplen[self.nloops] = visn - self.loopstart[self.nloops]
                self.nloops += 1
        return 0

    cdef inline int _over(self, int t, int entry):
        if entry == 0 or entry == 2:
            return 1 if t == 10 else 0
        return 1 if t == 9 else 0

    cdef tuple _encode(self, int *visits, int count):
        cdef int k, v, cell, nid = 0, neg
        for k in range(count):
            cell = visits[k] >> 3
            self.scratch[cell] = -1
        for k in range(count):
            v = visits[k]
            cell = v >> 3
            if self.scratch[cell] < 0:
                nid += 1
                self.scratch[cell] = nid
            if (v >> 2) & 1:
                self.over_h[cell] = v & 3
            else:
                self.under_h[cell] = v & 3
        out = []
        for k in range(count):
            v = visits[k]
            cell = v >> 3
            neg = 0 if (self.over_h[cell] + 3) % 4 == self.under_h[cell] else 1
            out.append(self.scratch[cell] << 2 | (0 if (v >> 2) & 1 else 2) | neg)
        return tuple(out)

    # -- pairing helpers ---------------------------------------------------
    cdef inline bint _crosses(self, int a, int b):
        cdef int k, p, q, t
        if a > b:
            t = a
            a = b
            b = t
        for k in range(self.nchords):
            p, q = self.chord_a[k], self.chord_b[k]
            if (a < p < b) != (a < q < b):
                return True
        return False

    cdef inline void _pair(self, int a, int b):
        self.partner[a] = b
        self.partner[b] = a
        if self.mode == 1:
            self.chord_a[self.nchords] = a if a < b else b
            self.chord_b[self.nchords] = b if a < b else a
            self.nchords += 1

    cdef inline void _unpair(self, int a, int b):
        self.partner[a] = -1
        self.partner[b] = -1
        if self.mode == 1:
            self.nchords -= 1

    cdef int _find(self, int x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    cdef int _vertices(self):
        cdef int i, j, a, b, ra, rb, size = self.size, count = 0, k
        for i in range(size):
            self.parent[i] = i
        for i in range(size):
            j = self.partner[i]
            if i < j:
                for k in range(2):
                    if k == 0:
                        a, b = i, (j + 1) % size
                    else:
                        a, b = (i + 1) % size, j
                    ra, rb = self._find(a), self._find(b)
                    if ra != rb:
                        self.parent[ra] = rb
        for i in range(size):
            if self._find(i) == i:
                count += 1
        return count

    cdef void _emit(self, int comps, object code):
        cdef int i
        full = tuple([self.partner[i] for i in range(self.size)])
        self.results.append((full, comps, code, self._vertices()))

    cdef void _blank_rec(self, int comps, object code):
        cdef int i, j, a = -1, k
        for i in range(self.n_blanks):
            if not self.bused[i]:
                a = i
                break
        if a < 0:
            self._emit(comps, code)
            return
        self.bused[a] = 1
        k = 0
        for j in range(a + 1, self.n_blanks):
            if self.bused[j]:
                continue
            k += 1
            if self.mode == 1:
                if k % 2 == 0:
                    continue
                if self._crosses(self.blanks[a], self.blanks[j]):
                    continue
            self.bused[j] = 1
            self._pair(self.blanks[a], self.blanks[j])
            self._blank_rec(comps, code)
            self._unpair(self.blanks[a], self.blanks[j])
            self.bused[j] = 0
        self.bused[a] = 0

    cdef void _finish(self, int comps, object code):
        cdef int k
        if self.mode == 0:
            for k in range(0, self.n_blanks, 2):
                self.partner[self.blanks[k]] = self.blanks[k + 1]
                self.partner[self.blanks[k + 1]] = self.blanks[k]
            self._emit(comps, code)
            for k in range(self.n_blanks):
                self.partner[self.blanks[k]] = -1
            return
        for k in range(self.n_blanks):
            self.bused[k] = 0
        self._blank_rec(comps, code)

    # -- target alignment pruning ------------------------------------------
    cdef bint _check(self, int mark):
        cdef int d = self.depth, ci, k, v, cell, over, sym, f, oh, uh, neg, any_alive = 0
        cdef char *parent_row = self.alive + d * self.ntargets
        cdef char *row = self.alive + (d + 1) * self.ntargets
        cdef int *cand
        for ci in range(self.ntargets):
            row[ci] = 0
            if not parent_row[ci] or self.seqlen > self.tlen:
                continue
            cand = self.targets + ci * self.tlen
            row[ci] = 1
            for k in range(mark, self.seqlen):
                v = self.seq[k]
                cell, over = v >> 3, (v >> 2) & 1
                sym = self.cell_id[cell] << 2 | (0 if over else 2)
                if (cand[k] >> 1) != (sym >> 1):
                    row[ci] = 0
                    break
                if self.cell_first[cell] != k:
                    f = self.seq[self.cell_first[cell]]
                    if (f >> 2) & 1:
                        oh, uh = f & 3, v & 3
                    else:
                        oh, uh = v & 3, f & 3
                    neg = 0 if (oh + 3) % 4 == uh else 1
                    if (cand[k] & 1) != neg:
                        row[ci] = 0
                        break
            if row[ci]:
                any_alive = 1
        return any_alive

    # -- depth-first pairing -------------------------------------------------
    cdef void _traverse(self, int e0, int e, int comps):
        cdef int x = self.end[e], mark = self.seqlen, k, v, cell
        cdef bint ok = True
        self.used[e] = 1
        self.used[x] = 1
        self.used_count += 2
        for k in range(self.vlen[e]):
            v = self.vis[self.vstart[e] + k]
            cell = v >> 3
            if self.cell_id[cell] == 0:
                self.nids += 1
                self.cell_id[cell] = self.nids
                self.cell_first[cell] = self.seqlen
            self.seq[self.seqlen] = v
            self.seqlen += 1
        if self.ntargets:
            ok = self._check(mark)
            self.depth += 1
        if ok:
            self._choose(e0, x, comps)
        if self.ntargets:
            self.depth -= 1
        for k in range(self.seqlen - 1, mark - 1, -1):
            cell = self.seq[k] >> 3
            if self.cell_first[cell] == k:
                self.cell_id[cell] = 0
                self.nids -= 1
        self.seqlen = mark
        self.used[e] = 0
        self.used[x] = 0
        self.used_count -= 2

    cdef void _choose(self, int e0, int x, int comps):
        cdef bint everything = self.used_count == self.n_arcs
        cdef int k, p, nxt
        if everything or not self.require_knot:
            if not (self.mode == 1 and self._crosses(x, e0)):
                self._pair(x, e0)
                if everything:
                    if comps == 1 and self.nloops == 0:
                        if self.ntargets == 0 or self.seqlen == self.tlen:
                            self._finish(1, self._encode(self.seq, self.seqlen))
                    elif not self.require_knot:
                        self._finish(comps + self.nloops, None)
                else:
                    nxt = -1
                    for k in range(self.n_arcs):
                        if not self.used[self.arcs[k]]:
                            nxt = self.arcs[k]
                            break
                    self._traverse(nxt, nxt, comps + 1)
                self._unpair(x, e0)
        for k in range(self.n_arcs):
            p = self.arcs[k]
            if self.used[p] or p == x:
                continue
            if self.mode == 1 and self._crosses(x, p):
                continue
            self._pair(x, p)
            self._traverse(e0, p, comps)
            self._unpair(x, p)

    def run(self, grid, int mode, bint require_knot, targets):
        cdef int k, e, cells = self.cells
        cdef int *usedcp = <int *>calloc(cells * 4, sizeof(int))
        if not usedcp:
            raise MemoryError()
        try:
            for k in range(cells):
                self.g[k] = grid[k]
            self._segments(usedcp)
        finally:
            free(usedcp)
        self.mode = mode
        self.require_knot = require_knot
        self.results = []
        self.nchords = 0
        self.seqlen = 0
        self.nids = 0
        self.used_count = 0
        self.depth = 0
        for e in range(self.size):
            self.partner[e] = -1
            self.used[e] = 0
        for k in range(cells):
            self.cell_id[k] = 0
        if targets is not None:
            for k in range(self.ntargets):
                self.targets_row(k, targets[k])
                self.alive[k] = 1
        if self.n_arcs == 0:
            if require_knot and self.nloops != 1:
                return self.results
            code = None
            if self.nloops == 1:
                code = self._encode(self.vis + self.loopstart[0], self.looplen[0])
                if targets is not None and code not in targets:
                    return self.results
            self._finish(self.nloops, code)
            return self.results
        if require_knot and self.nloops:
            return self.results
        if targets is not None and self.ntargets == 0:
            return self.results
        self._traverse(self.arcs[0], self.arcs[0], 1)
        return self.results

    cdef void targets_row(self, int k, object cand):
        cdef int i
        for i in range(self.tlen):
            self.targets[k * self.tlen + i] = cand[i]


def grid_mosaics(int m, int n, grid, int mode, bint require_knot, targets=None):
    """All pairings of one grid; see ``_core_py.grid_mosaics``."""
    if targets is not None:
        require_knot = True
        targets = [tuple(t) for t in targets]
        tlen = len(targets[0]) if targets else 0
        walker = _Walker(m, n, len(targets), tlen)
    else:
        walker = _Walker(m, n, 0, 0)
    return walker.run(tuple(grid), mode, require_knot, targets)


def encode_code(seq):
    ids, over_h, under_h = {}, {}, {}
    for v in seq:
        cell, over, head = v >> 3, v >> 2 & 1, v & 3
        ids.setdefault(cell, len(ids) + 1)
        (over_h if over else under_h)[cell] = head
    out = []
    for v in seq:
        cell, over = v >> 3, v >> 2 & 1
        neg = 0 if (over_h[cell] + 3) % 4 == under_h[cell] else 1
        out.append(ids[cell] << 2 | (0 if over else 2) | neg)
    return tuple(out)


cdef tuple _relabel(tuple seq):
    cdef dict names = {}
    cdef list out = []
    cdef long s
    for s in seq:
        cid = s >> 2
        if cid not in names:
            names[cid] = len(names) + 1
        out.append(names[cid] << 2 | (s & 3))
    return tuple(out)


def alignments(code, bint allow_reversal=True):
    """Every relabeled rotation (and reversal) of an encoded code, deduplicated."""
    code = tuple(code)
    seqs = [code, code[::-1]] if allow_reversal else [code]
    out = []
    seen = set()
    cdef int k
    for s in seqs:
        for k in range(max(len(s), 1)):
            cand = _relabel(s[k:] + s[:k])
            if cand not in seen:
                seen.add(cand)
                out.append(cand)
    return out


def canonical_key(code, bint allow_reversal=True):
    return min(alignments(code, allow_reversal)) if code else ()


def vertex_classes(int size, partner):
    parent = list(range(size))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i in range(size):
        j = partner[i]
        if i < j:
            for a, b in ((i, (j + 1) % size), ((i + 1) % size, j)):
                ra, rb = find(a), find(b)
                if ra != rb:
                    parent[ra] = rb
    return sum(1 for x in range(size) if find(x) == x)
