"""Pure-Python search kernels.

Same interface as the compiled ``_core`` extension; used when the extension
is not built or when ``VMOSAIC_PURE=1``.

Encodings shared with the extension:

* a grid is a row-major tuple of tile numbers 0..10;
* a Gauss symbol is ``id << 2 | under << 1 | negative``, so comparing the
  integers orders symbols by (id, O before U, + before -);
* blank modes: 0 = pair blank edges with their ccw neighbours, 1 = genus 0
  (all chords non-crossing), 2 = every blank pairing.
"""

# bit i set when the tile has a connection on side i (N, E, S, W)
MASK = (0, 0b1100, 0b0110, 0b0011, 0b1001, 0b1010, 0b0101, 0b1111, 0b1111, 0b1111, 0b1111)
TRANSIT = (
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
DR = (-1, 0, 1, 0)
DC = (0, 1, 0, -1)

BLANK_ADJACENT, BLANK_NONCROSSING, BLANK_ALL = 0, 1, 2


def edge_location(m, n, e):
    if e < m:
        return e, 0, 3
    e -= m
    if e < n:
        return m - 1, e, 2
    e -= n
    if e < m:
        return m - 1 - e, n - 1, 1
    e -= m
    return 0, n - 1 - e, 0


def edge_index(m, n, r, c, side):
    if side == 3:
        return r
    if side == 2:
        return m + c
    if side == 1:
        return m + n + (m - 1 - r)
    return 2 * m + n + (n - 1 - c)


# ---------------------------------------------------------------------------
# grids

def _choices(need_w, need_n):
    """Tiles compatible with the west/north neighbours (None = boundary)."""
    out = []
    for t in range(11):
        if need_w is not None and bool(MASK[t] >> 3 & 1) != need_w:
            continue
        if need_n is not None and bool(MASK[t] & 1) != need_n:
            continue
        out.append(t)
    return out


_CHOICES = {(w, nn): _choices(w, nn) for w in (None, False, True) for nn in (None, False, True)}


def iter_grids(m, n, min_cross=0, max_cross=-1, prefix=()):
    """Interior-consistent grids in lexicographic order of the row-major tuple."""
    cells = m * n
    if max_cross < 0:
        max_cross = cells
    grid = [0] * cells
    k0 = len(prefix)
    crosses = 0
    for k, t in enumerate(prefix):
        r, c = divmod(k, n)
        need_w = bool(MASK[grid[k - 1]] >> 1 & 1) if c else None
        need_n = bool(MASK[grid[k - n]] >> 2 & 1) if r else None
        if t not in _CHOICES[(need_w, need_n)]:
            return
        grid[k] = t
        crosses += t >= 9

    def rec(k, crosses):
        if crosses > max_cross or crosses + (cells - k) < min_cross:
            return
        if k == cells:
            yield tuple(grid)
            return
        r, c = divmod(k, n)
        need_w = bool(MASK[grid[k - 1]] >> 1 & 1) if c else None
        need_n = bool(MASK[grid[k - n]] >> 2 & 1) if r else None
        for t in _CHOICES[(need_w, need_n)]:
            grid[k] = t
            yield from rec(k + 1, crosses + (t >= 9))

    yield from rec(k0, crosses)


# ---------------------------------------------------------------------------
# strands inside one grid

def _visit(tile, entry, out, cell):
    ns = entry == 0 or entry == 2
    over = (tile == 10) if ns else (tile == 9)
    return cell * 8 + over * 4 + out  # cell, over flag, heading


def segments(m, n, grid):
    """Boundary-to-boundary strand pieces and interior loops of a grid.

    Returns (arc, end, visits, loops): ``arc[e]`` flags arc-carrying boundary
    edges, ``end[e]`` is where the strand entering at ``e`` leaves, and
    ``visits[e]`` its crossing visits ``cell*8 + over*4 + heading``.
    """
    size = 2 * (m + n)
    arc = [False] * size
    end = [-1] * size
    visits = [()] * size
    used = set()
    for e in range(size):
        r, c, s = edge_location(m, n, e)
        if not MASK[grid[r * n + c]] >> s & 1:
            continue
        arc[e] = True
        seq = []
        while True:
            cell = r * n + c
            t = grid[cell]
            out = TRANSIT[t][s]
            used.add(cell * 4 + s)
            used.add(cell * 4 + out)
            if t >= 9:
                seq.append(_visit(t, s, out, cell))
            nr, nc = r + DR[out], c + DC[out]
            if 0 <= nr < m and 0 <= nc < n:
                r, c, s = nr, nc, (out + 2) % 4
            else:
                end[e] = edge_index(m, n, r, c, out)
                break
        visits[e] = tuple(seq)
    loops = []
    for cell in range(m * n):
        t = grid[cell]
        for s0 in range(4):
            if not MASK[t] >> s0 & 1 or cell * 4 + s0 in used:
                continue
            r, c = divmod(cell, n)
            s = s0
            seq = []
            while True:
                cc = r * n + c
                tt = grid[cc]
                out = TRANSIT[tt][s]
                used.add(cc * 4 + s)
                used.add(cc * 4 + out)
                if tt >= 9:
                    seq.append(_visit(tt, s, out, cc))
                r, c, s = r + DR[out], c + DC[out], (out + 2) % 4
                if r * n + c == cell and s == s0:
                    break
            loops.append(tuple(seq))
    return arc, end, visits, loops


def encode_code(seq):
    """Gauss symbols of one closed component from its crossing visits."""
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


def vertex_classes(size, partner):
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


def _crosses(a, b, chords):
    if a > b:
        a, b = b, a
    for p, q in chords:
        if (a < p < b) != (a < q < b):
            return True
    return False


def _blank_matchings(blanks, mode, chords):
    if mode == BLANK_ADJACENT:
        yield [(blanks[k], blanks[k + 1]) for k in range(0, len(blanks), 2)]
        return
    chosen = []

    def rec(rest):
        if not rest:
            yield list(chosen)
            return
        a = rest[0]
        for k in range(1, len(rest), 2 if mode == BLANK_NONCROSSING else 1):
            b = rest[k]
            if mode == BLANK_NONCROSSING and _crosses(a, b, chords + chosen):
                continue
            chosen.append((a, b))
            yield from rec(rest[1:k] + rest[k + 1:])
            chosen.pop()

    yield from rec(list(blanks))


def grid_mosaics(m, n, grid, mode, require_knot, targets=None):
    """All pairings of one grid.

    Returns a list of (partner, components, code, vertex_classes); ``code``
    is the encoded Gauss code of single-component results, else None.  With
    ``targets`` (encoded, relabeled alignments of one code) only knots whose
    traced code equals one of them are produced.
    """
    size = 2 * (m + n)
    arc, end, visits, loops = segments(m, n, grid)
    arcs = [e for e in range(size) if arc[e]]
    blanks = [e for e in range(size) if not arc[e]]
    results = []
    if targets is not None:
        require_knot = True
        targets = [tuple(t) for t in targets]
        tlen = len(targets[0]) if targets else 0

    def finish(partner, chords, comps, code):
        for bm in _blank_matchings(blanks, mode, chords):
            full = list(partner)
            for a, b in bm:
                full[a], full[b] = b, a
            results.append((tuple(full), comps, code, vertex_classes(size, full)))

    if not arcs:
        comps = len(loops)
        if require_knot and comps != 1:
            return results
        code = encode_code(loops[0]) if comps == 1 else None
        if targets is not None and code not in targets:
            return results
        finish([-1] * size, [], comps, code)
        return results
    if require_knot and loops:
        return results

    partner = [-1] * size
    used = [False] * size
    chords = []
    seq = []
    n_arcs = len(arcs)
    state = {"used": 0}

    def alive_after(cands, start):
        """Candidates still matching seq[start:] (first-encounter ids)."""
        if cands is None:
            return None
        ids, first = {}, {}
        for k, v in enumerate(seq):
            cell = v >> 3
            if cell not in ids:
                ids[cell] = len(ids) + 1
                first[cell] = k
        out = []
        for cand in cands:
            ok = len(seq) <= tlen
            k = start
            while ok and k < len(seq):
                v = seq[k]
                cell, over = v >> 3, v >> 2 & 1
                sym = ids[cell] << 2 | (0 if over else 2)
                if cand[k] >> 1 != sym >> 1:
                    ok = False
                elif first[cell] != k:
                    f = seq[first[cell]]
                    oh = (f if f >> 2 & 1 else v) & 3
                    uh = (v if f >> 2 & 1 else f) & 3
                    neg = 0 if (oh + 3) % 4 == uh else 1
                    if cand[k] & 1 != neg:
                        ok = False
                k += 1
            if ok:
                out.append(cand)
        return out

    def traverse(e0, e, comps, cands):
        x = end[e]
        used[e] = used[x] = True
        state["used"] += 2
        mark = len(seq)
        seq.extend(visits[e])
        cands = alive_after(cands, mark)
        if cands is None or cands:
            choose(e0, x, comps, cands)
        del seq[mark:]
        used[e] = used[x] = False
        state["used"] -= 2

    def pair(a, b):
        partner[a], partner[b] = b, a
        if mode == BLANK_NONCROSSING:
            chords.append((min(a, b), max(a, b)))

    def unpair(a, b):
        partner[a] = partner[b] = -1
        if mode == BLANK_NONCROSSING:
            chords.pop()

    def choose(e0, x, comps, cands):
        everything = state["used"] == n_arcs
        # close the component
        if everything or not require_knot:
            if not (mode == BLANK_NONCROSSING and _crosses(x, e0, chords)):
                pair(x, e0)
                if everything:
                    if comps == 1 and not loops:
                        if cands is None or any(len(c) == len(seq) for c in cands):
                            finish(partner, chords, 1, encode_code(seq))
                    elif not require_knot:
                        finish(partner, chords, comps + len(loops), None)
                else:
                    saved = seq[:]
                    del seq[:]
                    nxt = next(a for a in arcs if not used[a])
                    traverse(nxt, nxt, comps + 1, cands)
                    seq[:] = saved
                unpair(x, e0)
        # or continue into another piece
        for p in arcs:
            if used[p] or p == x:
                continue
            if mode == BLANK_NONCROSSING and _crosses(x, p, chords):
                continue
            pair(x, p)
            traverse(e0, p, comps, cands)
            unpair(x, p)

    start = arcs[0]
    traverse(start, start, 1, targets)
    return results


# ---------------------------------------------------------------------------
# canonical forms on encoded codes

def _relabel(seq):
    names = {}
    out = []
    for s in seq:
        cid = s >> 2
        if cid not in names:
            names[cid] = len(names) + 1
        out.append(names[cid] << 2 | (s & 3))
    return tuple(out)


def alignments(code, allow_reversal=True):
    """Every relabeled rotation (and reversal) of an encoded code, deduplicated."""
    code = tuple(code)
    seqs = [code, code[::-1]] if allow_reversal else [code]
    out = []
    seen = set()
    for s in seqs:
        for k in range(max(len(s), 1)):
            cand = _relabel(s[k:] + s[:k])
            if cand not in seen:
                seen.add(cand)
                out.append(cand)
    return out


def canonical_key(code, allow_reversal=True):
    return min(alignments(code, allow_reversal)) if code else ()
