"""Signed Gauss codes: parsing, printing, canonical forms and chord statistics.

A code is a cyclic sequence of passes ``(pass, id, sign)`` with pass ``"O"``
or ``"U"`` and sign ``+1`` or ``-1``, e.g. ``O1-U2+O3+U1-...``.
"""
import re
from collections import Counter, namedtuple
from dataclasses import dataclass
from itertools import combinations

from .errors import BadCode, ParseError

Symbol = namedtuple("Symbol", "passing id sign")

_FULL_RE = re.compile(r"([OU])(\d+)([+-])")
_SHORT_RE = re.compile(r"(\d+)([+-])")


def _sign_char(sign):
    return "+" if sign > 0 else "-"


@dataclass(frozen=True)
class GaussCode:
    symbols: tuple

    def __post_init__(self):
        object.__setattr__(self, "symbols", tuple(Symbol(*s) for s in self.symbols))
        check(self.symbols)

    def __len__(self):
        return len(self.symbols)

    def __iter__(self):
        return iter(self.symbols)

    def __str__(self):
        return "".join(f"{s.passing}{s.id}{_sign_char(s.sign)}" for s in self.symbols)

    @property
    def crossings(self):
        return len(self.symbols) // 2

    def ids(self):
        seen = []
        for s in self.symbols:
            if s.id not in seen:
                seen.append(s.id)
        return seen

    def signs(self):
        return {s.id: s.sign for s in self.symbols}

    def positions(self):
        """id -> (position of O pass, position of U pass)."""
        pos = {}
        for k, s in enumerate(self.symbols):
            o, u = pos.get(s.id, (None, None))
            pos[s.id] = (k, u) if s.passing == "O" else (o, k)
        return pos

    def rotated(self, k):
        k %= max(len(self.symbols), 1)
        return GaussCode(self.symbols[k:] + self.symbols[:k])

    def reversed(self):
        return GaussCode(self.symbols[::-1])

    def mirrored(self):
        swap = {"O": "U", "U": "O"}
        return GaussCode(tuple(Symbol(swap[s.passing], s.id, -s.sign) for s in self.symbols))

    def relabeled(self):
        """Ids renumbered 1, 2, ... by first appearance."""
        return GaussCode(relabel(self.symbols))


def check(symbols):
    count = Counter(s.id for s in symbols)
    for cid, k in count.items():
        if k != 2:
            raise BadCode(f"crossing {cid} appears {k} times, expected 2")
    by_id = {}
    for s in symbols:
        if s.passing not in ("O", "U") or s.sign not in (1, -1):
            raise BadCode(f"malformed symbol {s!r}")
        by_id.setdefault(s.id, []).append(s)
    for cid, (a, b) in by_id.items():
        if a.passing == b.passing:
            raise BadCode(f"crossing {cid} needs one over and one under pass")
        if a.sign != b.sign:
            raise BadCode(f"crossing {cid} has mismatched signs")


def relabel(symbols):
    names = {}
    out = []
    for s in symbols:
        if s.id not in names:
            names[s.id] = len(names) + 1
        out.append(Symbol(s.passing, names[s.id], s.sign))
    return tuple(out)


def parse_code(text):
    """Parse a signed Gauss code.

    Besides the full ``O1-U2+...`` grammar, two unsigned-pass shorthands are
    accepted.  If both marks of every id agree, they are crossing signs and
    the first occurrence of an id is the over pass.  If they disagree for
    every id, the code is a classical one written with pass marks (``-`` for
    over, ``+`` for under); crossing signs are then recovered from the plane
    embedding, see :func:`classical_signs`.
    """
    text = "".join(text.split()).replace("\u2212", "-")
    if not text:
        return GaussCode(())
    if text[0] in "OU":
        pattern, full = _FULL_RE, True
    else:
        pattern, full = _SHORT_RE, False
    pos, raw = 0, []
    while pos < len(text):
        mt = pattern.match(text, pos)
        if mt is None:
            raise ParseError(f"cannot parse Gauss code at {text[pos:pos + 8]!r}")
        raw.append(mt.groups())
        pos = mt.end()
    if full:
        symbols = [Symbol(p, int(cid), 1 if sg == "+" else -1) for p, cid, sg in raw]
    else:
        marks = {}
        for cid, sg in raw:
            marks.setdefault(cid, []).append(sg)
        if any(len(v) != 2 for v in marks.values()):
            bad = next(c for c, v in marks.items() if len(v) != 2)
            raise BadCode(f"crossing {bad} appears {len(marks[bad])} times, expected 2")
        agree = {c for c, (a, b) in marks.items() if a == b}
        if len(agree) == len(marks):
            symbols, seen = [], set()
            for cid, sg in raw:
                symbols.append(Symbol("U" if cid in seen else "O", int(cid), 1 if sg == "+" else -1))
                seen.add(cid)
        elif not agree:
            passes = [("O" if sg == "-" else "U", int(cid)) for cid, sg in raw]
            signs = classical_signs(passes)
            symbols = [Symbol(p, cid, signs[cid]) for p, cid in passes]
        else:
            raise BadCode("shorthand mixes sign marks and pass marks")
    code = GaussCode(tuple(symbols))
    return code.relabeled() if sorted(set(code.ids())) != list(range(1, code.crossings + 1)) else code


#: largest unsigned classical code accepted by :func:`classical_signs`
MAX_CLASSICAL_SOLVE = 16


def classical_signs(passes):
    """Crossing signs of a classical diagram given only its pass sequence.

    ``passes`` is a sequence of (``"O"``/``"U"``, id).  The signs are the
    ones that make the diagram genus 0.  A prime plane curve embeds uniquely
    up to reflection, so the answer is then unique up to a global flip,
    fixed here by making the first crossing positive.  Composite curves let
    each summand flip on its own; the first genus-0 vector in enumeration
    order is returned.  Exhaustive over sign vectors, so limited to
    :data:`MAX_CLASSICAL_SOLVE` crossings.
    """
    ids = []
    for _, cid in passes:
        if cid not in ids:
            ids.append(cid)
    if len(ids) > MAX_CLASSICAL_SOLVE:
        raise BadCode(f"unsigned code with {len(ids)} crossings is too large to sign")
    first, rest = ids[0], ids[1:]
    for bits in range(1 << len(rest)):
        signs = {first: 1}
        for k, cid in enumerate(rest):
            signs[cid] = -1 if bits >> k & 1 else 1
        code = GaussCode(tuple(Symbol(p, cid, signs[cid]) for p, cid in passes))
        if diagram_genus(code) == 0:
            return signs
    raise BadCode("pass sequence is not realizable by a classical diagram")


def _key(symbols):
    return tuple((s.id, s.passing, -s.sign) for s in symbols)


def canonicalize(code, allow_reversal=True):
    """Least relabeled rotation (and optionally reversal) of ``code``."""
    seqs = [code.symbols]
    if allow_reversal:
        seqs.append(code.symbols[::-1])
    best = None
    for seq in seqs:
        for k in range(max(len(seq), 1)):
            cand = relabel(seq[k:] + seq[:k])
            if best is None or _key(cand) < _key(best):
                best = cand
    return GaussCode(best or ())


def same_diagram(a, b, allow_reversal=True):
    return canonicalize(a, allow_reversal) == canonicalize(b, allow_reversal)


def max_nonrepeating(code):
    """Longest cyclic run of passes with pairwise distinct crossing ids."""
    ids = [s.id for s in code.symbols]
    size = len(ids)
    if not size:
        return 0
    best, start, last = 0, 0, {}
    doubled = ids + ids
    for k, cid in enumerate(doubled):
        if cid in last and last[cid] >= start:
            start = last[cid] + 1
        last[cid] = k
        best = max(best, min(k - start + 1, size))
    return min(best, code.crossings)


def chords(code):
    """Crossing id -> (first position, second position)."""
    pos = {}
    for k, s in enumerate(code.symbols):
        pos.setdefault(s.id, []).append(k)
    return {cid: tuple(p) for cid, p in pos.items()}


def interlacement(code):
    ch = chords(code)
    graph = {cid: set() for cid in ch}
    for a, b in combinations(ch, 2):
        (p, q), (r, s) = ch[a], ch[b]
        if p < r < q < s or r < p < s < q:
            graph[a].add(b)
            graph[b].add(a)
    return graph


def is_alternating(code):
    """Over and under passes alternate all the way around the code."""
    syms = code.symbols
    return all(s.passing != syms[k - 1].passing for k, s in enumerate(syms))


def is_reduced(code):
    """No nugatory crossing: every chord interlaces at least one other."""
    return all(interlacement(code).values())


def symmetry_orbit(code):
    """Canonical codes of the same diagram under reflection and turnover.

    Crossing changes (mirror), reflection in a line of the plane (all signs
    flip) and turning the sphere over (all passes swap) each give another
    code for the same picture.
    """
    swap = {"O": "U", "U": "O"}
    out = set()
    for flip_pass in (False, True):
        for flip_sign in (False, True):
            syms = tuple(Symbol(swap[s.passing] if flip_pass else s.passing, s.id,
                                -s.sign if flip_sign else s.sign) for s in code.symbols)
            out.add(canonicalize(GaussCode(syms)))
    return out


def is_realizable_planar(code):
    """Whether the underlying chord diagram is realizable by a plane curve.

    Rosenstiehl's interlacement-graph test: every chord interlaces an even
    number of chords; two non-interlaced chords share an even number of
    interlaced neighbours; and the interlaced pairs sharing an even number
    of neighbours form a cut of the interlacement graph.
    """
    graph = interlacement(code)
    for cid, nbrs in graph.items():
        if len(nbrs) % 2:
            return False
    for a, b in combinations(graph, 2):
        if b not in graph[a] and len(graph[a] & graph[b]) % 2:
            return False
    # 2-colour so that exactly the "even" edges join different colours
    colour = {}
    for root in graph:
        if root in colour:
            continue
        colour[root] = 0
        stack = [root]
        while stack:
            a = stack.pop()
            for b in graph[a]:
                flip = len(graph[a] & graph[b]) % 2 == 0
                want = colour[a] ^ flip
                if b not in colour:
                    colour[b] = want
                    stack.append(b)
                elif colour[b] != want:
                    return False
    return True


def diagram_genus(code):
    """Genus of the minimal (Carter) surface carrying the signed diagram.

    Builds the 4-valent ribbon graph: each crossing has half-edges
    over-in, over-out, under-in, under-out in counterclockwise order
    o_out, u_out, o_in, u_in for a positive crossing and
    u_out, o_out, u_in, o_in for a negative one.
    """
    syms = code.symbols
    size = len(syms)
    if not size:
        return 0
    # half-edge = (crossing id, "O"/"U", "in"/"out")
    ccw = {}
    for cid, sign in code.signs().items():
        if sign > 0:
            order = [("O", "out"), ("U", "out"), ("O", "in"), ("U", "in")]
        else:
            order = [("U", "out"), ("O", "out"), ("U", "in"), ("O", "in")]
        for k, (p, d) in enumerate(order):
            ccw[(cid, p, d)] = (cid,) + order[(k + 1) % 4]
    other_end = {}
    for k, s in enumerate(syms):
        nxt = syms[(k + 1) % size]
        a, b = (s.id, s.passing, "out"), (nxt.id, nxt.passing, "in")
        other_end[a], other_end[b] = b, a
    seen, faces = set(), 0
    for start in other_end:
        if start in seen:
            continue
        faces += 1
        h = start
        while h not in seen:
            seen.add(h)
            h = ccw[other_end[h]]
    vertices, edges = code.crossings, size
    chi = vertices - edges + faces
    return (2 - chi) // 2
