"""Topology of the closure surface: vertex classes, genus, virtual crossings."""
from dataclasses import dataclass
from itertools import combinations

from .errors import NonIntegerGenus
from .mosaic import require_valid


class DisjointSet:
    def __init__(self, items=()):
        self.parent = {}
        for x in items:
            self.parent[x] = x

    def find(self, x):
        parent = self.parent
        parent.setdefault(x, x)
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)

    def count(self):
        return sum(1 for x in self.parent if self.find(x) == x)


@dataclass(frozen=True)
class SurfaceReport:
    v: int
    genus: int
    virtual_crossings: int

    def to_json(self):
        return {"v": self.v, "genus": self.genus, "virtual_crossings": self.virtual_crossings}

    def __str__(self):
        return f"v={self.v} genus={self.genus} virtual_crossings={self.virtual_crossings}"


def count_vertex_classes(num_edges, partner):
    """Corner classes of a 2k-gon whose paired sides are glued as x ... x^-1.

    Edge i runs from corner i to corner i+1 along the boundary walk.
    """
    ds = DisjointSet(range(num_edges))
    for i, j in enumerate(partner):
        if i < j:
            ds.union(i, (j + 1) % num_edges)
            ds.union((i + 1) % num_edges, j)
    return ds.count()


def boundary_vertices(mosaic):
    require_valid(mosaic)
    return count_vertex_classes(mosaic.num_edges, mosaic.partner)


def genus_from_vertices(m, n, v):
    twice = 1 - v + m + n
    if twice < 0 or twice % 2:
        raise NonIntegerGenus(f"1 - v + m + n = {twice} for v={v}, m={m}, n={n}")
    return twice // 2


def genus(mosaic):
    v = boundary_vertices(mosaic)
    g = genus_from_vertices(mosaic.rows, mosaic.cols, v)
    return SurfaceReport(v, g, count_interlocking(mosaic))


def _edge_endpoints(m, n, index):
    """Lattice endpoints (line row, line col) of a boundary edge, in walk order."""
    if index < m:
        return (index, 0), (index + 1, 0)
    index -= m
    if index < n:
        return (m, index), (m, index + 1)
    index -= n
    if index < m:
        r = m - 1 - index
        return (r + 1, n), (r, n)
    index -= m
    c = n - 1 - index
    return (0, c + 1), (0, c)


def genus_oracle(mosaic):
    """Genus from the Euler characteristic of the full cell structure.

    Vertices are all (m+1)(n+1) lattice points modulo the gluing, edges all
    unit grid segments modulo the gluing, faces the m*n cells.
    """
    require_valid(mosaic)
    m, n = mosaic.rows, mosaic.cols
    ds = DisjointSet((r, c) for r in range(m + 1) for c in range(n + 1))
    for i, j in mosaic.pairs():
        si, ei = _edge_endpoints(m, n, i)
        sj, ej = _edge_endpoints(m, n, j)
        ds.union(si, ej)
        ds.union(ei, sj)
    vertices = ds.count()
    interior_edges = (m - 1) * n + m * (n - 1)
    edges = interior_edges + (m + n)
    faces = m * n
    chi = vertices - edges + faces
    if chi % 2:
        raise NonIntegerGenus(f"odd Euler characteristic {chi}")
    return (2 - chi) // 2


def interleaved(p, q):
    (a, b), (c, d) = sorted(p), sorted(q)
    return a < c < b < d or c < a < d < b


def interlocking_pairs(mosaic):
    arc_pairs = [(i, j) for i, j in mosaic.pairs() if mosaic.edge_has_arc(i)]
    return [(p, q) for p, q in combinations(arc_pairs, 2) if interleaved(p, q)]


def count_interlocking(mosaic):
    require_valid(mosaic)
    return len(interlocking_pairs(mosaic))
