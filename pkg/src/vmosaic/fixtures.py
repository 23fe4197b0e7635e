"""The bundled fixture corpus and its batch check.

``fixtures/manifest.txt`` is a tab-separated table with one row per mosaic::

    name  file  crossings  expected_genus  expected_poly  diagram_crossings

``-`` marks an empty field.  ``crossings`` is the crossing number carried by
the knot's name.  ``diagram_crossings`` is only filled in when the drawn
diagram has more crossing tiles than that.
"""
import os
from dataclasses import dataclass, field
from importlib import resources

from .errors import FixtureMismatch, FixtureMissing, VMosaicError
from .indexpoly import index_polynomial
from .mosaic import load, validate
from .surface import genus
from .trace import trace


def _opt_int(tok):
    return None if tok == "-" else int(tok)


def _opt_str(tok):
    return None if tok == "-" else tok


def default_root():
    return str(resources.files("vmosaic") / "fixtures")


@dataclass(frozen=True)
class FixtureEntry:
    name: str
    file: str
    crossings: int = None
    expected_genus: int = None
    expected_poly: str = None
    diagram_crossings: int = None
    root: str = field(default=None, compare=False, repr=False)

    @property
    def path(self):
        return os.path.join(self.root or default_root(), self.file)

    @property
    def table(self):
        return self.file.split("/", 1)[0]

    def load(self):
        if not os.path.exists(self.path):
            raise FixtureMissing(f"{self.name}: {self.path} not found")
        return load(self.path)

    def expected_tiles(self, strict_names=False):
        """Crossing tiles the drawing should have."""
        if strict_names or self.diagram_crossings is None:
            return self.crossings
        return self.diagram_crossings


def load_manifest(root=None):
    root = root or default_root()
    path = os.path.join(root, "manifest.txt")
    if not os.path.exists(path):
        raise FixtureMissing(f"no manifest at {path}")
    entries = []
    with open(path, encoding="ascii") as fh:
        for line in fh:
            line = line.rstrip("\n")
            if not line.strip() or line.startswith("#"):
                continue
            cols = line.split("\t")
            cols += ["-"] * (6 - len(cols))
            name, file, crossings, g, poly, diagram = cols[:6]
            entries.append(FixtureEntry(name, file, _opt_int(crossings), _opt_int(g),
                                        _opt_str(poly), _opt_int(diagram), root))
    return entries


def find(name, table=None, root=None):
    """First manifest entry with this name (optionally within one table)."""
    for e in load_manifest(root):
        if e.name == name and (table is None or e.table == table):
            return e
    raise FixtureMissing(f"no fixture named {name!r}" + (f" in {table}" if table else ""))


def check_entry(entry, strict_names=False):
    """List of problems with one fixture; empty when it passes."""
    try:
        mosaic = entry.load()
    except FixtureMissing as exc:
        return [str(exc)]
    except VMosaicError as exc:
        return [f"does not parse: {exc}"]
    report = validate(mosaic)
    if not report.valid:
        return [f"invalid: {v.message}" for v in report.violations]
    problems = []
    result = trace(mosaic)
    if result.components != 1:
        problems.append(f"{result.components} components, expected 1")
    want = entry.expected_tiles(strict_names)
    if want is not None and result.crossings != want:
        problems.append(f"{result.crossings} crossings, expected {want}")
    if entry.expected_genus is not None:
        g = genus(mosaic).genus
        if g != entry.expected_genus:
            problems.append(f"genus {g}, expected {entry.expected_genus}")
    if entry.expected_poly is not None and result.components == 1:
        p = str(index_polynomial(mosaic))
        if p != entry.expected_poly:
            problems.append(f"index polynomial {p}, expected {entry.expected_poly}")
    return problems


@dataclass
class FixtureReport:
    results: list  # (entry, [problems])

    @property
    def failures(self):
        return [(e, p) for e, p in self.results if p]

    @property
    def ok(self):
        return not self.failures

    def lines(self):
        out = []
        for e, problems in self.results:
            status = "ok" if not problems else "FAIL " + "; ".join(problems)
            out.append(f"{e.table:8s} {e.name:14s} {status}")
        out.append(f"{len(self.results) - len(self.failures)}/{len(self.results)} fixtures pass")
        return out

    def raise_for_mismatch(self):
        if self.failures:
            items = [f"{e.file}: {'; '.join(p)}" for e, p in self.failures]
            raise FixtureMismatch(f"{len(items)} fixture(s) failed", items)


def fixtures_check(root=None, strict_names=False):
    """Validate, trace and compare every manifest entry.

    By default the crossing count is compared with ``diagram_crossings``
    where the manifest records one; ``strict_names`` always uses the
    crossing number from the knot's name.
    """
    entries = load_manifest(root)
    return FixtureReport([(e, check_entry(e, strict_names)) for e in entries])
