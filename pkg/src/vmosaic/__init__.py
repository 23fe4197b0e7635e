"""Rectangular virtual knot mosaics: closure surfaces, Gauss codes, moves,
row-mosaic construction, the intersection index polynomial and enumeration."""
from ._kernels import BACKEND
from .errors import *  # noqa: F401,F403
from .gauss import GaussCode, Symbol, canonicalize, parse_code
from .indexpoly import IndexPolynomial, chord_polynomial, crossing_indices, index_polynomial
from .mosaic import Mosaic, load, parse, serialize, validate
from .moves import InjectionSite, eject, inject
from .render import render_ascii, render_svg
from .rowbuild import build_row, plan_row
from .search import census, enumerate_mosaics, find_mosaic, row_number_bound, tile_number_bound
from .surface import count_interlocking, genus, genus_oracle
from .tiles import Side, Tile
from .trace import trace

__version__ = "0.1.0"
