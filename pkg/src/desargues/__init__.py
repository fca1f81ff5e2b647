"""Constructive affine planes over Heyting fields.

Backends (exact rationals, GF(p), dyadic interval streams) live in
:mod:`desargues.field`; incidence and the decision procedures for
nonparallel lines in :mod:`desargues.plane`; dilatations and their
synthetic constructions in :mod:`desargues.symmetry`; the scalar ring and
coordinates in :mod:`desargues.scalars` and :mod:`desargues.coordinatize`;
configuration checks, axiom suites and demos in :mod:`desargues.configcheck`.
"""

from .field import RATIONAL, Apart, NotApart, Undecided, gf, parse_field
from .plane import Line, Point, intersect, join, parallel_through

__version__ = "0.1.0"

__all__ = ["RATIONAL", "Apart", "NotApart", "Undecided", "gf", "parse_field",
           "Line", "Point", "intersect", "join", "parallel_through"]
