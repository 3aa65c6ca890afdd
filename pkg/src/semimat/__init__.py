"""Semiring matrices for path problems on directed graphs.

Bit-packed Boolean matrices give reachability (transitive closure); dense
saturated "anti-distance" matrices give all-pairs shortest paths without
floating point, using unsigned lanes of 8, 16 or 32 bits. Lane arithmetic
runs on a vectorised numpy path or a bit-exact pure-Python fallback, see
:mod:`semimat.kernels`.
"""

from .antidist import AntidistMatrix, DistMatrix
from .boolmat import BoolMatrix
from .graphio import GraphParseError, GraphSpec, parse_edge_list
from .matio import MatrixFormatError, load, save

__version__ = "0.1.0"

__all__ = [
    "AntidistMatrix",
    "BoolMatrix",
    "DistMatrix",
    "GraphParseError",
    "GraphSpec",
    "MatrixFormatError",
    "load",
    "parse_edge_list",
    "save",
]
