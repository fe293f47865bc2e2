"""Degree, partition and path-count betweenness structure entropies of networks."""

__version__ = "0.1.0"

from .centrality import *
from .datasets import *
from .entropy import *
from .errors import *
from .graph import *
from .parsers import *
from .report import *
from .robustness import *
from .shortest_paths import *
