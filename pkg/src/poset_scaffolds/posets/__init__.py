from .grid import (
    GridInterval,
    GridPoint,
    as_point,
    format_point,
    grid_interval_to_poset,
    grid_leq,
    join,
    membership,
    prune_maximal,
    prune_minimal,
)
from .poset import Element, Poset, transitive_closure
from .staircase import Staircase
