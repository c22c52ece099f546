"""Optimal partial domino tilings of Manhattan polyominoes.

A skyline (tuple of column heights) is reduced to a flow network on its
odd-height columns; a greedy stack pass finds the maximum flow v and the
number of cells left uncovered by an optimal tiling is
``#odd columns - 2v``.
"""

__version__ = "0.1.0"

from .certificate import DeficiencyCertificate, certify, verify_certificate
from .errors import CapacityError, InternalInvariantError, ParseError
from .flownet import FlowNetwork, RangeMinIndex, Role, build_network, range_min
from .formats import format_skyline, parse_input
from .generate import InstanceSpec, generate
from .greedy import ArcFlow, MatchPlan, deficiency, find_tractable, greedy_naive, greedy_stack
from .reference import d_oracle, grid_graph, max_flow_reference, max_matching
from .skyline import (
    Cell,
    Color,
    DominantInfo,
    Skyline,
    balance,
    color_counts,
    dominant_columns,
    imbalance,
    is_included,
)
from .tiler import Domino, Orientation, Tiling, build_tiling, validate_tiling
