"""Hex board machinery and the fixed-point solvers built on top of it."""

from .board import (
    Board,
    Coord,
    adjacent,
    format_board,
    full_colorings,
    neighbors,
    no_draw_check,
    opponent,
    parse_board,
    play,
    winner,
)
from .brouwer import (
    CoveringSets,
    DisplacementMap,
    Hex2DResult,
    check_noncontiguity,
    covering_sets,
    displacement_map,
    fixed_point_1d,
    fixed_point_2d_hex,
)
from .interface import (
    Decomposition,
    InterfaceGraph,
    boundary_paths,
    decompose,
    interface_graph,
    winner_via_interface,
)
from .maps import (
    CatalogEntry,
    MapSpec,
    catalog,
    get_entry,
    get_map,
    interval_as_simplex,
    parse,
    parse_simplex,
)
from .solver import (
    GameValue,
    MonotonicityResult,
    best_move,
    check_extra_stone_monotonicity,
    solve,
)
from .sperner import (
    SimplexPoint,
    SpernerResult,
    Subdivision,
    brouwer_label,
    check_proper,
    completely_labeled,
    dump_subdivision,
    fixed_point_sperner,
    label_subdivision,
    subdivide,
    support,
)

__version__ = "0.1.0"
