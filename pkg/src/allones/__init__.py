"""Feasibility and small press sets for lamp-lighting (all-ones) instances.

Given a graph where every vertex carries a lamp and a button (pressing
toggles the neighbors' lamps, plus the vertex's own lamp for '+' style
switches), decide whether all lamps can be turned on, and if so produce a
press set whose size is provably at most min(r, (n + opt)/2), where r is
the rank of the press-effect matrix and opt the true minimum.
"""

from .approx import (
    compute_bounds,
    decompose,
    greedy_assign,
    solve_approx,
    solve_from_decomposition,
    unpermute,
)
from .exact import exact_by_nullspace, exact_by_press_enumeration
from .gf2 import (
    BitMat,
    BitVec,
    EchelonDecomposition,
    RowPermutation,
    column_echelon_grouped,
    mat_vec,
    rank,
    solve,
)
from .instance_io import (
    ParseError,
    SplitMix64,
    gen_complete,
    gen_cycle,
    gen_grid,
    gen_path,
    gen_random_gnp,
    gen_random_mixed,
    gen_random_tree,
    parse_instance,
    parse_switch_string,
    render_instance,
)
from .lamps import (
    Certificate,
    Instance,
    Solution,
    SwitchType,
    build_system,
    is_all_on,
    simulate_presses,
)

__version__ = "0.1.0"

__all__ = [
    "BitMat",
    "BitVec",
    "Certificate",
    "EchelonDecomposition",
    "Instance",
    "ParseError",
    "RowPermutation",
    "Solution",
    "SplitMix64",
    "SwitchType",
    "build_system",
    "column_echelon_grouped",
    "compute_bounds",
    "decompose",
    "exact_by_nullspace",
    "exact_by_press_enumeration",
    "gen_complete",
    "gen_cycle",
    "gen_grid",
    "gen_path",
    "gen_random_gnp",
    "gen_random_mixed",
    "gen_random_tree",
    "greedy_assign",
    "is_all_on",
    "mat_vec",
    "parse_instance",
    "parse_switch_string",
    "rank",
    "render_instance",
    "simulate_presses",
    "solve",
    "solve_approx",
    "solve_from_decomposition",
    "unpermute",
]
