"""Positively t-determined multigraded modules: radicals, dualities, Betti numbers, Ext."""

from .lattice import map_r, map_s, map_sqrt, map_p, supports, box_enumerate
from .linalg import QQ, GF, Matrix, Subspace, field_from_string
from .ideals import MonomialIdeal, minimalize
from .boxmod import (
    BoxModule, MonomialMatrix, from_ideal_pair, from_presentation, free_box,
    pullback_functor, window_reindex, alexander_dual, kdual, direct_sum,
    annihilator_and_dim, ass_primes, compare_graded, nat_transforms,
)
from .homological import (
    BettiTable, betti_table, taylor_oracle, minimal_resolution, radicalize_resolution,
    ext_window, ext_window_b, classify,
)
from .textio import parse, parse_file, build_module

__version__ = "0.1.0"
