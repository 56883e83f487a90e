from .general import final_scaffold_general, initial_scaffold_general
from .grid import (
    betti1_support,
    final_scaffold_grid,
    initial_scaffold_grid,
    upset_family_essential,
    upset_family_u_k,
)
from .joins import scaffold_joins_nd, upset_scaffold_joins
from .koszul import BettiSupport, essential_points_grid, koszul_beta1, koszul_beta1_support
from .scaffold import (
    Scaffold,
    brute_force_essential,
    full_initial_subposet,
    scaffold_as_poset,
    verify_scaffold,
)
from .sweep import SweepLevel, SweepState, UpsetSweep, scaffold_sweep_3d, slice_membership, sweep_upset_scaffold
