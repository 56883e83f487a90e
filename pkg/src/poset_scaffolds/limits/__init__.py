from .colimits import CopresentationBasis, colimit_copresentations, colimit_full_coequalizer
from .grank import (
    GrankReport,
    colimit_over,
    comparable_extremal_pairs,
    final_scaffold_of,
    generalized_rank,
    generalized_rank_full,
    initial_scaffold_of,
    limit_over,
    module_on,
)
from .limits import (
    PresectionBasis,
    extend_presection,
    limit_all_pairs,
    limit_full_equalizer,
    limit_presections,
)
