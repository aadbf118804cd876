"""
invariants - block data, Bruhat combinatorics, moves, reductions, multiplicities and covariant
superdimensions.
"""
from .blocks import (
    atypicality,
    block_of,
    ground_state,
    ground_state_index,
    is_kostant,
    is_maximal_atypical,
    labeling_window,
    normalize_block,
    parity,
    parity_shift,
)
from .bruhat import bgg_layer, bruhat_leq, ext_kac_dim, ext_self_dims, l_distance, swap_distance
from .moves import MoveExpansion, MoveSite, Relation, classify_site, expand, move_sites, relation
from .reduction import (
    KostantChain,
    Pivot,
    ReductionEngine,
    ReductionTrace,
    algorithm_iv,
    m_oracle,
    pivot,
    reduce_trace,
)
from .multiplicity import SdimResult, m_closed, multinomial, rho_of_block, sdim, weyl_dim
from .covariant import (
    column_pieri,
    covariant_sdim_oracle,
    hook_condition,
    is_covariant_max_atypical,
    lr_expand,
    to_highest_weight,
)
