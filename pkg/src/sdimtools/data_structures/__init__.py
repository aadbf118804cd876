"""
data_structures
===============

Value types: weights and labelings, compacted and cup diagrams, partitions.
"""
from .super_weight import (
    BlockId,
    ExtProfile,
    Labeling,
    SuperWeight,
    labeling,
    twist_by_berezin,
    validate_weight,
    weight_from_labeling,
)
from .cup_diagram import CompactedDiagram, CupDiagram, build, build_from_vees, compact
from .partition import Partition
