from .invariants import (
    MultiIndex,
    MuResult,
    first_nonvanishing,
    format_mu,
    linking_matrix,
    linking_number_oracle,
    mu,
)
from .series import DegreeTooLarge, TruncatedSeries, magnus_expand
from .wirtinger import WirtingerPresentation, chen_milnor_reduce, longitude_word, wirtinger
from .words import GroupWord, commutator

__all__ = [
    "GroupWord",
    "DegreeTooLarge",
    "MultiIndex",
    "MuResult",
    "TruncatedSeries",
    "WirtingerPresentation",
    "chen_milnor_reduce",
    "commutator",
    "first_nonvanishing",
    "format_mu",
    "linking_matrix",
    "linking_number_oracle",
    "longitude_word",
    "magnus_expand",
    "mu",
    "wirtinger",
]
