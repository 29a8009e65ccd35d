"""Link diagrams, Milnor invariants and shake-concordance constructions."""

from .construct import (
    BandSpec,
    ConstructionError,
    MultidiskSpec,
    OrientationPattern,
    RouteStep,
    band_sum,
    cable_component,
    cable_string_link,
    closure,
    infect,
    mirror,
    r_shaking,
    reverse,
    split_union,
    sublink,
)
from .milnor import MultiIndex, MuResult, first_nonvanishing, linking_matrix, linking_number_oracle, mu
from .pd import Crossing, DiagramError, LinkDiagram, StringLinkDiagram, emit_pd, parse_pd, validate

__version__ = "0.1.0"

__all__ = [
    "BandSpec",
    "ConstructionError",
    "Crossing",
    "DiagramError",
    "LinkDiagram",
    "MuResult",
    "MultiIndex",
    "MultidiskSpec",
    "OrientationPattern",
    "RouteStep",
    "StringLinkDiagram",
    "band_sum",
    "cable_component",
    "cable_string_link",
    "closure",
    "emit_pd",
    "first_nonvanishing",
    "infect",
    "linking_matrix",
    "linking_number_oracle",
    "mirror",
    "mu",
    "parse_pd",
    "r_shaking",
    "reverse",
    "split_union",
    "sublink",
    "validate",
]
