"""Long virtual knots on Gauss diagrams."""

from ._core import (
    LongGaussDiagram,
    apply_move,
    band_pass_pair,
    beta,
    concatenate,
    conway_c2,
    enumerate_moves,
    fly_certificate,
    inverse,
    is_realizable,
    knot,
    pairing,
    parse,
    power,
    random_diagram,
    report,
    search,
    serialize,
    trivialize_inverse_pair,
    v21,
    v22,
    verify_certificate,
    w,
)

__all__ = [
    "LongGaussDiagram",
    "apply_move",
    "band_pass_pair",
    "beta",
    "concatenate",
    "conway_c2",
    "enumerate_moves",
    "fly_certificate",
    "inverse",
    "is_realizable",
    "knot",
    "pairing",
    "parse",
    "power",
    "random_diagram",
    "report",
    "search",
    "serialize",
    "trivialize_inverse_pair",
    "v21",
    "v22",
    "verify_certificate",
    "w",
]
