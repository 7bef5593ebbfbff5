"""Exact verification of generator sets for Weyl-orbit ideals, Pfaffian identities
and torus-fixed point families in classical types."""

__version__ = "0.1.0"

from .groebner import (
    INFINITE,
    Ideal,
    LimitExceeded,
    Limits,
    groebner_basis,
    hilbert_function,
    ideal_contains,
    ideal_equal,
    ideal_member,
    initial_form_ideal,
    limits_scope,
    normal_form,
    quotient_dimension,
)
from .poly import DEGLEX, GREVLEX, LEX, ParseError, Polynomial, Ring, parse_poly, standard_ring
from .weyl import LeviDatum, Partition, PointSet, dual_partition, orbit_size, vanishing_ideal_points, weyl_orbit

__all__ = [
    "__version__",
    "DEGLEX",
    "GREVLEX",
    "INFINITE",
    "Ideal",
    "LEX",
    "LeviDatum",
    "LimitExceeded",
    "Limits",
    "ParseError",
    "Partition",
    "PointSet",
    "Polynomial",
    "Ring",
    "dual_partition",
    "groebner_basis",
    "hilbert_function",
    "ideal_contains",
    "ideal_equal",
    "ideal_member",
    "initial_form_ideal",
    "limits_scope",
    "normal_form",
    "orbit_size",
    "parse_poly",
    "quotient_dimension",
    "standard_ring",
    "vanishing_ideal_points",
    "weyl_orbit",
]
