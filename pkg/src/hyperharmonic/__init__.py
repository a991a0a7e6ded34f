"""Hyperharmonic numbers and exact zeta closed forms of hyperharmonic series."""

from .combinatorics import (
    binomial,
    harmonic,
    hyperharmonic,
    hyperharmonic_closed,
    pochhammer,
    r_stirling_cycle,
    stirling_cycle,
)
from .errors import AccuracyError, CapacityError, DivergenceError, DomainError
from .summation import SumKey, b_km, b_km_hypergeometric, convergent, euler_s1, s_rm
from .zeta import bernoulli, zeta, zeta_even_exact
from .zeta_algebra import ZetaExpr

__version__ = "0.1.0"

__all__ = [
    "AccuracyError",
    "CapacityError",
    "DivergenceError",
    "DomainError",
    "SumKey",
    "ZetaExpr",
    "b_km",
    "b_km_hypergeometric",
    "bernoulli",
    "binomial",
    "convergent",
    "euler_s1",
    "harmonic",
    "hyperharmonic",
    "hyperharmonic_closed",
    "pochhammer",
    "r_stirling_cycle",
    "s_rm",
    "stirling_cycle",
    "zeta",
    "zeta_even_exact",
]
