"""Exact scalars: rationals, Q(sqrt5), certified intervals, GF(2), exact LP."""

from fractions import Fraction as Rational

from .gf2 import GF2Matrix, gf2_matvec, gf2_nullspace, gf2_rank, gf2_solve
from .interval import (PRECISION_SCHEDULE, CertifiedInterval, certified_sign_det, enclose,
                       interval_trig_point)
from .lp import phase_one, strict_separation_feasible
from .qsqrt5 import SQRT5, QSqrt5, qsqrt5_dot, qsqrt5_sign

__all__ = [
    "Rational", "GF2Matrix", "gf2_rank", "gf2_solve", "gf2_nullspace", "gf2_matvec",
    "CertifiedInterval", "certified_sign_det", "interval_trig_point", "enclose", "PRECISION_SCHEDULE",
    "phase_one", "strict_separation_feasible", "QSqrt5", "SQRT5", "qsqrt5_dot", "qsqrt5_sign",
]
