"""Arithmetic progressions of higher order: exact difference calculus,
certified orders, power classes, ring and operator perturbations, and
(m,q)-isometries."""

from .errors import (
    APSeqError,
    ConsistencyError,
    HypothesisViolation,
    Inconclusive,
    InputError,
    InsufficientData,
    MetricViolation,
    NotAnAP,
    UnsupportedForm,
)
from .diffcalc import Sequence, certified_order, difference, iterated_difference, newton_tableau
from .kernels import BACKEND

__version__ = "0.1.0"
