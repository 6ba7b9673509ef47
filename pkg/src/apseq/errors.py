"""Exception hierarchy shared by every analysis module."""

from __future__ import annotations


class APSeqError(Exception):
    """Base class for all errors raised by :mod:`apseq`."""


class InputError(APSeqError, ValueError):
    """Arguments outside the documented domain, or unparseable input."""


class InsufficientData(APSeqError):
    """The finite prefix is too short for the requested operation."""


class UnsupportedForm(APSeqError):
    """The operation is not defined for this kind of group element."""


class NotAnAP(APSeqError):
    """No order up to ``h_max`` is certified on the available horizon."""

    def __init__(self, h_max: int, checked_up_to: int, horizon: int):
        self.h_max = h_max
        self.checked_up_to = checked_up_to
        self.horizon = horizon
        super().__init__(
            f"not an arithmetic progression of order <= {checked_up_to} "
            f"(h_max={h_max}, horizon={horizon})"
        )


class Inconclusive(APSeqError):
    """The horizon is too short to decide anything."""


class HypothesisViolation(APSeqError):
    """A theorem's hypotheses do not hold on the given instance.

    ``failures`` lists the names of the violated hypotheses.
    """

    def __init__(self, message: str, failures: list[str] | None = None):
        self.failures = list(failures or [])
        super().__init__(message)


class ConsistencyError(APSeqError):
    """An internal cross-check disagreed. Never expected to fire."""


class MetricViolation(HypothesisViolation):
    def __init__(self, axiom: str, indices: tuple[int, ...]):
        self.axiom = axiom
        self.indices = indices
        super().__init__(f"{axiom} violated at {indices}", [axiom])
