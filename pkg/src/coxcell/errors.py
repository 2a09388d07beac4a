"""Exception hierarchy shared by every module."""

from __future__ import annotations

from typing import Any


class CoxcellError(Exception):
    """Base class for library errors."""


class SchemaError(CoxcellError):
    """A graph document does not match the expected JSON layout."""


class LabelError(CoxcellError):
    """A Coxeter matrix entry is out of range or asymmetric."""


class ArithmeticModeUnavailable(CoxcellError):
    """Exact arithmetic was requested for labels outside the supported field."""


class GraphMismatch(CoxcellError):
    """Two objects built over different Coxeter graphs were combined."""


class BoundRequired(CoxcellError):
    """An enumeration over an infinite group was requested without a bound."""


class NoWitness(CoxcellError):
    """A root has no recorded (w, s) witness."""


class NotFinitelyPaired(CoxcellError):
    """The pairing of two roots is infinite or undetermined."""


class InternalInvariantViolation(CoxcellError):
    """An identity that must always hold failed: this is a library defect."""


class NotSpherical(CoxcellError):
    """A spherical-type AP set was required."""


class PremiseViolated(CoxcellError):
    """The hypotheses of a check are not satisfied by its inputs."""


class OrbitMismatch(CoxcellError):
    """Deck-action orbits do not match the base complex."""


class NotTwoDimensional(CoxcellError):
    """The complex has cells of dimension three or more."""


class HypothesisNotMet(CoxcellError):
    """The link criterion needs finitely many isometry classes of cells."""


class MismatchReport(CoxcellError):
    """A cross-verification failed; carries the first failing item."""

    def __init__(self, message: str, details: Any = None) -> None:
        super().__init__(message)
        self.details = details


class TruncationWarning(UserWarning):
    """Emitted when a build was cut short by a depth or word-length bound."""
