"""
Exception hierarchy for kuratowski_lab.

Every error carries a structured ``details`` mapping so the CLI can print it as JSON.
Input problems exit with status 2, failed verifications and exhausted budgets with 1.
"""

from typing import Any, Dict, Optional


class LabError(Exception):
    """Base class for all errors raised by the lab."""

    exit_code = 1

    def __init__(self, message: str, **details: Any):
        super().__init__(message)
        self.message = message
        self.details: Dict[str, Any] = details

    def to_dict(self) -> Dict[str, Any]:
        return {'error': type(self).__name__, 'message': self.message, 'details': self.details}


class InputError(LabError):
    """The caller handed us something malformed."""

    exit_code = 2


class SizeMismatch(InputError):
    pass


class BadRange(InputError):
    pass


class NotReflexive(InputError):
    pass


class NotAntisymmetric(InputError):
    pass


class NotTransitive(InputError):
    pass


class NotAPartialOrder(InputError):
    pass


class NotAHasseDiagram(InputError):
    pass


class UnknownLetter(InputError):
    pass


class EmptyWord(InputError):
    pass


class ParamMismatch(InputError):
    pass


class InvalidParams(InputError):
    pass


class NotAClosure(InputError):
    pass


class NotAnInterior(InputError):
    pass


class NotMonotone(InputError):
    pass


class NotDominated(InputError):
    pass


class NotPeriodic(InputError):
    pass


class InvalidInstance(InputError):
    pass


class PreconditionFailed(InputError):
    pass


class NotALattice(InputError):
    pass


class NotDistributive(InputError):
    pass


class ConfigError(InputError):
    pass


class CapExceeded(InputError):
    pass


class VerificationError(LabError):
    """A computed result contradicts a checked-in catalog or a structural law."""


class Unclassified(VerificationError):
    pass


class StabilizationError(VerificationError):
    pass


class CoFrameViolation(VerificationError):
    pass


class BudgetExceeded(LabError):
    """A search ran out of budget; ``partial`` holds whatever it found."""

    def __init__(self, message: str, partial: Optional[Any] = None, **details: Any):
        super().__init__(message, **details)
        self.partial = partial


__all__ = [
    'LabError',
    'InputError',
    'SizeMismatch',
    'BadRange',
    'NotReflexive',
    'NotAntisymmetric',
    'NotTransitive',
    'NotAPartialOrder',
    'NotAHasseDiagram',
    'UnknownLetter',
    'EmptyWord',
    'ParamMismatch',
    'InvalidParams',
    'NotAClosure',
    'NotAnInterior',
    'NotMonotone',
    'NotDominated',
    'NotPeriodic',
    'InvalidInstance',
    'PreconditionFailed',
    'NotALattice',
    'NotDistributive',
    'ConfigError',
    'CapExceeded',
    'VerificationError',
    'Unclassified',
    'StabilizationError',
    'CoFrameViolation',
    'BudgetExceeded',
]
