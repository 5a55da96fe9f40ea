"""
Exception hierarchy shared by the numerical modules.

Core functions raise these; verifiers catch them and turn them into
``{"ok": False, "error": ...}`` result dicts.
"""


class VerificationError(Exception):
    """Base class for every error raised by the core modules."""


class ContractError(VerificationError):
    """A precondition between operands or an internal cross-check failed."""


class DomainError(VerificationError, ValueError):
    """Input lies outside the mathematical domain of the operation."""


class SingularInputError(DomainError):
    """Input hits a singular point of the map (for example z = ±i for arctan)."""


class BracketError(VerificationError, ValueError):
    """Root bracket does not contain a sign change."""


class UnknownClassError(VerificationError, KeyError):
    """Requested class name is not in the catalog."""
