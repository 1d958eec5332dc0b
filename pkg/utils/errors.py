"""
Exception hierarchy and process exit codes for the Coxeter Genus Tool
"""

from typing import Optional


EXIT_OK = 0
EXIT_PARSE = 2
EXIT_CAPABILITY = 3
EXIT_TABLE_MISMATCH = 4
EXIT_VERIFICATION = 5
EXIT_INVARIANT = 6


class GenusError(Exception):
    """Base class for every error raised by the library"""
    exit_code = EXIT_INVARIANT


class StructuralError(GenusError, ValueError):
    """Operands do not fit together (degree mismatch, non-bijective images)"""
    exit_code = EXIT_PARSE


class SpecParseError(GenusError, ValueError):
    """A group spec, cycle string or environment value could not be parsed"""
    exit_code = EXIT_PARSE


class PreconditionError(GenusError, ValueError):
    """A named precondition of an operation does not hold"""
    exit_code = EXIT_CAPABILITY

    def __init__(self, reason: str, message: Optional[str] = None):
        self.reason = reason
        super().__init__(message or reason)


class CapabilityError(GenusError):
    """The request is valid but outside what the engine will attempt"""
    exit_code = EXIT_CAPABILITY


class WitnessFormatError(GenusError, ValueError):
    """A witness file is malformed"""
    exit_code = EXIT_PARSE


class VerificationError(GenusError):
    """A serialized witness failed re-verification"""
    exit_code = EXIT_VERIFICATION


class InvariantViolation(GenusError, AssertionError):
    """An internal invariant failed; always a bug"""
    exit_code = EXIT_INVARIANT
