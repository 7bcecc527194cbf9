"""Exception hierarchy for the graded near-ring toolkit.

Every error carries the process exit code the CLI should use and, where one
exists, a witness tuple of element/grade indices that pins the failure down.
"""
from typing import Optional, Tuple

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_MALFORMED = 2
EXIT_BUDGET = 3


class GradedPrimeError(Exception):
    """Base class for all toolkit errors"""
    exit_code = EXIT_FAILED

    def __init__(self, message: str, witness: Optional[Tuple] = None):
        super().__init__(message)
        self.witness = witness

    def __str__(self):
        base = super().__str__()
        if self.witness is None:
            return base
        return f"{base} (witness: {', '.join(str(w) for w in self.witness)})"


# --- Validation failures ---
class ValidationError(GradedPrimeError):
    """A table, grading or map failed an axiom"""


class MalformedTable(ValidationError):
    exit_code = EXIT_MALFORMED


class BadIdentity(ValidationError):
    pass


class NotAssociative(ValidationError):
    pass


class AddNotGroup(ValidationError):
    pass


class MulNotAssociative(ValidationError):
    pass


class NotRightDistributive(ValidationError):
    pass


class ComponentNotNormal(ValidationError):
    pass


class DecompositionNotUnique(ValidationError):
    pass


class DecompositionNotTotal(ValidationError):
    pass


class ComponentsDontCommute(ValidationError):
    pass


class NotMultiplicative(ValidationError):
    pass


class NotAdditive(ValidationError):
    pass


class NotMultiplicativeHom(ValidationError):
    pass


class NotAnIdeal(ValidationError):
    pass


class MonoidMismatch(ValidationError):
    pass


class OrderCapExceeded(ValidationError):
    exit_code = EXIT_MALFORMED


class QuotientGradingInvalid(ValidationError):
    pass


class ImageNotIdeal(ValidationError):
    pass


# --- Precondition failures ---
class PrimalityPreconditionError(GradedPrimeError):
    """The ideal handed to a primality check is not admissible"""
    exit_code = EXIT_MALFORMED


class NotProper(PrimalityPreconditionError):
    pass


class NotGraded(PrimalityPreconditionError):
    pass


# --- Resource and input failures ---
class EnumerationBudgetExceeded(GradedPrimeError):
    exit_code = EXIT_BUDGET


class DocumentError(GradedPrimeError):
    exit_code = EXIT_MALFORMED


class UnknownStructure(GradedPrimeError):
    exit_code = EXIT_MALFORMED


class UnknownTheoremId(GradedPrimeError):
    exit_code = EXIT_MALFORMED
