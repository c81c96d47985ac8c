"""Error types shared across the package.

Every error deliberately raised by the calculator derives from LoopcalcError
and carries a short machine-readable ``code``.  The CLI and the HTTP service
map these to exit code 1 / status 400; anything else escaping is a bug.
"""


class LoopcalcError(Exception):
    """Base class for all calculator errors."""

    code = "error"

    def to_json(self):
        return {"code": self.code, "message": str(self)}


class UsageError(LoopcalcError):
    """The caller combined operations incorrectly (cap mismatch, bad flags,
    comparison across incomparable classes)."""

    code = "usage"


class DomainError(LoopcalcError):
    """A mathematically invalid input to an operation, e.g. inverting a
    series whose constant term is not a unit."""

    code = "domain"


class ValidationError(LoopcalcError):
    """A spec object violates its invariants."""

    code = "validation"


class UnsupportedExpressionError(LoopcalcError):
    """normal_form met a subexpression outside the supported grammar."""

    code = "unsupported_expression"


class ExcludedCaseError(ValidationError):
    """Input falls in a case the theory explicitly excludes
    (highly connected manifolds with n in {2, 4, 8})."""

    code = "excluded_case"


class OutOfScopeError(ValidationError):
    """Input is meaningful but outside the implemented range
    (e.g. rank below 2 where only rank >= 2 is treated)."""

    code = "out_of_scope"


class HypothesisError(ValidationError):
    """A stated hypothesis of the underlying decomposition fails
    (e.g. configuration spaces need odd ambient dimension)."""

    code = "hypothesis_not_met"


class OracleError(LoopcalcError):
    """An independent verification oracle found an inconsistency.  This is
    never a user error: it means a computation and its cross-check disagree."""

    code = "oracle"
