"""Exception hierarchy shared across the package."""


class CarbonMarketError(Exception):
    """Base class for all package errors."""


class MalformedProgramError(CarbonMarketError):
    """An LP was built with inconsistent dimensions or bounds (caller bug)."""


class NumericalFailureError(CarbonMarketError):
    """The solver exceeded its pivot budget or produced an unverifiable basis."""


class InfeasibleAfterPinError(CarbonMarketError):
    """Lexicographic re-solve became infeasible after pinning the primary objective."""


class DisconnectedNetworkError(CarbonMarketError):
    """The bus graph is not connected."""


class SingularMatrixError(CarbonMarketError):
    """A reduced susceptance or sharing system could not be factorized."""


class CaseError(CarbonMarketError):
    """Base class for case-file problems."""


class CaseParseError(CaseError):
    """The case file is not valid JSON or violates the schema."""


class CaseValidationError(CaseError):
    """The parsed case violates a model invariant; message names the field."""


class MechanismError(CarbonMarketError):
    """The pricing mechanism could not complete (tax-ratio search failures)."""


class NoBalancingRootError(MechanismError):
    """The mixing equation has no verifiable root in the unit interval."""
