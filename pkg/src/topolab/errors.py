"""Error vocabulary shared across the package."""


class TopolabError(Exception):
    """Base class for all errors raised by this package."""


class GroundTooLarge(TopolabError):
    """Ground set exceeds the 32-point bit-vector limit (or an enumeration cap)."""


class NotATopology(TopolabError):
    """Subset family fails a topology axiom; carries the offending masks."""

    def __init__(self, message: str, witness: tuple[int, ...] = ()):
        super().__init__(message)
        self.witness = witness


class BudgetExceeded(TopolabError):
    """A configured search or enumeration budget was exceeded."""


class CoverEnumerationBudgetExceeded(BudgetExceeded):
    """Literal cover enumeration would exceed the configured bound."""


class NotZRepresentable(TopolabError):
    """Subset is not a preimage of a codomain open under any continuous map."""


class NotOpen(TopolabError):
    """Subset is not open in the relevant space."""


class MismatchedBase(TopolabError):
    """Hyperspace and map set disagree on the underlying domain space."""


class MismatchedGround(TopolabError):
    """Operands are defined over different grounds and cannot be compared."""


class AxiomsViolated(TopolabError):
    """A computed qualifying family fails the topology axioms.

    Reported as a finding, never repaired silently.
    """

    def __init__(self, message: str, witness: tuple = ()):
        super().__init__(message)
        self.witness = witness


class UnknownQuestion(TopolabError):
    """Question id is not in the registry."""
