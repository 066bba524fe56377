"""Exception types shared across the package."""


class RingbenchError(Exception):
    """Base class for all errors raised by this package."""


class InvalidConstructionError(RingbenchError, ValueError):
    """A constructor was given arguments outside its domain (bad order, arity, module)."""


class TableValidationError(RingbenchError, ValueError):
    """Cayley tables violate one or more ring axioms.

    ``violations`` is a list of ``(axiom, witness)`` pairs where ``witness``
    is a tuple of element indices exhibiting the failure (or ``None`` when
    the axiom fails globally, e.g. a missing identity).
    """

    def __init__(self, violations):
        self.violations = list(violations)
        parts = ", ".join(
            f"{axiom} at {witness}" if witness is not None else axiom
            for axiom, witness in self.violations
        )
        super().__init__(f"not a commutative ring with 1 != 0: {parts}")


class RingMismatchError(RingbenchError, ValueError):
    """Two arguments that must live in the same ring do not."""


class ImproperIdealError(RingbenchError, ValueError):
    """An operation requiring a proper ideal received the whole ring."""


class NotIdealError(RingbenchError, ValueError):
    """An element set fails the ideal closure conditions."""


class NotSurjectiveError(RingbenchError, ValueError):
    """Image of an ideal was requested along a non-surjective homomorphism."""


class DegenerateLocalizationError(RingbenchError, ValueError):
    """The multiplicative set contains 0 after closure; the fraction ring would collapse."""


class ResourceLimitError(RingbenchError):
    """A configured size bound (ring order, ideal count) was exceeded."""


class ParseError(RingbenchError, ValueError):
    """Ring/ideal expression text is malformed; ``position`` is a 0-based offset."""

    def __init__(self, message, position):
        self.position = position
        super().__init__(f"{message} (at position {position})")
