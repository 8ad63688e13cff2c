"""Exception types shared across the package."""


class OG4Error(Exception):
    pass


class CapExceeded(OG4Error):
    """An enumeration grew past its configured cap."""


class NotAHomomorphism(OG4Error):
    pass


class NotMonic(OG4Error):
    pass


class NotCoprime(OG4Error):
    pass


class NotPrime(OG4Error):
    pass


class TooLarge(OG4Error):
    """Exhaustive certification refused because the space is too big."""


class NotFourValent(OG4Error):
    pass


class Inconclusive(OG4Error):
    pass


class NeitherPattern(OG4Error):
    """Double cosets match neither the oriented nor the unoriented pattern."""


class NotInN(OG4Error):
    """A computed element has a nontrivial top component."""


class PreconditionFailed(OG4Error):
    """A construction hypothesis does not hold.

    ``hypothesis`` carries the violated condition as a short string so tests
    and the CLI can match on it.
    """

    def __init__(self, hypothesis, detail=""):
        self.hypothesis = hypothesis
        self.detail = detail
        msg = hypothesis if not detail else f"{hypothesis}: {detail}"
        super().__init__(msg)


class BasicsViolation(AssertionError):
    """A structural assertion about a cyclic quotient failed."""

    def __init__(self, message, counterexample=None):
        super().__init__(message)
        self.counterexample = counterexample
