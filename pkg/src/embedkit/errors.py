"""Exception types shared across the package."""


class EmbedkitError(Exception):
    """Base class for all errors raised by embedkit."""


class InvalidInputError(EmbedkitError):
    """Malformed or out-of-contract input (bad vector length, non-dominant
    weight where dominance is required, unparseable group string, ...)."""


class UnsupportedRankError(EmbedkitError):
    """Operation asked for outside its documented rank limit."""


class OrbitTooLargeError(EmbedkitError):
    """Weyl orbit enumeration exceeded the requested cap."""


class RepresentationTooLargeError(EmbedkitError):
    """Weight multiplicity table would exceed the dimension cap."""


class NotAHeightAlgebraError(EmbedkitError):
    """Monomial set is not the (i, j)-support of any height algebra."""
