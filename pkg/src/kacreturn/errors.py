"""Exception hierarchy.

Every error raised by the library derives from :class:`KacError`, which is a
``ValueError``. Errors caused by input that fails a structural check
(weights, bijectivity, interval data) also derive from :class:`ValidationError`
so callers such as the command line can treat them uniformly.
"""


class KacError(ValueError):
    pass


class ValidationError(KacError):
    pass


class ParseError(KacError):
    """Malformed JSON document or rational literal."""


class EmptySpace(ValidationError):
    pass


class NegativeWeight(ValidationError):
    pass


class SpaceMismatch(KacError):
    """Operands are bound to spaces of different sizes."""


class IndexOutOfRange(KacError):
    pass


class NotBijective(ValidationError):
    pass


class NotMeasurePreserving(ValidationError):
    pass


class BadParam(ValidationError):
    pass


class NotInSet(KacError):
    """Return time requested for a point outside the set."""


class EmptySet(KacError):
    pass


class BadPermutation(ValidationError):
    pass


class NonpositiveLength(ValidationError):
    pass


class OutOfDomain(KacError):
    pass
