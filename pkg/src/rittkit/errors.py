"""Exception hierarchy shared by all rittkit modules."""


class RittKitError(Exception):
    """Base class for all rittkit errors."""


class FieldMismatchError(RittKitError):
    """Operands live in different coefficient fields."""


class ParseError(RittKitError):
    """Malformed surface syntax; carries the offending position."""

    def __init__(self, message, position=None):
        super().__init__(message)
        self.position = position


class FieldExtensionRequiredError(RittKitError):
    """A solution exists only after adjoining a root to the current field.

    `equation` is a human-readable description of the irreducible condition
    that blocked the in-field search; `hint_order` is a cyclotomic order m
    such that Q(zeta_m) plausibly contains the missing root, when one can
    be suggested.
    """

    def __init__(self, message, equation=None, hint_order=None):
        super().__init__(message)
        self.equation = equation
        self.hint_order = hint_order


class ResourceCapError(RittKitError):
    """A configured cap (degree, iteration, height) was exceeded."""


class HypothesisViolationError(RittKitError):
    """The caller-supplied data does not satisfy an operation's premise."""


class BadReductionError(RittKitError):
    """Mod-p reduction rejected; names the violated good-reduction condition."""


class CollapsedImageError(RittKitError):
    """Curve pushforward degenerated to a point (no curve to return)."""
