"""Exception taxonomy, shared by the library and the command line front end."""


class TwistspunError(Exception):
    """Base class for all package errors."""


class RingMismatchError(TwistspunError):
    """Operands live over different prime fields."""


class UndeclaredGeneratorError(TwistspunError):
    """A word mentions a generator the owning DGA does not declare."""


class InvalidPointError(TwistspunError):
    """Coefficient evaluation at a forbidden point (zero mu or lambda)."""


class ValidationError(TwistspunError):
    """A diagram, DGA or file violates one of its declared invariants."""


class InternalConsistencyError(TwistspunError):
    """A constructor produced an object failing its hard postcondition (d^2 != 0 etc.)."""


class InvalidLoopError(TwistspunError):
    """The supplied endomorphism is not a valid unital DGA morphism."""


class IncompatibleAugmentationsError(TwistspunError):
    """Two augmentations disagree on field or coefficient evaluation point."""


class NotInRegimeError(TwistspunError):
    """Inventories violate the short-second-factor hypotheses of the product table."""


class ResourceBoundError(TwistspunError):
    """A search exceeded its configured bound; raising instead of truncating."""


class FormatError(TwistspunError):
    """Malformed or wrongly versioned file / window input."""


class UnsupportedError(TwistspunError):
    """Requested a computation outside the supported regime (e.g. r = 0)."""
