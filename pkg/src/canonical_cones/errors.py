class CanonicalConesError(Exception):
    """Base class; ``exit_code`` is what the CLI returns for it."""

    exit_code = 1


class CartanError(CanonicalConesError, ValueError):
    pass


class InvalidWordError(CanonicalConesError, ValueError):
    exit_code = 2


class MoveError(CanonicalConesError, ValueError):
    pass


class VarSetMismatch(CanonicalConesError, ValueError):
    pass


class NotMonomialError(CanonicalConesError, ValueError):
    pass


class NotRegularError(CanonicalConesError, ValueError):
    """A cutting function failed to normalise to a monomial denominator."""


class FrozenVertexError(CanonicalConesError, ValueError):
    pass


class DimensionCapError(CanonicalConesError, ValueError):
    exit_code = 3


class InfeasibleError(CanonicalConesError, ValueError):
    pass


class UnboundedError(CanonicalConesError, ValueError):
    pass
