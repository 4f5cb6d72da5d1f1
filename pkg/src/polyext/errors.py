"""Exception hierarchy shared by every module."""


class PolyextError(Exception):
    pass


class InputError(PolyextError, ValueError):
    """Malformed or out-of-contract input."""


class UnsupportedError(PolyextError):
    """Operation not defined for this kind of object (e.g. vertices of a cone)."""


class CapExceeded(PolyextError):
    """A configured resource limit was hit."""


class StructuralError(PolyextError):
    """An internal invariant failed (d^2 != 0, a cycle in a quiver, ...)."""
