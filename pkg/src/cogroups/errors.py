"""Shared exception types."""


class CogroupsError(Exception):
    """Base class for all package errors."""


class DegreeMismatch(CogroupsError, ValueError):
    """Two permutations with different degrees were combined."""


class CapExceeded(CogroupsError, RuntimeError):
    """An enumeration was refused because the group order exceeds the cap.

    Callers may retry with a larger ElementCap or abort.
    """

    def __init__(self, order, cap):
        super().__init__(f"group order {order} exceeds element cap {cap}")
        self.order = order
        self.cap = cap


class SpecError(CogroupsError, ValueError):
    """A group-spec string was rejected."""


class SpecSyntaxError(SpecError):
    """Malformed spec text; ``position`` is the 0-based offset of the error."""

    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class SpecParameterError(SpecError):
    """Spec parsed but its parameters are invalid (e.g. bad semidirect action)."""


class NotNormalError(CogroupsError, ValueError):
    """A subgroup passed where a normal subgroup is required."""


class NotSubgroupError(CogroupsError, ValueError):
    """An element or group does not lie in the claimed ambient group."""
