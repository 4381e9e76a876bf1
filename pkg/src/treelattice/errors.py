"""Exception hierarchy shared by all modules."""


class TreeLatticeError(ValueError):
    pass


class MalformedPermutation(TreeLatticeError):
    pass


class DomainError(TreeLatticeError):
    pass


class ContainmentError(TreeLatticeError):
    pass


class NotSemiregular(TreeLatticeError):
    pass


class InstanceValidationError(TreeLatticeError):
    """Raised by make_instance; ``reason`` names the violated hypothesis."""

    def __init__(self, reason: str, message: str):
        super().__init__(f"{reason}: {message}")
        self.reason = reason


class CapabilityError(TreeLatticeError):
    """Operation needs F regular (or some other unavailable structure)."""


class InvalidElement(TreeLatticeError):
    pass


class InvalidPortrait(InvalidElement):
    def __init__(self, message: str, edge=None):
        super().__init__(message)
        self.edge = edge


class PreconditionError(TreeLatticeError):
    pass


class RadiusError(TreeLatticeError):
    def __init__(self, message: str, required: int | None = None):
        super().__init__(message)
        self.required = required
