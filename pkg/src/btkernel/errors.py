class BTKernelError(Exception):
    """Base class for errors raised by btkernel."""


class InvalidRankError(BTKernelError, ValueError):
    pass


class DomainError(BTKernelError, ValueError):
    """An argument lies outside the domain of an operation."""


class ContractViolation(BTKernelError):
    """A documented precondition between arguments does not hold."""


class SpecParseError(BTKernelError, ValueError):
    """A group-specification document does not match the schema."""

    def __init__(self, message, path=()):
        self.path = tuple(path)
        where = "/".join(str(p) for p in self.path) or "<root>"
        super().__init__("%s: %s" % (where, message))


class SpecSemanticError(BTKernelError, ValueError):
    """A well-formed specification describes an invalid group."""

    def __init__(self, message, factor=None, sigma=None):
        self.factor = factor
        self.sigma = sigma
        super().__init__(message)


class ConsistencyError(BTKernelError):
    """Two independent computations of the same quantity disagree."""
