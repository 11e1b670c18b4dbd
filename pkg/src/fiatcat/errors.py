class DimensionError(ValueError):
    """Operands live on ground sets of different size."""


class SizeGuardError(ValueError):
    """Input exceeds a desk-scale enumeration guard."""


class OrderError(ValueError):
    """A supplied order is not a partial order, or is not admissible."""


class VerificationError(RuntimeError):
    """An internal structural check failed.

    Raised when a construction that is supposed to hold by theory does not,
    e.g. Eckmann-Hilton fails on End(1), idempotents do not sum to the unit,
    or a composite does not decompose into known classes.
    """


def check_same_n(a, b):
    if a.n != b.n:
        raise DimensionError(f"size mismatch: {a.n} != {b.n}")
