"""
Exceptions raised by the lattice kernels and file readers
"""


class WeightLatError(Exception):
    """Base class for every toolkit error"""


class InputError(WeightLatError, ValueError):
    """Malformed input file or invalid argument value"""


class PosetAxiomError(InputError):
    """An explicit relation is not reflexive, antisymmetric and transitive"""


class FamilyMismatchError(InputError):
    """A weight function is bound to a different family"""


class JoinUndefinedError(WeightLatError):
    """Two elements of an explicit family have no least upper bound"""

    def __init__(self, a: int, b: int):
        super().__init__(f"no join defined for elements {a} and {b}")
        self.a = a
        self.b = b


class GuardExceededError(WeightLatError):
    """An enumeration would exceed its configured size guard"""

    def __init__(self, name: str, size: int, limit: int):
        super().__init__(
            f"{name} guard exceeded: size {size} > limit {limit} "
            f"(use --guard-override or WEIGHTLAT_GUARD)"
        )
        self.name = name
        self.size = size
        self.limit = limit


class HypothesisViolatedError(WeightLatError):
    """The sandwich hypothesis w1 <= cover_closure(w2) fails at ``element``"""

    def __init__(self, element: int, lower: float, closure: float):
        super().__init__(
            f"sandwich hypothesis violated at element {element}: w1 = {lower!r} > closure = {closure!r}"
        )
        self.element = element
        self.lower = lower
        self.closure = closure
