"""Exception types shared across the package."""


class RegobjError(Exception):
    pass


class BadSpec(RegobjError, ValueError):
    """Malformed object, morphism, ring or matrix description."""


class WrongRing(RegobjError, ValueError):
    pass


class WrongBase(WrongRing):
    pass


class ShapeMismatch(RegobjError, ValueError):
    pass


class MixedVariant(RegobjError, ValueError):
    pass


class NoInverse(RegobjError, ZeroDivisionError):
    pass


class NoSolution(RegobjError, ValueError):
    pass


class NotMono(RegobjError, ValueError):
    pass


class NotEpi(RegobjError, ValueError):
    pass


class NotCentral(RegobjError, ValueError):
    pass


class NotFinite(RegobjError, ValueError):
    pass


class EmptyDomain(RegobjError, ValueError):
    pass


class InfiniteHom(NotFinite):
    pass


class TooLarge(RegobjError):
    """An enumeration would exceed its budget.

    ``size`` is the cardinality that was computed, ``budget`` the limit.
    """

    def __init__(self, what, size, budget):
        self.what = what
        self.size = size
        self.budget = budget
        super().__init__(f"{what}: {size} exceeds budget {budget}")
