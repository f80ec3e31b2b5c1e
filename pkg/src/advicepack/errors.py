"""Exception hierarchy shared by all modules."""


class AdvicePackError(Exception):
    """Base class for every error raised by this package."""


class OverflowRejected(AdvicePackError):
    """A placement would push a bin above capacity 1."""

    def __init__(self, bin_index, load, size):
        self.bin_index = bin_index
        self.load = load
        self.size = size
        super().__init__(
            f"bin {bin_index} has load {load}; adding {size} exceeds capacity 1"
        )


class InvalidSize(AdvicePackError, ValueError):
    """An item size outside (0, 1] or an unparsable size literal."""


class ValueTooWide(AdvicePackError, ValueError):
    """An integer does not fit in the requested fixed-width field."""


class BudgetExhausted(AdvicePackError):
    """The exact solver hit its node budget before certifying optimality."""

    def __init__(self, lower, upper, witness):
        self.lower = lower
        self.upper = upper
        self.witness = witness
        super().__init__(f"node budget exhausted; optimum in [{lower}, {upper}]")


class ConfigurationExplosion(AdvicePackError):
    """Too many feasible bin configurations to enumerate."""


class LimitExceeded(AdvicePackError):
    """More optimal packings exist than the caller allowed."""


class UnknownSize(AdvicePackError, ValueError):
    """An arriving item is not part of the declared size universe."""


class NoFeasibleBin(AdvicePackError):
    """Pair advice promised a partner bin but none can take the item."""


class OutOfRange(AdvicePackError, ValueError):
    """An item lies outside the size range an algorithm is defined for."""


class InvalidVector(AdvicePackError, ValueError):
    pass


class InvalidLevels(AdvicePackError, ValueError):
    pass


class InvalidParams(AdvicePackError, ValueError):
    pass


class DomainError(AdvicePackError, ValueError):
    pass


class BadParams(AdvicePackError, ValueError):
    pass
