from enum import IntEnum, StrEnum


class OutputFormat(StrEnum):
    TEXT = "text"
    JSON = "json"
    CSV = "csv"


class Ordering(IntEnum):
    """Result of a three-way comparison."""

    LESS = -1
    EQUAL = 0
    GREATER = 1

    @classmethod
    def of(cls, a, b) -> "Ordering":
        if a < b:
            return cls.LESS
        if a > b:
            return cls.GREATER
        return cls.EQUAL

    def __neg__(self) -> "Ordering":
        return Ordering(-self.value)


class SetCase(StrEnum):
    """Which branch of the colon-quotient formula applies to a generator."""

    MAXIMAL = "maximal"
    FLAT = "flat"  # d_t equals d_{i0}
    SPLIT = "split"  # d_t below d_{i0}


class Suite(StrEnum):
    GENERATORS = "generators"
    SDEG = "sdeg"
    SET_SIZES = "set_sizes"
    SDEFECT = "sdefect"
    BETTI = "betti"
