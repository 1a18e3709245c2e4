"""Exception types shared across the package."""


class SimcoresError(Exception):
    """Base class for all errors raised by this package."""


class NonCoprimeError(SimcoresError):
    """A pair (s, t) with gcd(s, t) > 1 was passed where coprimality is required."""

    def __init__(self, s: int, t: int, gcd: int):
        self.s, self.t, self.gcd = s, t, gcd
        super().__init__(
            f"({s}, {t}) must be coprime (common divisor {gcd}); "
            "the counting formula requires gcd(s, t) = 1"
        )


class InfinitePosetError(SimcoresError):
    """The generator set has gcd > 1, so the gap poset is infinite."""

    def __init__(self, generators, gcd: int):
        self.generators = tuple(generators)
        self.gcd = gcd
        super().__init__(
            f"generators {sorted(self.generators)} are not relatively prime "
            f"(all divisible by {gcd}); the gap poset is finite only for gcd 1"
        )


class EnumerationCapError(SimcoresError):
    """An enumeration would exceed the configured cap; nothing is truncated."""

    def __init__(self, what: str, cap: int):
        self.what, self.cap = what, cap
        super().__init__(f"{what} exceeds the cap of {cap}; raise the cap to proceed")


class NotACoreError(SimcoresError):
    """A partition fails the simultaneous-core condition for a generator set."""

    def __init__(self, parts, hook: int, divisor: int):
        self.parts = tuple(parts)
        self.hook, self.divisor = hook, divisor
        super().__init__(
            f"partition {list(self.parts)} has hook length {hook} divisible by {divisor}, "
            f"so it is not a {divisor}-core"
        )


class ExactDivisionError(SimcoresError):
    """An operation that must be exact (zero remainder, integral result) was not."""
