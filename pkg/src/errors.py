"""Exception types shared by the enumeration packages."""
from __future__ import annotations


class GuardError(ValueError):
    """An input exceeds a configured feasibility guard."""

    def __init__(self, guard: str, value: int, limit: int, hint: str | None = None) -> None:
        self.guard = guard
        self.value = value
        self.limit = limit
        message = f"{guard} exceeded: got {value}, limit is {limit}"
        if hint:
            message = f"{message}. {hint}"
        super().__init__(message)


class ConsistencyError(RuntimeError):
    """An exact identity that must hold did not."""


class IntegralityError(ConsistencyError):
    """A group average produced a non-integer coefficient."""

    def __init__(self, degree: int, value: object, divisor: int) -> None:
        self.degree = degree
        self.value = value
        self.divisor = divisor
        super().__init__(
            f"coefficient of z^{degree} is {value} after division by {divisor}; "
            f"expected an integer"
        )
