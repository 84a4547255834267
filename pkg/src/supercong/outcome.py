from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .arith import Residue

Value = Union[int, Fraction, Residue, None]


class PreconditionViolated(ValueError):
    """Inputs fall outside the domain on which a check is claimed."""


@dataclass(frozen=True)
class CheckOutcome:
    """One evaluated instance of an identity or congruence.

    ``instance`` is a tuple of (parameter name, value) pairs, e.g.
    ``(("p", 7), ("k", 3))``; it is what reports render and sort on.
    """

    check: str
    instance: tuple[tuple[str, int], ...]
    lhs: Value
    rhs: Value
    passed: bool
    modulus: str = "exact"
    error: str | None = None

    @property
    def instance_str(self) -> str:
        return ",".join(f"{name}={value}" for name, value in self.instance)

    def sort_key(self):
        return (self.check, tuple(v for _, v in self.instance))
