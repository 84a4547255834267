"""Euler numbers, Euler polynomials and second-order harmonic numbers."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class EulerTable:
    values: tuple[int, ...]

    @property
    def max_index(self) -> int:
        return len(self.values) - 1

    def __getitem__(self, n: int) -> int:
        return self.values[n]

    def __len__(self) -> int:
        return len(self.values)


@lru_cache(maxsize=8)
def euler_numbers(max_index: int) -> EulerTable:
    """E_0..E_max_index from E_0 = 1 and sum_{k even} C(n,k) E_{n-k} = 0.

    The k = 0 term of the recurrence is E_n itself, so each step solves
    for it directly.
    """
    if max_index < 0:
        raise ValueError("max_index must be nonnegative")
    values = [1]
    row = [1]  # row n of Pascal's triangle, carried forward
    for n in range(1, max_index + 1):
        row = [1] + [row[i] + row[i + 1] for i in range(n - 1)] + [1]
        values.append(-sum(row[k] * values[n - k] for k in range(2, n + 1, 2)))
    return EulerTable(tuple(values))


def euler_polynomial(n: int, x, table: EulerTable | None = None) -> Fraction:
    """E_n(x) = sum_k C(n,k) (E_k / 2^k) (x - 1/2)^(n-k)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if table is None or table.max_index < n:
        table = euler_numbers(n)
    shift = Fraction(x) - HALF
    total = Fraction(0)
    power = Fraction(1)  # shift^(n-k), walking k downward
    for k in range(n, -1, -1):
        if table[k]:
            total += comb(n, k) * Fraction(table[k], 1 << k) * power
        power *= shift
    return total


def harmonic2_prefix(count: int) -> list[Fraction]:
    """[H_0^(2), ..., H_{count-1}^(2)], built incrementally."""
    out = []
    h = Fraction(0)
    for k in range(count):
        if k:
            h += Fraction(1, k * k)
        out.append(h)
    return out


def harmonic2(k: int) -> Fraction:
    if k < 0:
        raise ValueError("k must be nonnegative")
    return harmonic2_prefix(k + 1)[k]
