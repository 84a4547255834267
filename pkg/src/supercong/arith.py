"""Exact integer/rational arithmetic and residue rings modulo prime powers.

Integers are Python ``int`` and rationals are :class:`fractions.Fraction`;
both are unbounded and ``Fraction`` is always stored in lowest terms with a
positive denominator.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from math import comb, isqrt


class NotInvertible(ArithmeticError):
    """Raised when an element has no inverse modulo a prime power."""


def binomial(x: int, n: int) -> int:
    """Generalized binomial coefficient x(x-1)...(x-n+1)/n!.

    The upper index may be any integer; a negative lower index gives 0.
    """
    if n < 0:
        return 0
    if x >= 0:
        return comb(x, n) if x >= n else 0
    # C(-k, n) = (-1)^n C(n+k-1, n)
    return (-1) ** n * comb(n - x - 1, n)


def factorial(n: int) -> int:
    if n < 0:
        raise ValueError("factorial of a negative integer")
    out = 1
    for j in range(2, n + 1):
        out *= j
    return out


def pochhammer(x, k: int) -> Fraction:
    """Rising factorial (x)_k = x(x+1)...(x+k-1), with (x)_0 = 1."""
    if k < 0:
        raise ValueError("pochhammer index must be nonnegative")
    x = Fraction(x)
    out = Fraction(1)
    for j in range(k):
        out *= x + j
    return out


# Shared memo for C(2k, k); each worker process gets its own copy.
_central: list[int] = [1]
_central_lock = threading.Lock()


def central_binomial(k: int) -> int:
    """C(2k, k), memoized up to the largest index requested so far."""
    if k < 0:
        return 0
    if k < len(_central):
        return _central[k]
    with _central_lock:
        j = len(_central)
        c = _central[-1]
        while j <= k:
            c = c * (2 * j) * (2 * j - 1) // (j * j)
            _central.append(c)
            j += 1
        return _central[k]


def central_binomials(count: int) -> list[int]:
    """The list [C(0,0), C(2,1), ..., C(2(count-1), count-1)]."""
    if count <= 0:
        return []
    central_binomial(count - 1)
    return _central[:count]


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for every n < 3.3e24."""
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
    for q in small:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_between(lo: int, hi: int) -> list[int]:
    """All primes in [lo, hi], ascending (segmented sieve)."""
    if lo > hi:
        raise ValueError(f"empty range: {lo} > {hi}")
    lo = max(lo, 2)
    if hi < lo:
        return []
    root = isqrt(hi)
    base = bytearray([1]) * (root + 1)
    base[0] = base[1] = 0
    for q in range(2, isqrt(root) + 1):
        if base[q]:
            base[q * q :: q] = bytearray(len(base[q * q :: q]))
    seg = bytearray([1]) * (hi - lo + 1)
    for q in range(2, root + 1):
        if not base[q]:
            continue
        start = max(q * q, (lo + q - 1) // q * q)
        seg[start - lo :: q] = bytearray(len(seg[start - lo :: q]))
    return [lo + i for i, flag in enumerate(seg) if flag]


@dataclass(frozen=True)
class PrimePower:
    p: int
    e: int

    def __post_init__(self):
        if self.e < 1:
            raise ValueError(f"exponent must be >= 1, got {self.e}")
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    @property
    def m(self) -> int:
        return self.p**self.e

    def __str__(self) -> str:
        return f"{self.p}^{self.e}"


@dataclass(frozen=True)
class Residue:
    """Canonical representative in [0, p^e)."""

    value: int
    modulus: PrimePower

    def __post_init__(self):
        object.__setattr__(self, "value", self.value % self.modulus.m)

    @property
    def signed(self) -> int:
        """Representative in (-m/2, m/2]."""
        m = self.modulus.m
        return self.value - m if 2 * self.value > m else self.value

    def _coerce(self, other) -> int:
        if isinstance(other, Residue):
            if other.modulus != self.modulus:
                raise ValueError(f"modulus mismatch: {self.modulus} vs {other.modulus}")
            return other.value
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            return reduce_rational(other, self.modulus).value
        return NotImplemented

    def __add__(self, other):
        v = self._coerce(other)
        return NotImplemented if v is NotImplemented else Residue(self.value + v, self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        return NotImplemented if v is NotImplemented else Residue(self.value - v, self.modulus)

    def __rsub__(self, other):
        v = self._coerce(other)
        return NotImplemented if v is NotImplemented else Residue(v - self.value, self.modulus)

    def __mul__(self, other):
        v = self._coerce(other)
        return NotImplemented if v is NotImplemented else Residue(self.value * v, self.modulus)

    __rmul__ = __mul__

    def __neg__(self):
        return Residue(-self.value, self.modulus)

    def __eq__(self, other):
        if isinstance(other, Residue):
            return self.modulus == other.modulus and self.value == other.value
        if isinstance(other, int):
            return (self.value - other) % self.modulus.m == 0
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.modulus))

    def __str__(self) -> str:
        return f"{self.value} (mod {self.modulus})"


def mod_inverse(a: int, m: PrimePower) -> Residue:
    if a % m.p == 0:
        raise NotInvertible(f"{a} is divisible by {m.p}")
    return Residue(pow(a, -1, m.m), m)


def reduce_rational(r, m: PrimePower) -> Residue:
    """Image of a rational with p-free denominator in Z/p^eZ."""
    r = Fraction(r)
    if r.denominator % m.p == 0:
        raise NotInvertible(f"denominator of {r} is divisible by {m.p}")
    return Residue(r.numerator * pow(r.denominator, -1, m.m), m)
