"""Truncated hypergeometric series and the central convolution sum.

The convolution sum S(n) = sum_k C(2k,k)^2 C(2n-2k,n-k)^2 is computed here
three independent ways (directly, through the 16^n / (-16)^k form, and
through the C(2k,k)^3 C(k,n-k) form); they must agree exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import count
from typing import Iterator, Sequence

from .arith import binomial, central_binomials, pochhammer
from .outcome import CheckOutcome, PreconditionViolated

HALF = Fraction(1, 2)


class ZeroLowerPochhammer(PreconditionViolated):
    """A lower parameter makes some (y)_k vanish within the truncation."""


def _vanishes_by(y: Fraction, truncation: int) -> bool:
    # (y)_k = 0 for some k <= truncation iff y is an integer in (-truncation, 0]
    return y.denominator == 1 and -truncation < y <= 0


@dataclass(frozen=True)
class HypergeometricSpec:
    upper: tuple[Fraction, ...]
    lower: tuple[Fraction, ...]
    argument: Fraction
    truncation: int

    def __init__(self, upper: Sequence, lower: Sequence, argument=1, truncation: int = 0, *, check: bool = True):
        object.__setattr__(self, "upper", tuple(Fraction(x) for x in upper))
        object.__setattr__(self, "lower", tuple(Fraction(y) for y in lower))
        object.__setattr__(self, "argument", Fraction(argument))
        object.__setattr__(self, "truncation", int(truncation))
        if len(self.upper) != len(self.lower) + 1:
            raise ValueError(f"need |upper| = |lower| + 1, got {len(self.upper)} and {len(self.lower)}")
        if self.truncation < 0:
            raise ValueError("truncation must be nonnegative")
        if check:
            for y in self.lower:
                if _vanishes_by(y, self.truncation):
                    raise ZeroLowerPochhammer(f"({y})_k vanishes for some k <= {self.truncation}")


def evaluate_truncated(spec: HypergeometricSpec) -> Fraction:
    """sum_{k<=m} prod (x_i)_k / (prod (y_j)_k k!) z^k, term by term."""
    total = term = Fraction(1)
    z = spec.argument
    for k in range(spec.truncation):
        num = Fraction(1)
        for x in spec.upper:
            num *= x + k
        if num == 0:
            break  # every later term carries the same zero factor
        den = Fraction(k + 1)
        for y in spec.lower:
            den *= y + k
        if den == 0:
            raise ZeroLowerPochhammer(f"lower Pochhammer vanishes at k = {k + 1}")
        term *= num * z / den
        total += term
    return total


def convolution_direct(n: int) -> int:
    c = central_binomials(n + 1)
    return sum((c[k] * c[n - k]) ** 2 for k in range(n + 1))


def convolution_via_id1(n: int) -> Fraction:
    c = central_binomials(n + 1)
    inner = sum(
        Fraction(binomial(n + k, k) * binomial(n, k) * c[k] ** 2, (-16) ** k)
        for k in range(n + 1)
    )
    return 16**n * inner


def convolution_via_sun(n: int) -> int:
    c = central_binomials(n + 1)
    return sum(c[k] ** 3 * binomial(k, n - k) * (-16) ** (n - k) for k in range(n + 1))


def convolution_hyper_spec(n: int) -> HypergeometricSpec:
    """The 4F3 whose value times C(2n,n)^2 is S(n)."""
    return HypergeometricSpec([HALF, HALF, -n, -n], [1, HALF - n, HALF - n], 1, n)


def check_transform(n: int, a, b, c, d, e, f, *, name: str = "transform_4f3", instance=None) -> CheckOutcome:
    """Evaluate both sides of the terminating 4F3 transformation

        4F3[-n, a, b, c; d, e, f | 1]
          = (e-a)_n (f-a)_n / ((e)_n (f)_n) 4F3[-n, a, d-b, d-c; d, a+1-n-e, a+1-n-f | 1]

    for parameters with a + b + c - n + 1 = d + e + f.

    Every lower Pochhammer on either side must stay nonzero up to k = n;
    this is stricter than what the identity itself needs and is enforced
    so that no term is ever silently dropped.
    """
    a, b, c, d, e, f = (Fraction(v) for v in (a, b, c, d, e, f))
    if a + b + c - n + 1 != d + e + f:
        raise PreconditionViolated(f"a+b+c-n+1 = {a + b + c - n + 1} but d+e+f = {d + e + f}")
    try:
        left = HypergeometricSpec([-n, a, b, c], [d, e, f], 1, n)
        right = HypergeometricSpec([-n, a, d - b, d - c], [d, a + 1 - n - e, a + 1 - n - f], 1, n)
    except ZeroLowerPochhammer as exc:
        raise PreconditionViolated(str(exc)) from exc
    den = pochhammer(e, n) * pochhammer(f, n)
    if den == 0:
        raise PreconditionViolated("(e)_n (f)_n = 0")
    prefactor = pochhammer(e - a, n) * pochhammer(f - a, n) / den
    lhs = evaluate_truncated(left)
    rhs = prefactor * evaluate_truncated(right)
    if instance is None:
        instance = (("n", n),)
    return CheckOutcome(name, instance, lhs, rhs, lhs == rhs)


FIXED_POINTS = (
    Fraction(2), Fraction(-1), Fraction(1, 3), Fraction(3, 7), Fraction(5), Fraction(-2, 9),
)


def sample_points() -> Iterator[Fraction]:
    """Deterministic stream of distinct rationals, starting with FIXED_POINTS."""
    seen = set()
    for x in FIXED_POINTS:
        seen.add(x)
        yield x
    for t in count(1):
        for x in (Fraction(t + 5, 2 * t + 1), -Fraction(2 * t + 1, t + 6)):
            if x not in seen:
                seen.add(x)
                yield x


def _chaundy_bullard_rhs(n: int, m: int, x: Fraction) -> Fraction:
    y = 1 - x
    first = sum(binomial(n + k, k) * x**k for k in range(m + 1))
    second = sum(binomial(m + k, k) * y**k for k in range(n + 1))
    return y ** (n + 1) * first + x ** (m + 1) * second


def check_chaundy_bullard(n: int, m: int) -> CheckOutcome:
    """Certify 1 = (1-x)^(n+1) sum_{k<=m} C(n+k,k) x^k + x^(m+1) sum_{k<=n} C(m+k,k) (1-x)^k.

    Both sides are polynomials of degree at most n+m+1, so agreement at
    n+m+2 distinct points proves the identity. The reported rhs is the
    value at the first disagreeing point, or at the last point checked.
    """
    if n < 0 or m < 0:
        raise PreconditionViolated("n and m must be nonnegative")
    rhs = Fraction(1)
    points = sample_points()
    for _ in range(n + m + 2):
        rhs = _chaundy_bullard_rhs(n, m, next(points))
        if rhs != 1:
            break
    return CheckOutcome("chaundy_bullard", (("n", n), ("m", m)), Fraction(1), rhs, rhs == 1)
