"""Registry of congruences modulo p^e and the engine that checks them.

Every sum is evaluated in Z/p^5Z: p^5 is the largest modulus any check
needs, and reducing mod p^5 first then mod p^e gives the same residue as
reducing mod p^e directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import isqrt
from typing import Callable

from . import kernels
from .arith import PrimePower, Residue, is_prime, reduce_rational
from .outcome import CheckOutcome, PreconditionViolated
from .sequences import EulerTable, euler_numbers, euler_polynomial

TOP_EXPONENT = 5


class NotOneModFour(ValueError):
    pass


@dataclass(frozen=True)
class TwoSquares:
    p: int
    x: int
    y: int


def two_squares(p: int) -> TwoSquares:
    """p = x^2 + y^2 with x = 1 (mod 4) and y even, y > 0."""
    if p % 4 != 1:
        raise NotOneModFour(f"{p} is not 1 mod 4")
    for a in range(1, isqrt(p) + 1, 2):
        rest = p - a * a
        b = isqrt(rest)
        if b * b == rest and b > 0 and b % 2 == 0:
            x = a if a % 4 == 1 else -a
            return TwoSquares(p, x, b)
    raise ValueError(f"{p} is not a sum of two squares")


def _is_power_of_two(n: int) -> bool:
    return n > 0 and n & (n - 1) == 0


class PrimeContext:
    """Per-prime residues shared by all checks, computed lazily mod p^5."""

    def __init__(self, p: int, euler: EulerTable | None = None):
        if p < 3 or not is_prime(p):
            raise PreconditionViolated(f"{p} is not an odd prime")
        self.p = p
        self.top = PrimePower(p, TOP_EXPONENT)
        self.m = self.top.m
        self.half = (p - 1) // 2
        self.sign = -1 if self.half % 2 else 1
        if euler is None or euler.max_index < p - 3:
            euler = euler_numbers(p - 3)
        self._euler = euler

    def modulus(self, e: int) -> PrimePower:
        return PrimePower(self.p, e)

    def reduce(self, r) -> int:
        return reduce_rational(r, self.top).value

    @cached_property
    def central(self) -> list[int]:
        return kernels.central_binomials_mod(self.p, TOP_EXPONENT, self.p)

    @cached_property
    def conv(self) -> list[int]:
        return kernels.convolution_mod(self.p, TOP_EXPONENT, self.p)

    @cached_property
    def harmonic2(self) -> list[int]:
        """H_k^(2) mod p^5 for k < p, accumulated as a prefix table."""
        m, acc, out = self.m, 0, [0]
        for j in range(1, self.p):
            acc = (acc + pow(j * j, -1, m)) % m
            out.append(acc)
        return out

    @cached_property
    def binomial_products(self) -> list[int]:
        """C(p-1,k) C(p+k,k) mod p^5 for k < p, via exact integer recurrences."""
        p, out = self.p, []
        lower = upper = 1  # C(p-1, k), C(p+k, k)
        for k in range(p):
            out.append(lower * upper % self.m)
            lower = lower * (p - 1 - k) // (k + 1)
            upper = upper * (p + k + 1) // (k + 1)
        return out

    @cached_property
    def euler(self) -> int:
        return self._euler[self.p - 3]

    @cached_property
    def euler_quarter(self) -> int:
        """E_{p-3}(1/4) in the residue ring."""
        value = euler_polynomial(self.p - 3, Fraction(1, 4), self._euler)
        assert _is_power_of_two(value.denominator), value
        return self.reduce(value)

    @cached_property
    def two_squares(self) -> TwoSquares:
        return two_squares(self.p)

    def inv_powers(self, base: int) -> list[int]:
        """[base^(-k) mod p^5 for 0 <= k < p]."""
        cache = self.__dict__.setdefault("_inv_powers", {})
        if base not in cache:
            inv = pow(base, -1, self.m)
            out, acc = [], 1
            for _ in range(self.p):
                out.append(acc)
                acc = acc * inv % self.m
            cache[base] = out
        return cache[base]

    # -- recurring sums -------------------------------------------------

    def central_sum(self, stop: int, weight: Callable[[int], int], base: int, power: int = 2) -> int:
        """sum_{k<stop} weight(k) C(2k,k)^power / base^k  (mod p^5)."""
        c, inv, m = self.central, self.inv_powers(base), self.m
        return sum(weight(k) * pow(c[k], power, m) * inv[k] for k in range(stop)) % m

    def conv_sum(self, weight: Callable[[int], int], base: int) -> int:
        """sum_{n<p} weight(n) S(n) / base^n  (mod p^5)."""
        s, inv, m = self.conv, self.inv_powers(base), self.m
        return sum(weight(n) * s[n] * inv[n] for n in range(self.p)) % m

    @cached_property
    def rv_full(self) -> int:
        return self.central_sum(self.p, lambda k: 1, 16)

    @cached_property
    def rv_half(self) -> int:
        return self.central_sum(self.half + 1, lambda k: 1, 16)

    @cached_property
    def cubic_full(self) -> int:
        return self.central_sum(self.p, lambda k: 3 * k + 1, -8, 3)

    @cached_property
    def cubic_half(self) -> int:
        return self.central_sum(self.half + 1, lambda k: 3 * k + 1, -8, 3)

    @cached_property
    def sum8(self) -> int:
        return self.conv_sum(lambda n: n + 1, 8)

    @cached_property
    def sum16(self) -> int:
        return self.conv_sum(lambda n: 2 * n + 1, -16)

    def harmonic_sum(self, stop: int) -> int:
        h = self.harmonic2
        return self.central_sum(stop, lambda k: h[k], 16)


Side = Callable[..., "int | Fraction"]


@dataclass(frozen=True)
class CongruenceSpec:
    """lhs(ctx[, k]) = rhs(ctx[, k]) modulo p^exponent.

    With ``inner`` set the congruence is quantified over k in inner(p) and
    each k is a separate instance.
    """

    id: str
    exponent: int
    lhs: Side
    rhs: Side
    prime_filter: Callable[[int], bool] = lambda p: p > 3
    inner: Callable[[int], range] | None = None
    description: str = ""

    def instances(self, p: int) -> list[tuple[tuple[str, int], ...]]:
        if self.inner is None:
            return [(("p", p),)]
        return [(("p", p), ("k", k)) for k in self.inner(p)]


def _side(value, ctx: PrimeContext, mod: PrimePower) -> Residue:
    if isinstance(value, Fraction):
        if not _is_power_of_two(value.denominator):
            raise PreconditionViolated(f"unexpected denominator {value.denominator}")
        value = ctx.reduce(value)
    return Residue(value, mod)


def run_congruence(spec: CongruenceSpec, p: int, ctx: PrimeContext | None = None, k: int | None = None) -> CheckOutcome:
    if not spec.prime_filter(p):
        raise PreconditionViolated(f"{spec.id} does not apply to p = {p}")
    if ctx is None:
        ctx = PrimeContext(p)
    mod = ctx.modulus(spec.exponent)
    args = (ctx,) if spec.inner is None else (ctx, k)
    if spec.inner is not None and k not in spec.inner(p):
        raise PreconditionViolated(f"k = {k} outside the range for {spec.id}")
    lhs = _side(spec.lhs(*args), ctx, mod)
    rhs = _side(spec.rhs(*args), ctx, mod)
    instance = (("p", p),) if k is None else (("p", p), ("k", k))
    return CheckOutcome(spec.id, instance, lhs, rhs, lhs == rhs, str(mod))


def run_congruence_all(spec: CongruenceSpec, p: int, ctx: PrimeContext | None = None) -> list[CheckOutcome]:
    """Every instance of spec at p; errors become failed outcomes."""
    out = []
    for instance in spec.instances(p):
        k = instance[1][1] if len(instance) > 1 else None
        try:
            if ctx is None:
                ctx = PrimeContext(p)
            out.append(run_congruence(spec, p, ctx, k))
        except Exception as exc:  # noqa: BLE001 - reported, never swallowed
            out.append(CheckOutcome(spec.id, instance, None, None, False, f"{p}^{spec.exponent}",
                                    error=f"{type(exc).__name__}: {exc}"))
    return out


def _pbinom(ctx: PrimeContext, k: int) -> int:
    return ctx.binomial_products[k]


def _pbinom_rhs(ctx: PrimeContext, k: int) -> int:
    return (-1) ** k * (1 - ctx.p**2 * ctx.harmonic2[k])


def _key1_rhs(ctx: PrimeContext) -> int:
    h, p = ctx.harmonic2, ctx.p
    return p * ctx.central_sum(p, lambda k: 1 - p * p * h[k], 16)


def _sun_x(ctx: PrimeContext) -> int:
    return (-1) ** ((ctx.p - 1) // 4) * ctx.two_squares.x


def _one_mod_four(p: int) -> bool:
    return p % 4 == 1


def _registry() -> dict[str, CongruenceSpec]:
    specs = [
        CongruenceSpec("rv", 2, lambda c: c.rv_full, lambda c: c.sign,
                       prime_filter=lambda p: p > 2,
                       description="sum_{k<p} C(2k,k)^2/16^k = (-1)^((p-1)/2)"),
        CongruenceSpec("rv_half_equiv", 2, lambda c: c.rv_full, lambda c: c.rv_half,
                       description="full-range and half-range sums of C(2k,k)^2/16^k agree"),
        CongruenceSpec("sun_half", 3, lambda c: c.rv_half, lambda c: c.sign + c.p**2 * c.euler,
                       description="sum_{k<=(p-1)/2} C(2k,k)^2/16^k = (-1)^((p-1)/2) + p^2 E_{p-3}"),
        CongruenceSpec("sun_tail", 3, lambda c: c.rv_full - c.rv_half, lambda c: -2 * c.p**2 * c.euler,
                       description="sum_{(p+1)/2<=k<p} C(2k,k)^2/16^k = -2 p^2 E_{p-3}"),
        CongruenceSpec("cxh", 4, lambda c: c.cubic_full, lambda c: c.sign * c.p + c.p**3 * c.euler,
                       description="sum_{k<p} (3k+1) C(2k,k)^3/(-8)^k = (-1)^((p-1)/2) p + p^3 E_{p-3}"),
        CongruenceSpec("mao_half", 4, lambda c: c.cubic_half,
                       lambda c: c.sign * c.p + Fraction((-1) ** ((c.p**2 - 1) // 8) * c.p**3, 4) * c.euler_quarter,
                       description="half-range (3k+1) C(2k,k)^3/(-8)^k with E_{p-3}(1/4)"),
        CongruenceSpec("sun_x_8", 2, lambda c: c.central_sum(c.half + 1, lambda k: k + 1, 8), _sun_x,
                       prime_filter=_one_mod_four,
                       description="sum_{k<=(p-1)/2} (k+1) C(2k,k)^2/8^k = (-1)^((p-1)/4) x"),
        CongruenceSpec("sun_x_16", 2, lambda c: c.central_sum(c.half + 1, lambda k: 2 * k + 1, -16), _sun_x,
                       prime_filter=_one_mod_four,
                       description="sum_{k<=(p-1)/2} (2k+1) C(2k,k)^2/(-16)^k = (-1)^((p-1)/4) x"),
        CongruenceSpec("sun8_p3", 3, lambda c: c.sum8, lambda c: c.sign * c.p,
                       description="sum_{n<p} (n+1) S(n)/8^n = (-1)^((p-1)/2) p"),
        CongruenceSpec("sun16_p3", 3, lambda c: c.sum16, lambda c: c.sign * c.p,
                       description="sum_{n<p} (2n+1) S(n)/(-16)^n = (-1)^((p-1)/2) p"),
        CongruenceSpec("den8", 4, lambda c: c.sum8, lambda c: c.sign * c.p + 5 * c.p**3 * c.euler,
                       description="sum_{n<p} (n+1) S(n)/8^n = (-1)^((p-1)/2) p + 5 p^3 E_{p-3}"),
        CongruenceSpec("den16", 4, lambda c: c.sum16, lambda c: c.sign * c.p + 3 * c.p**3 * c.euler,
                       description="sum_{n<p} (2n+1) S(n)/(-16)^n = (-1)^((p-1)/2) p + 3 p^3 E_{p-3}"),
        CongruenceSpec("mao_cao_32", 4, lambda c: c.conv_sum(lambda n: n, 32), lambda c: -2 * c.p**3 * c.euler,
                       description="sum_{n<p} n S(n)/32^n = -2 p^3 E_{p-3}"),
        CongruenceSpec("suncon3_half", 1, lambda c: c.harmonic_sum(c.half + 1), lambda c: -4 * c.euler,
                       description="sum_{k<=(p-1)/2} C(2k,k)^2 H_k^(2)/16^k = -4 E_{p-3}"),
        CongruenceSpec("suncon3_full", 1, lambda c: c.harmonic_sum(c.p), lambda c: -4 * c.euler,
                       description="sum_{k<p} C(2k,k)^2 H_k^(2)/16^k = -4 E_{p-3}"),
        CongruenceSpec("prod_binom", 4, _pbinom, _pbinom_rhs, inner=range,
                       description="C(p-1,k) C(p+k,k) = (-1)^k (1 - p^2 H_k^(2)) for each 0 <= k < p"),
        CongruenceSpec("key1_mod_p5", 5, lambda c: c.sum16, _key1_rhs,
                       description="sum_{n<p} (2n+1) S(n)/(-16)^n = p sum_{k<p} C(2k,k)^2 (1 - p^2 H_k^(2))/16^k"),
        CongruenceSpec("key_star", 4, lambda c: c.sum8, lambda c: 2 * c.sum16 - c.cubic_full,
                       description="A = 2B - C linking the 8^n, (-16)^n and (3k+1) sums"),
    ]
    return {s.id: s for s in specs}


CONGRUENCES: dict[str, CongruenceSpec] = _registry()
