"""Registry of exact binomial identities, checked over the rationals."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import ceil
from typing import Callable, Iterable

from .arith import binomial, central_binomial, central_binomials, pochhammer
from .hypergeo import (
    HALF,
    HypergeometricSpec,
    check_chaundy_bullard,
    check_transform,
    convolution_direct,
    convolution_hyper_spec,
    convolution_via_id1,
    convolution_via_sun,
    evaluate_truncated,
)
from .outcome import CheckOutcome

DEFAULT_MAX_N = 60


@dataclass(frozen=True)
class IdentitySpec:
    """lhs(*args) == rhs(*args) exactly for every instance in domain(max_n).

    ``base_bound`` is the largest outer parameter at the default max_n;
    other max_n values scale it proportionally. ``summary_by`` names the
    parameter whose value groups instances into one report record.
    When ``check`` is given it produces both sides itself and lhs/rhs are
    unused.
    """

    id: str
    params: tuple[str, ...]
    lhs: Callable[..., "int | Fraction"] | None
    rhs: Callable[..., "int | Fraction"] | None
    domain: Callable[[int], Iterable[tuple[int, ...]]]
    base_bound: int = DEFAULT_MAX_N
    summary_by: str | None = None
    description: str = ""
    check: Callable[..., CheckOutcome] | None = None

    def bound(self, max_n: int) -> int:
        return ceil(self.base_bound * max_n / DEFAULT_MAX_N)

    def instances(self, max_n: int = DEFAULT_MAX_N) -> list[tuple[int, ...]]:
        return list(self.domain(self.bound(max_n)))


def run_identity(spec: IdentitySpec, instance: tuple[int, ...]) -> CheckOutcome:
    if spec.check is not None:
        out = spec.check(*instance)
        return CheckOutcome(spec.id, tuple(zip(spec.params, instance)), out.lhs, out.rhs, out.passed)
    lhs = spec.lhs(*instance)
    rhs = spec.rhs(*instance)
    return CheckOutcome(spec.id, tuple(zip(spec.params, instance)), lhs, rhs, lhs == rhs)


def _upto(lo: int = 0):
    return lambda b: ((n,) for n in range(lo, b + 1))


# -- the identities ------------------------------------------------------

def _id2_lhs(k, l):
    return sum((-1) ** n * (2 * n + 1) * binomial(n + k, 2 * k) for n in range(k, l + 1))


def _id2_rhs(k, l):
    return (-1) ** l * (l - k + 1) * binomial(l + k + 1, 2 * k)


def _id3_lhs(k):
    return sum(binomial(n + k, n) * 2**n for n in range(k + 1))


def _id3_rhs(k):
    return (-1) ** (k + 1) - (-2) ** (k + 1) * sum(binomial(n + k, n) * (-1) ** n for n in range(k + 1))


def _id4_lhs(k):
    return sum((2 * n + k) * binomial(-k, n) for n in range(k))


def _id4_rhs(k):
    return Fraction((-1) ** (k - 1) * k * central_binomial(k), 2)


def _id5_lhs(k):
    return sum((-2) ** n * (n - k + 1) * binomial(-k, n) for n in range(k))


def _id5_rhs(k):
    inner = sum((2 * n - 2 * k + 1) * binomial(-k, n) for n in range(k))
    return (-1) ** (k + 1) * (3 * k - 1) - (-2) ** k * inner


def _id6_lhs(k):
    return sum((-2) ** n * (n + k + 1) * binomial(k, n) for n in range(k + 1))


def _id7_lhs(k):
    return sum((2 * n + 2 * k + 1) * binomial(k, n) for n in range(k + 1))


def _key1_lhs(m):
    return sum(Fraction((2 * n + 1) * convolution_direct(n), (-16) ** n) for n in range(m))


def _key1_rhs(m):
    c = central_binomials(m)
    return m * sum(
        Fraction(c[k] ** 2 * binomial(m - 1, k) * binomial(m + k, k), (-16) ** k) for k in range(m)
    )


def _key8_lhs(m):
    return sum(Fraction((n + 1) * convolution_direct(n), 8**n) for n in range(m))


def _key8_rhs(m):
    c = central_binomials(m)
    total = Fraction(0)
    for k in range(m):
        inner = sum((-2) ** n * (n + k + 1) * binomial(k, n) for n in range(m - k))
        total += Fraction(c[k] ** 3 * inner, 8**k)
    return total


def _hyper_form_rhs(n):
    return central_binomial(n) ** 2 * evaluate_truncated(convolution_hyper_spec(n))


def _transform(n):
    return check_transform(n, HALF, -n, HALF, 1, HALF - n, HALF - n)


def _transform_closed_lhs(n):
    prefactor = (pochhammer(-n, n) / pochhammer(HALF - n, n)) ** 2
    return prefactor * evaluate_truncated(HypergeometricSpec([-n, n + 1, HALF, HALF], [1, 1, 1], 1, n))


def _transform_closed_rhs(n):
    return Fraction(16**n, central_binomial(n) ** 2) * Fraction(convolution_via_id1(n), 16**n)


def _pairs(b):
    return ((k, l) for l in range(b + 1) for k in range(l + 1))


def _odd_upto(b):
    return ((m,) for m in range(1, b + 1, 2))


def _square(b):
    return product(range(b + 1), repeat=2)


def _registry() -> dict[str, IdentitySpec]:
    specs = [
        IdentitySpec("id1", ("n",), convolution_direct, convolution_via_id1, _upto(),
                     description="S(n) = 16^n sum_k C(n+k,k) C(n,k) C(2k,k)^2 / (-16)^k"),
        IdentitySpec("id2", ("k", "l"), _id2_lhs, _id2_rhs, _pairs, summary_by="l",
                     description="sum_{n=k}^{l} (-1)^n (2n+1) C(n+k,2k) = (-1)^l (l-k+1) C(l+k+1,2k)"),
        IdentitySpec("id3", ("k",), _id3_lhs, _id3_rhs, _upto(),
                     description="sum_n C(n+k,n) 2^n = (-1)^(k+1) - (-2)^(k+1) sum_n C(n+k,n) (-1)^n"),
        IdentitySpec("id4", ("k",), _id4_lhs, _id4_rhs, _upto(1),
                     description="sum_{n<k} (2n+k) C(-k,n) = (-1)^(k-1) k C(2k,k) / 2"),
        IdentitySpec("id5", ("k",), _id5_lhs, _id5_rhs, _upto(1),
                     description="sum_{n<k} (-2)^n (n-k+1) C(-k,n) = (-1)^(k+1)(3k-1) - (-2)^k sum_{n<k} (2n-2k+1) C(-k,n)"),
        IdentitySpec("id6", ("k",), _id6_lhs, lambda k: (-1) ** k * (3 * k + 1), _upto(),
                     description="sum_n (-2)^n (n+k+1) C(k,n) = (-1)^k (3k+1)"),
        IdentitySpec("id7", ("k",), _id7_lhs, lambda k: 2**k * (3 * k + 1), _upto(),
                     description="sum_n (2n+2k+1) C(k,n) = 2^k (3k+1)"),
        IdentitySpec("key1_exact", ("m",), _key1_lhs, _key1_rhs, _odd_upto, base_bound=40,
                     description="sum_{n<m} (2n+1) S(n)/(-16)^n = m sum_{k<m} C(2k,k)^2 C(m-1,k) C(m+k,k)/(-16)^k, m odd"),
        IdentitySpec("key8_exact", ("m",), _key8_lhs, _key8_rhs, _upto(1), base_bound=40,
                     description="sum_{n<m} (n+1) S(n)/8^n = sum_{k<m} C(2k,k)^3/8^k sum_{n<m-k} (-2)^n (n+k+1) C(k,n)"),
        IdentitySpec("hyper_form", ("n",), convolution_direct, _hyper_form_rhs, _upto(), base_bound=40,
                     description="S(n) = C(2n,n)^2 4F3[1/2,1/2,-n,-n; 1,1/2-n,1/2-n | 1]"),
        IdentitySpec("transform_4f3", ("n",), None, None, _upto(), base_bound=25, check=_transform,
                     description="terminating 4F3 transformation at a=c=1/2, b=-n, d=1, e=f=1/2-n"),
        IdentitySpec("transform_closed", ("n",), _transform_closed_lhs, _transform_closed_rhs, _upto(), base_bound=25,
                     description="(-n)_n^2/(1/2-n)_n^2 4F3[-n,n+1,1/2,1/2; 1,1,1 | 1] = 16^n/C(2n,n)^2 sum_k ..."),
        IdentitySpec("conv_id1", ("n",), convolution_direct, convolution_via_id1, _upto(), base_bound=100,
                     description="direct S(n) against the (-16)^k form"),
        IdentitySpec("conv_sun", ("n",), convolution_direct, convolution_via_sun, _upto(), base_bound=100,
                     description="direct S(n) against sum_k C(2k,k)^3 C(k,n-k) (-16)^(n-k)"),
        IdentitySpec("chaundy_bullard", ("n", "m"), None, None, _square, base_bound=12,
                     check=check_chaundy_bullard,
                     description="1 = (1-x)^(n+1) sum C(n+k,k) x^k + x^(m+1) sum C(m+k,k) (1-x)^k"),
    ]
    return {s.id: s for s in specs}


IDENTITIES: dict[str, IdentitySpec] = _registry()
