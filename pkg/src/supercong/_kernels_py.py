"""Pure-Python kernels; same contract as the compiled ``_kernels`` module."""

from __future__ import annotations

from .arith import central_binomials


def central_binomials_mod(p: int, e: int, count: int) -> list[int]:
    """[C(2k,k) mod p^e for 0 <= k < count]."""
    m = p**e
    return [c % m for c in central_binomials(count)]


def convolution_mod(p: int, e: int, count: int) -> list[int]:
    """[S(n) mod p^e for 0 <= n < count], S(n) = sum_k C(2k,k)^2 C(2n-2k,n-k)^2."""
    m = p**e
    sq = [c * c % m for c in central_binomials_mod(p, e, count)]
    out = []
    for n in range(count):
        half = n // 2
        acc = 2 * sum(sq[k] * sq[n - k] for k in range((n + 1) // 2))
        if n % 2 == 0:
            acc += sq[half] * sq[half]
        out.append(acc % m)
    return out
