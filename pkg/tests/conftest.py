from fractions import Fraction

import pytest
from hypothesis import strategies as st


def rationals(max_num=10**6, max_den=10**4):
    return st.builds(Fraction, st.integers(-max_num, max_num), st.integers(1, max_den))


def trial_division_is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@pytest.fixture(scope="session")
def small_primes():
    return [p for p in range(5, 200) if trial_division_is_prime(p)]
