"""Exact verification of binomial-sum identities and supercongruences.

Identities are checked over the rationals; congruences are checked in
Z/p^eZ for every prime in a range.
"""

from .arith import (
    NotInvertible,
    PrimePower,
    Residue,
    binomial,
    factorial,
    mod_inverse,
    pochhammer,
    primes_between,
    reduce_rational,
)
from .congruences import CONGRUENCES, CongruenceSpec, NotOneModFour, TwoSquares, run_congruence, two_squares
from .engine import run_suite
from .hypergeo import (
    HypergeometricSpec,
    ZeroLowerPochhammer,
    check_chaundy_bullard,
    check_transform,
    convolution_direct,
    convolution_via_id1,
    convolution_via_sun,
    evaluate_truncated,
)
from .identities import IDENTITIES, IdentitySpec, run_identity
from .kernels import BACKEND
from .outcome import CheckOutcome, PreconditionViolated
from .sequences import EulerTable, euler_numbers, euler_polynomial, harmonic2

__version__ = "0.1.0"
