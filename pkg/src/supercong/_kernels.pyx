# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for residues of C(2k,k) and S(n) modulo p^e.

Requires p^e < 2^63. Products are formed in 128 bits, so no intermediate
ever overflows. C(2k,k) is tracked as p^v * u with u a unit, which lets the
recurrence C(2k,k) = C(2k-2,k-1) (2k)(2k-1) / k^2 divide by k even when p | k.
"""

from libc.stdlib cimport malloc, free

ctypedef unsigned long long u64

cdef extern from *:
    """
    typedef unsigned __int128 sc_u128;
    static inline unsigned long long sc_mulmod(unsigned long long a,
                                               unsigned long long b,
                                               unsigned long long m) {
        return (unsigned long long)(((sc_u128)a * b) % m);
    }
    """
    u64 sc_mulmod(u64 a, u64 b, u64 m) nogil
    ctypedef long long i128 "__int128"

cdef u64 LIMIT = (<u64>1) << 63


cdef u64 _check_modulus(long long p, long long e) except 0:
    if p < 2 or e < 1:
        raise ValueError(f"bad prime power {p}^{e}")
    cdef object m = (<object>p) ** e
    if m >= LIMIT:
        raise OverflowError(f"{p}^{e} does not fit the compiled kernel")
    return <u64>m


cdef u64 _inverse(u64 a, u64 m) nogil:
    # extended Euclid on signed 128-bit values; a is a unit mod m
    cdef i128 t = 0, new_t = 1, r = m, new_r = a, q, tmp
    while new_r != 0:
        q = r / new_r
        tmp = t - q * new_t
        t = new_t
        new_t = tmp
        tmp = r - q * new_r
        r = new_r
        new_r = tmp
    if t < 0:
        t += m
    return <u64>t


cdef int _central_fill(u64 p, int e, u64 m, Py_ssize_t count, u64* out) nogil:
    cdef u64 unit = 1 % m, f, ppow
    cdef int v = 0, j
    cdef Py_ssize_t k
    if count > 0:
        out[0] = 1 % m
    for k in range(1, count):
        f = 2 * k
        while f % p == 0:
            f //= p
            v += 1
        unit = sc_mulmod(unit, f % m, m)
        f = 2 * k - 1
        while f % p == 0:
            f //= p
            v += 1
        unit = sc_mulmod(unit, f % m, m)
        f = k
        while f % p == 0:
            f //= p
            v -= 2
        f = _inverse(f % m, m)
        unit = sc_mulmod(unit, sc_mulmod(f, f, m), m)
        if v >= e:
            out[k] = 0
        else:
            ppow = 1
            for j in range(v):
                ppow *= p
            out[k] = sc_mulmod(unit, ppow, m)
    return 0


def central_binomials_mod(long long p, int e, Py_ssize_t count):
    """[C(2k,k) mod p^e for 0 <= k < count]."""
    cdef u64 m = _check_modulus(p, e)
    if count <= 0:
        return []
    cdef u64* buf = <u64*>malloc(count * sizeof(u64))
    if buf == NULL:
        raise MemoryError()
    try:
        with nogil:
            _central_fill(<u64>p, e, m, count, buf)
        return [buf[k] for k in range(count)]
    finally:
        free(buf)


def convolution_mod(long long p, int e, Py_ssize_t count):
    """[S(n) mod p^e for 0 <= n < count], S(n) = sum_k C(2k,k)^2 C(2n-2k,n-k)^2."""
    cdef u64 m = _check_modulus(p, e)
    if count <= 0:
        return []
    cdef u64* sq = <u64*>malloc(count * sizeof(u64))
    cdef u64* res = <u64*>malloc(count * sizeof(u64))
    cdef Py_ssize_t n, k
    cdef u64 acc
    if sq == NULL or res == NULL:
        free(sq)
        free(res)
        raise MemoryError()
    try:
        with nogil:
            _central_fill(<u64>p, e, m, count, sq)
            for k in range(count):
                sq[k] = sc_mulmod(sq[k], sq[k], m)
            for n in range(count):
                acc = 0
                for k in range((n + 1) // 2):
                    acc += sc_mulmod(sq[k], sq[n - k], m)
                    if acc >= m:
                        acc -= m
                acc = (acc + acc) % m
                if n % 2 == 0:
                    acc = (acc + sc_mulmod(sq[n // 2], sq[n // 2], m)) % m
                res[n] = acc
        return [res[n] for n in range(count)]
    finally:
        free(sq)
        free(res)
