"""Square roots of unity modulo n: direct enumeration and the closed-form
count 2^a (n odd, a distinct prime divisors) respectively 2^(a + min(k, 2))
for n = 2^(k+1) * (2l+1) even, with a the number of distinct odd prime
divisors.  The enumeration is the independent oracle for the formula."""

from __future__ import annotations

import numpy as np

_MAX_N = 10 ** 7


def _check_n(n: int):
    if not isinstance(n, int) or n < 1:
        raise ValueError("n must be a positive integer")
    if n > _MAX_N:
        raise ValueError(f"n is capped at {_MAX_N} (desk scale)")


def square_roots_of_unity(n: int) -> list[int]:
    """All m in [1, n] with m^2 = 1 (mod n), by direct enumeration."""
    _check_n(n)
    if n == 1:
        return [1]
    m = np.arange(1, n + 1, dtype=np.int64)
    hits = m[(m * m) % n == 1]
    return [int(v) for v in hits]


def _distinct_odd_primes(n: int) -> int:
    count = 0
    p = 3
    while p * p <= n:
        if n % p == 0:
            count += 1
            while n % p == 0:
                n //= p
        p += 2
    if n > 1:
        count += 1
    return count


def predicted_count(n: int) -> int:
    """Closed-form number of square roots of unity modulo n."""
    _check_n(n)
    if n in (1, 2):
        return 1
    if n % 2 == 1:
        return 2 ** _distinct_odd_primes(n)
    k_plus_1 = 0
    odd = n
    while odd % 2 == 0:
        odd //= 2
        k_plus_1 += 1
    k = k_plus_1 - 1
    a = _distinct_odd_primes(odd)
    return 2 ** (a + min(k, 2))
