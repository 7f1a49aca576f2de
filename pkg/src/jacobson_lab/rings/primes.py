"""
Small-integer number theory used by ring construction and spec parsing.

Orders handled here are tiny (a graph is capped at a few thousand vertices),
so trial division is exact and fast enough.
"""

from typing import List, Optional, Tuple


def is_prime(n: int) -> bool:
    """Return True if n is a prime number."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def factorize(n: int) -> List[Tuple[int, int]]:
    """
    Factor n into prime powers.

    Args:
        n: Integer >= 2

    Returns:
        List of (prime, exponent) pairs in ascending prime order
    """
    if n < 2:
        raise ValueError(f"cannot factor {n}")
    factors: List[Tuple[int, int]] = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            k = 0
            while n % d == 0:
                n //= d
                k += 1
            factors.append((d, k))
        d += 1 if d == 2 else 2
    if n > 1:
        factors.append((n, 1))
    return factors


def prime_power(n: int) -> Optional[Tuple[int, int]]:
    """Return (p, k) with n == p**k, or None if n is not a prime power."""
    if n < 2:
        return None
    factors = factorize(n)
    if len(factors) != 1:
        return None
    return factors[0]
