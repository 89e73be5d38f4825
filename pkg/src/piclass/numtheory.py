"""Small exact number-theory helpers: primes, factorizations, pi-parts."""

import math


def is_prime(n: int) -> bool:
    """Trial-division primality test, adequate for desk-scale orders."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    i = 3
    r = math.isqrt(n)
    while i <= r:
        if n % i == 0:
            return False
        i += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime divisors of n, ascending."""
    if n < 1:
        raise ValueError(f"expected a positive integer, got {n}")
    out = []
    if n % 2 == 0:
        out.append(2)
        while n % 2 == 0:
            n //= 2
    p = 3
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 2
    if n > 1:
        out.append(n)
    return out


def factorization(n: int) -> list[tuple[int, int]]:
    """Prime factorization as (prime, exponent) pairs, ascending."""
    out = []
    for p in prime_factors(n):
        e = 0
        m = n
        while m % p == 0:
            e += 1
            m //= p
        out.append((p, e))
    return out


def pi_part(n: int, pi: frozenset[int]) -> int:
    """Largest divisor of n whose prime factors all lie in pi."""
    if n < 1:
        raise ValueError(f"expected a positive integer, got {n}")
    out = 1
    for p in pi:
        while n % p == 0:
            n //= p
            out *= p
    return out


def is_pi_number(n: int, pi: frozenset[int]) -> bool:
    """True iff every prime factor of n lies in pi; 1 is a pi-number for every pi."""
    return pi_part(n, pi) == n


def validate_pi(pi, *, allow_empty: bool = False) -> frozenset[int]:
    """Normalize a prime-set argument, rejecting non-primes and duplicates by construction."""
    out = frozenset(pi)
    if not out and not allow_empty:
        raise ValueError("pi must be a non-empty set of primes")
    for p in out:
        if not isinstance(p, int) or not is_prime(p):
            raise ValueError(f"not a prime: {p!r}")
    return out
