"""Prime enumeration and small multiplicative-function helpers."""

import math

import numpy as np

__all__ = ["primes_up_to", "primes_in", "von_mangoldt", "factorize",
           "is_squarefree", "mobius"]


def primes_up_to(n: int) -> np.ndarray:
    """All primes <= n via a bit sieve (int64 array, ascending)."""
    n = int(n)
    if n < 2:
        return np.zeros(0, dtype=np.int64)
    sieve = np.ones(n + 1, dtype=bool)
    sieve[:2] = False
    for p in range(2, int(math.isqrt(n)) + 1):
        if sieve[p]:
            sieve[p * p::p] = False
    return np.nonzero(sieve)[0].astype(np.int64)


def primes_in(a: float, b: float) -> np.ndarray:
    """Primes p with a < p < b (strict on both sides)."""
    if b <= 2:
        return np.zeros(0, dtype=np.int64)
    ps = primes_up_to(int(math.ceil(b)) - 1)
    return ps[(ps > a) & (ps < b)]


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization [(p, e), ...] by trial division."""
    n = int(n)
    if n < 1:
        raise ValueError("factorize requires n >= 1")
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return out


def von_mangoldt(n: int) -> float:
    """log p when n is a power of the prime p, else 0."""
    n = int(n)
    if n < 1:
        raise ValueError("von_mangoldt requires n >= 1")
    if n == 1:
        return 0.0
    f = factorize(n)
    return math.log(f[0][0]) if len(f) == 1 else 0.0


def is_squarefree(n: int) -> bool:
    return all(e == 1 for _, e in factorize(n))


def mobius(n: int) -> int:
    f = factorize(n)
    if any(e > 1 for _, e in f):
        return 0
    return -1 if len(f) % 2 else 1
