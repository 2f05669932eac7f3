"""Exact integer arithmetic primitives for the key transform and the attack.

Everything is plain arbitrary-precision integer arithmetic; no floating
point enters any decision, so every predicate stays exact at any operand
size.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass


class NotInvertible(ValueError):
    """The modular inverse does not exist: gcd(a, m) > 1."""


@dataclass(frozen=True)
class ExtGcdResult:
    """gcd g of (a, b) together with Bezout coefficients: s*a + t*b == g."""

    g: int
    s: int
    t: int


def gcd(a: int, b: int) -> int:
    """Greatest common divisor; gcd(0, 0) == 0."""
    return math.gcd(a, b)


def ext_gcd(a: int, b: int) -> ExtGcdResult:
    """Extended Euclidean algorithm.

    Returns (g, s, t) with s*a + t*b == g == gcd(a, b), g >= 0.
    """
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return ExtGcdResult(old_r, old_s, old_t)


def mod_inv(a: int, m: int) -> int:
    """Inverse of a modulo m, in [1, m-1].

    Raises NotInvertible when gcd(a % m, m) != 1; in particular an inverse
    never exists modulo m for a multiple of any prime factor of m.
    """
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")
    r = ext_gcd(a % m, m)
    if r.g != 1:
        raise NotInvertible(f"{a} has no inverse modulo {m} (gcd = {r.g})")
    return r.s % m


def mod_pow(base: int, exp: int, m: int) -> int:
    """base**exp mod m for exp >= 0."""
    if exp < 0:
        raise ValueError(f"exponent must be nonnegative, got {exp}")
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")
    return pow(base, exp, m)


# Witness sets making Miller-Rabin deterministic below the given bounds
# (standard verified thresholds; the last row covers all n < 2**64).
_MR_TIERS = (
    (2047, (2,)),
    (1373653, (2, 3)),
    (9080191, (31, 73)),
    (25326001, (2, 3, 5)),
    (3215031751, (2, 3, 5, 7)),
    (4759123141, (2, 7, 61)),
    (1122004669633, (2, 13, 23, 1662803)),
    (3474749660383, (2, 3, 5, 7, 11, 13)),
    (341550071728321, (2, 3, 5, 7, 11, 13, 17)),
    (3825123056546413051, (2, 3, 5, 7, 11, 13, 17, 19, 23)),
    (1 << 64, (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)),
)

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)


def _mr_witness(n: int, a: int, d: int, s: int) -> bool:
    """True if a witnesses the compositeness of n, with n-1 = d * 2**s."""
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return False
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return False
    return True


def is_prime(n: int) -> bool:
    """Primality test.

    Deterministic for n < 2**64 (fixed witness tiers); for larger n, 64
    rounds of Miller-Rabin with witnesses drawn from a generator seeded by
    n itself, so the answer is still a pure function of the input and the
    error probability is below 2**-128.
    """
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    if n < _MR_TIERS[-1][0]:
        for bound, witnesses in _MR_TIERS:
            if n < bound:
                break
        return not any(_mr_witness(n, a, d, s) for a in witnesses)
    rng = random.Random(n)
    return not any(
        _mr_witness(n, rng.randrange(2, n - 1), d, s) for _ in range(64)
    )


def primes_up_to(limit: int) -> list[int]:
    """All primes <= limit, ascending (sieve of Eratosthenes)."""
    if limit < 2:
        return []
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, math.isqrt(limit) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(range(p * p, limit + 1, p)))
    return [i for i, flag in enumerate(sieve) if flag]


def nth_prime(x: int) -> int:
    """The x-th prime, 1-indexed: nth_prime(1) == 2."""
    if x < 1:
        raise ValueError(f"prime index must be >= 1, got {x}")
    if x < 6:
        return (2, 3, 5, 7, 11)[x - 1]
    # Rosser bound: the x-th prime is below x*(ln x + ln ln x) for x >= 6.
    bound = int(x * (math.log(x) + math.log(math.log(x)))) + 1
    return primes_up_to(bound)[x - 1]


def prime_index_leq(p: int) -> int:
    """Largest x with nth_prime(x) <= p (prime counting function)."""
    if p < 2:
        raise ValueError(f"argument must be >= 2, got {p}")
    return len(primes_up_to(p))


def next_prime_above(n: int) -> int:
    """Smallest prime strictly greater than n."""
    if n < 2:
        return 2
    if n == 2:
        return 3
    c = n + 1 if n % 2 == 0 else n + 2
    while not is_prime(c):
        c += 2
    return c


def pairwise_coprime(seq) -> bool:
    """True iff every pair of entries has gcd 1."""
    items = list(seq)
    for i, a in enumerate(items):
        for b in items[i + 1 :]:
            if math.gcd(a, b) != 1:
                return False
    return True


def _pollard_rho(n: int) -> int:
    """A nontrivial factor of odd composite n (Brent's cycle finding)."""
    if n % 2 == 0:
        return 2
    rng = random.Random(n)
    while True:
        c = rng.randrange(1, n)
        x = y = rng.randrange(2, n)
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = math.gcd(abs(x - y), n)
        if d != n:
            return d


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of n >= 1 as {prime: exponent}."""
    if n < 1:
        raise ValueError(f"argument must be >= 1, got {n}")
    factors: dict[int, int] = {}
    for p in _SMALL_PRIMES:
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            factors[m] = factors.get(m, 0) + 1
            continue
        d = _pollard_rho(m)
        stack.extend((d, m // d))
    return factors


def mult_order(w: int, m: int) -> int:
    """Least d >= 1 with w**d == 1 (mod m), for prime m and w in [1, m-1].

    The order divides m-1, so it is found by stripping prime factors from
    m-1 while the power stays 1.
    """
    if not 1 <= w <= m - 1:
        raise ValueError(f"base must lie in [1, {m - 1}], got {w}")
    d = m - 1
    for p in factorize(m - 1):
        while d % p == 0 and pow(w, d // p, m) == 1:
            d //= p
    return d


def dlog_bruteforce(base: int, target: int, m: int, cap: int):
    """Least e in [0, cap] with base**e == target (mod m), else None.

    Linear scan; meant for desk-scale moduli where exhaustion is cheap.
    """
    acc = 1 % m
    target %= m
    for e in range(cap + 1):
        if acc == target:
            return e
        acc = acc * base % m
    return None
