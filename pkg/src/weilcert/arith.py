"""Exact integer arithmetic primitives shared by the whole toolkit.

Primality, sieving, integer square roots, Legendre symbols, multiplicative
orders, squarefree kernels, and Hensel lifting of square roots. Every
operation here is exact: no floating point enters any arithmetic path.
Rationals are `fractions.Fraction` throughout the package.
"""

from __future__ import annotations

import math
import random
from typing import Iterator

import numpy as np

from .errors import ResourceLimitError

# Miller-Rabin with this fixed witness set is deterministic below the
# Sorenson-Webster bound; everything the toolkit searches over lives far
# below it.
_MR_DETERMINISTIC_BOUND = 3_317_044_064_679_887_385_961_981
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

# Above the deterministic bound: fixed-round strong-probable-prime test,
# bases drawn from an RNG seeded by the input (deterministic per input).
# A composite survives with probability < 4**-64.
_MR_LARGE_ROUNDS = 64

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)

DEFAULT_SIEVE_BUDGET = 200_000_000
DEFAULT_FACTOR_BOUND = 1_000_000


def _mr_composite_witness(n: int, a: int, d: int, r: int) -> bool:
    """True if base `a` witnesses that odd n = 2^r * d + 1 is composite."""
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return False
    for _ in range(r - 1):
        x = x * x % n
        if x == n - 1:
            return False
    return True


def is_prime(n: int) -> bool:
    """Primality test, deterministic for n < 3.3e24.

    Larger inputs get a 64-round strong-probable-prime test whose bases
    come from an RNG seeded by n, so results are reproducible and a
    composite escapes with probability below 4**-64.
    """
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n == p:
            return True
        if n % p == 0:
            return False
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    if n < _MR_DETERMINISTIC_BOUND:
        bases = _MR_WITNESSES
    else:
        rng = random.Random(n)
        bases = [rng.randrange(2, n - 1) for _ in range(_MR_LARGE_ROUNDS)]
    return not any(_mr_composite_witness(n, a, d, r) for a in bases)


class PrimeSieve:
    """Primality flags for the odd integers up to `limit` (2 kept aside).

    Supports O(1) membership tests, ordered iteration, and prefix counts.
    """

    __slots__ = ("limit", "_odd_flags", "_prime_array")

    def __init__(self, limit: int, budget: int = DEFAULT_SIEVE_BUDGET):
        if limit < 2:
            raise ValueError(f"sieve limit must be >= 2, got {limit}")
        if limit > budget:
            raise ResourceLimitError(
                f"sieve limit {limit} exceeds memory budget {budget}"
            )
        self.limit = limit
        # flags[i] covers the odd integer 2i+1; 1 is not prime
        flags = np.ones((limit + 1) // 2, dtype=bool)
        flags[0] = False
        for p in range(3, math.isqrt(limit) + 1, 2):
            if flags[p // 2]:
                flags[p * p // 2 :: p] = False
        self._odd_flags = flags
        self._prime_array: np.ndarray | None = None

    @property
    def primes(self) -> np.ndarray:
        """All primes <= limit as an ascending int64 array."""
        if self._prime_array is None:
            odd = 2 * np.flatnonzero(self._odd_flags).astype(np.int64) + 1
            self._prime_array = np.concatenate(([np.int64(2)], odd))
        return self._prime_array

    def __contains__(self, n: int) -> bool:
        if not 0 <= n <= self.limit:
            raise ValueError(f"{n} outside sieve range [0, {self.limit}]")
        if n % 2 == 0:
            return n == 2
        return bool(self._odd_flags[n // 2])

    def __iter__(self) -> Iterator[int]:
        return (int(p) for p in self.primes)

    def __len__(self) -> int:
        return len(self.primes)

    def count(self, x: int) -> int:
        """Number of primes <= x (x must not exceed the sieve limit)."""
        if x > self.limit:
            raise ValueError(f"count({x}) beyond sieve limit {self.limit}")
        if x < 2:
            return 0
        return int(np.searchsorted(self.primes, x, side="right"))


def sieve_primes(limit: int, budget: int = DEFAULT_SIEVE_BUDGET) -> PrimeSieve:
    """Sieve of Eratosthenes up to `limit` inclusive."""
    return PrimeSieve(limit, budget=budget)


def integer_sqrt(n: int) -> int:
    """Floor square root of a nonnegative integer, exact at any size."""
    if n < 0:
        raise ValueError(f"integer_sqrt of negative {n}")
    return math.isqrt(n)


def is_perfect_square(n: int) -> bool:
    if n < 0:
        return False
    r = math.isqrt(n)
    return r * r == n


def legendre_symbol(a: int, p: int) -> int:
    """Legendre symbol (a|p) in {-1, 0, 1} via the Euler criterion."""
    if p < 3 or p % 2 == 0 or not is_prime(p):
        raise ValueError(f"modulus {p} is not an odd prime")
    t = pow(a % p, (p - 1) // 2, p)
    if t == p - 1:
        return -1
    return t


def _factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division (intended for small inputs)."""
    factors: dict[int, int] = {}
    for p in (2, 3):
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
    f = 5
    while f * f <= n:
        for p in (f, f + 2):
            while n % p == 0:
                factors[p] = factors.get(p, 0) + 1
                n //= p
        f += 6
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def multiplicative_order(a: int, n: int) -> int:
    """Least k >= 1 with a^k = 1 (mod n).

    Starts from the Euler totient and strips prime factors, so it needs
    the factorization of n; fine for the small moduli this toolkit uses.
    """
    if n < 2:
        raise ValueError(f"modulus must be >= 2, got {n}")
    a %= n
    if math.gcd(a, n) != 1:
        raise ValueError(f"gcd({a}, {n}) != 1, order undefined")
    phi = 1
    for p, e in _factorize(n).items():
        phi *= (p - 1) * p ** (e - 1)
    order = phi
    for q in _factorize(phi):
        while order % q == 0 and pow(a, order // q, n) == 1:
            order //= q
    return order


def squarefree_kernel(n: int, bound: int = DEFAULT_FACTOR_BOUND) -> int:
    """The unique squarefree d with n = d * m^2, sign preserved.

    Trial-factors up to `bound`. A residual cofactor is then either prime,
    a perfect square (kernel 1), or, below bound^2, provably prime; anything
    else is ambiguous and raises rather than guessing.
    """
    if n == 0:
        raise ValueError("squarefree kernel of 0 is undefined")
    kernel = -1 if n < 0 else 1
    factors = _trial_factor(abs(n), bound)
    residual = factors.pop(0, 1)
    for p, e in factors.items():
        if e % 2:
            kernel *= p
    if residual > 1:
        if residual <= bound * bound or is_prime(residual):
            # <= bound^2 with no factor <= bound forces primality
            kernel *= residual
        elif is_perfect_square(residual):
            pass  # any perfect square contributes nothing squarefree
        else:
            raise ResourceLimitError(
                f"cannot resolve residual cofactor {residual} "
                f"(> {bound}^2, not prime, not square)"
            )
    return kernel


def _trial_factor(n: int, bound: int) -> dict[int, int]:
    """Factor by trial division up to `bound`; key 0 holds any residual
    cofactor whose factors all exceed the bound."""
    factors: dict[int, int] = {}
    for p in (2, 3):
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
    f = 5
    while f * f <= n and f <= bound:
        for p in (f, f + 2):
            while n % p == 0:
                factors[p] = factors.get(p, 0) + 1
                n //= p
        f += 6
    if n > 1:
        if f * f > n:
            factors[n] = factors.get(n, 0) + 1  # no divisor <= sqrt(n): prime
        else:
            factors[0] = n
    return factors


def sqrt_mod_prime(a: int, p: int) -> int:
    """A square root of a mod p (odd prime), canonicalized to min(t, p-t).

    Tonelli-Shanks; raises if a is not a quadratic residue.
    """
    if legendre_symbol(a, p) != 1:
        raise ValueError(f"{a} is not a nonzero square mod {p}")
    a %= p
    if p % 4 == 3:
        t = pow(a, (p + 1) // 4, p)
        return min(t, p - t)
    # write p - 1 = q * 2^s with q odd
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while legendre_symbol(z, p) != -1:
        z += 1
    m, c = s, pow(z, q, p)
    t, r = pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        t2 = t
        i = 0
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return min(r, p - r)


def hensel_sqrt(a: int, p: int, k: int) -> int:
    """The square root of a mod p^k lifting the canonical mod-p root.

    Newton iteration t -> (t + a/t)/2 doubles the precision each step;
    the result is the unique root in [0, p^k) congruent to
    sqrt_mod_prime(a, p) mod p, so precisions k and k+1 agree mod p^k.
    """
    if k < 1:
        raise ValueError(f"precision must be >= 1, got {k}")
    t = sqrt_mod_prime(a, p)  # validates residuosity and p
    prec = 1
    while prec < k:
        prec = min(2 * prec, k)
        mod = p**prec
        t = (t + a * pow(t, -1, mod)) * pow(2, -1, mod) % mod
    return t % p**k


def padic_valuation(n: int, p: int) -> int:
    """Exponent of p in n; raises for n = 0 (valuation infinite)."""
    if n == 0:
        raise ValueError("valuation of 0 is infinite")
    n = abs(n)
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v
